#include <catch_amalgamated.hpp>

#include "properties.hpp"

using namespace toroidal;
using namespace toroidal::testing;

TEST_CASE("digon contraction of the inessential C2", "[moves]") {
    MultiGraph c2(2, {{0, 1}, {0, 1}});
    SurfaceMap sphere(c2, std::vector<std::vector<DartId>>{{0, 2}, {1, 3}});
    // Inessential: one digon is a disc, the other carries the handle.
    SurfaceMap m(c2, sphere.rotations(), {FaceTag{{WalkRef::dart(sphere.walks()[0].darts.front())}, 1}});
    REQUIRE(m.genus() == 1);
    std::size_t disc = m.faces()[0].cellular() ? 0 : 1;
    MoveResult r = digon_contract(m, disc);
    CHECK(r.map.vertex_count() == 1);
    CHECK(r.map.edge_count() == 0);
    CHECK(map_isomorphic(r.map, named_map("G1_1")));
    CHECK_THROWS_AS(digon_contract(m, 1 - disc), std::invalid_argument);
}

TEST_CASE("split and contract are inverse", "[moves][property]") {
    std::mt19937_64 rng(31);
    int n_trials = trials();
    std::map<MoveKind, int> kinds;
    for (int t = 0; t < n_trials; ++t) {
        MoveKind kind{};
        REQUIRE(props::split_round_trip(rng, &kind) == "");
        ++kinds[kind];
    }
    CHECK(kinds[MoveKind::digon_split] > 0);
    CHECK(kinds[MoveKind::triangle_split] > 0);
    CHECK(kinds[MoveKind::quad_split] > 0);
}

TEST_CASE("at most one edge of a triangle face is blocked", "[moves][property]") {
    std::mt19937_64 rng(32);
    int n_trials = trials(), triangles = 0, with_block = 0;
    for (int t = 0; t < n_trials; ++t) REQUIRE(props::triangle_blocks(rng, &triangles, &with_block) == "");
    CHECK(triangles > n_trials / 2);
    CHECK(with_block > 0);
}

TEST_CASE("divalent additions keep sparsity", "[moves][property]") {
    std::mt19937_64 rng(33);
    for (int t = 0; t < 2000; ++t) {
        SurfaceMap m = random_tight_torus_map(rng, 1 + rng() % 6);
        std::size_t f = rng() % m.faces().size();
        std::vector<Corner> cs;
        for (std::size_t w : m.faces()[f].walks)
            for (const Corner& c : walk_corners(m, w)) cs.push_back(c);
        FaceSplit split;
        if (!m.faces()[f].cellular()) split = (rng() & 1) ? FaceSplit{} : FaceSplit{false, {}, 0};
        MoveResult r;
        try {
            r = henneberg_add(m, f, cs[rng() % cs.size()], cs[rng() % cs.size()], split);
        } catch (const std::invalid_argument&) {
            continue;
        }
        REQUIRE(r.map.genus() == 1);
        REQUIRE(brute_force_tight(r.map.graph(), 2));
        REQUIRE(canonical_code(apply_move(m, r.record)) == canonical_code(r.map));
        REQUIRE(map_isomorphic(delete_vertex(r.map, r.record.new_vertices.front()), m));
    }
}

TEST_CASE("completion to a tight map", "[moves]") {
    std::mt19937_64 rng(34);
    for (int t = 0; t < 300; ++t) {
        SurfaceMap m = random_tight_torus_map(rng, 3 + rng() % 5);
        // Delete a random edge, then complete again.
        SurfaceMap cut = delete_edge(m, m.graph().edges()[rng() % m.edge_count()].id);
        for (int l = 0; l <= 2; ++l) {
            if (!is_sparse(cut.graph(), l)) continue;
            std::vector<MoveRecord> log;
            SurfaceMap full = complete_to_tight(cut, l, &log);
            REQUIRE(brute_force_tight(full.graph(), l));
            REQUIRE(full.vertex_count() == cut.vertex_count());
            REQUIRE(static_cast<long long>(log.size()) == gamma(cut.graph()) - l);
        }
    }
}

TEST_CASE("move records survive JSON", "[moves][io]") {
    std::mt19937_64 rng(35);
    for (int t = 0; t < 500; ++t) {
        SurfaceMap m = random_tight_torus_map(rng, 2 + rng() % 6);
        MoveResult s = random_growth_move(m, rng, true);
        Json j = move_to_json(s.record);
        MoveRecord back = move_from_json(parse_json_text(j.dump()), "$");
        REQUIRE(move_to_json(back) == j);
        REQUIRE(canonical_code(apply_move(m, back)) == canonical_code(s.map));
    }
}
