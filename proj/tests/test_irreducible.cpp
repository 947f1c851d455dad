#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace toroidal;
using namespace toroidal::testing;

namespace {

MultiGraph k4() { return MultiGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

std::size_t count_irreducible(const std::vector<SurfaceMap>& maps) {
    return std::count_if(maps.begin(), maps.end(), [](const SurfaceMap& m) { return is_irreducible(m).irreducible; });
}

}  // namespace

TEST_CASE("named maps are irreducible with well-formed evidence", "[irreducible]") {
    for (const Drawing& d : named_irreducible_drawings()) {
        SurfaceMap m = drawing_map(d);
        INFO(d.name);
        REQUIRE(is_tight(m.graph(), 2));
        CHECK(m.genus() == 1);
        auto v = is_irreducible(m);
        CHECK(v.irreducible);
        CHECK_FALSE(v.reduction);
        CHECK(m.f(4) <= 2);
        for (const QuadEvidence& ev : v.quads) CHECK(check_quad_evidence(m, ev).empty());
        if (m.cellular()) {
            // Zero digons and triangles leave sum (i - 4) f_i = 4 over the larger faces.
            long long excess = 0;
            auto c = m.census();
            for (std::size_t i = 5; i < c.size(); ++i) excess += static_cast<long long>(i - 4) * static_cast<long long>(c[i]);
            CHECK(excess == 4);
        }
    }
}

TEST_CASE("reducible maps name their first contraction", "[irreducible]") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 300; ++t) {
        SurfaceMap m = random_tight_torus_map(rng, 3 + rng() % 6);
        auto v = is_irreducible(m);
        if (v.irreducible) {
            CHECK(no_small_faces(m));
            continue;
        }
        REQUIRE(v.reduction);
        CHECK(is_tight(v.reduction->map.graph(), 2));
        CHECK(v.reduction->map.vertex_count() + 1 == m.vertex_count());
    }
}

TEST_CASE("is_irreducible rejects maps that are not tight", "[irreducible]") {
    SurfaceMap m = named_map("essential-f");
    CHECK_THROWS_AS(is_irreducible(m), std::invalid_argument);
}

TEST_CASE("torus embeddings of small graphs", "[irreducible][embeddings]") {
    CHECK(enumerate_torus_embeddings(MultiGraph(1)).size() == 1);
    auto c2 = enumerate_torus_embeddings(MultiGraph(2, {{0, 1}, {0, 1}}));
    std::size_t essential = 0, inessential = 0;
    for (const SurfaceMap& m : c2) {
        REQUIRE_FALSE(m.cellular());
        auto e = classify_subgraph(m, whole_graph(m.graph()));
        (e == Essentiality::inessential ? inessential : essential)++;
    }
    CHECK(essential >= 1);
    CHECK(inessential >= 1);
    CHECK(count_irreducible(c2) == 1);
}

TEST_CASE("K4 has one irreducible torus map", "[irreducible][k4]") {
    auto maps = enumerate_torus_embeddings(k4());
    REQUIRE(count_irreducible(maps) == 1);
    for (const SurfaceMap& m : maps)
        if (is_irreducible(m).irreducible) CHECK(map_isomorphic(m, named_map("G4_1")));
}

TEST_CASE("K4 plus a divalent vertex has two irreducible torus maps", "[irreducible][k4]") {
    MultiGraph g = k4();
    VertexId x = g.add_vertex();
    g.add_edge(x, 0);
    g.add_edge(x, 1);
    REQUIRE(is_tight(g, 2));
    CHECK(count_irreducible(enumerate_torus_embeddings(g)) == 2);
}

TEST_CASE("blocker shapes classify to themselves", "[irreducible][blockers]") {
    BlockerClassifier classifier;
    for (const Drawing& d : blocker_shape_drawings()) {
        SurfaceMap m = drawing_map(d);
        Blocker b{BlockerKind::type2, whole_graph(m.graph()), {}, Diagonal::d13};
        CHECK(classifier.classify(m, b) == d.name);
    }
    SurfaceMap k4map = named_map("G4_1");
    Blocker whole{BlockerKind::type2, whole_graph(k4map.graph()), {}, Diagonal::d13};
    CHECK_THROWS_AS(classifier.classify(k4map, whole), std::domain_error);
    CHECK_FALSE(classifier.try_classify(k4map, whole));
}

TEST_CASE("tight subgraph enumeration agrees with the subset oracle", "[irreducible][oracle]") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 200; ++t) {
        SurfaceMap m = random_tight_torus_map(rng, 2 + rng() % 7);
        const MultiGraph& g = m.graph();
        std::size_t n = g.vertex_count(), want = 0;
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            std::vector<VertexId> vs;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1) vs.push_back(g.vertices()[i]);
            if (brute_force_tight(to_graph(induced_subgraph(g, vs)), 2)) ++want;
        }
        REQUIRE(tight_subgraphs(g).size() == want);
    }
}

TEST_CASE("sphere, plane and annulus checks at small scale", "[irreducible][surfaces]") {
    SurfaceCheckReport rep = sphere_plane_annulus_checks(5, 4);
    CHECK(rep.sphere_failures == 0);
    CHECK(rep.plane_failures == 0);
    CHECK(rep.sphere_maps > 0);
    // Expected classes built directly: K1 with both punctures in its face, C2 with one per face.
    SurfaceMap k1(MultiGraph(1), std::vector<std::vector<DartId>>{{}});
    std::vector<int> p1{2};
    MultiGraph c2(2, {{0, 1}, {0, 1}});
    SurfaceMap c2s(c2, std::vector<std::vector<DartId>>{{0, 2}, {1, 3}});
    std::vector<int> p2{1, 1};
    std::set<std::string> want{to_hex(canonical_code(k1, &p1)), to_hex(canonical_code(c2s, &p2))};
    std::set<std::string> got(rep.annulus_irreducibles.begin(), rep.annulus_irreducibles.end());
    CHECK(got == want);
}
