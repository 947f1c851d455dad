#include <catch_amalgamated.hpp>

#include <set>

#include "properties.hpp"

using namespace toroidal;
using namespace toroidal::testing;

TEST_CASE("parallel edges keep distinct stable ids", "[multigraph]") {
    MultiGraph g(3);
    EdgeId a = g.add_edge(0, 1), b = g.add_edge(0, 1), c = g.add_edge(1, 2);
    CHECK(a != b);
    CHECK(g.multiplicity(0, 1) == 2);
    CHECK(g.degree(1) == 3);
    g.erase_edge(a);
    CHECK(g.has_edge(b));
    CHECK(g.edge(c).u == 1);
    CHECK(g.add_edge(2, 0) == 3);  // ids are never reused
    CHECK_THROWS_AS(g.add_edge(0, 7), std::invalid_argument);
    CHECK_THROWS_AS(g.erase_edge(a), std::invalid_argument);
}

TEST_CASE("erasing a vertex removes its edges only", "[multigraph]") {
    MultiGraph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    g.erase_vertex(1);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_vertex(3));
    CHECK_FALSE(g.has_vertex(1));
}

TEST_CASE("edge contraction", "[multigraph]") {
    MultiGraph g(3, {{0, 1}, {0, 1}, {1, 2}, {0, 2}});
    MultiGraph h = contract_edge(g, 0);
    CHECK(h.vertex_count() == 2);
    CHECK(h.edge_count() == 3);
    CHECK(h.has_loop());  // the parallel copy of the contracted edge
    CHECK(h.multiplicity(0, 2) == 2);
    CHECK_THROWS_AS(contract_edge(h, 1), std::invalid_argument);
}

TEST_CASE("gamma and connectivity", "[multigraph]") {
    CHECK(gamma(MultiGraph(1)) == 2);
    CHECK(gamma(MultiGraph(2, {{0, 1}, {0, 1}})) == 2);
    CHECK(is_connected(MultiGraph(1)));
    CHECK_FALSE(is_connected(MultiGraph(2)));
    CHECK(min_degree(MultiGraph(3, {{0, 1}, {1, 2}, {2, 0}})) == 2);
}

TEST_CASE("subgraph references validate their ids", "[multigraph]") {
    MultiGraph g(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(make_subgraph(g, {0}, {0}), std::invalid_argument);
    SubgraphRef s = induced_subgraph(g, {1, 0});
    CHECK(s.vertices == std::vector<VertexId>{0, 1});
    CHECK(s.edges == std::vector<EdgeId>{0});
}

TEST_CASE("inclusion-exclusion for gamma on random subgraph pairs", "[multigraph][property]") {
    std::mt19937_64 rng(101);
    int n_trials = trials();
    for (int t = 0; t < n_trials; ++t) REQUIRE(props::inclusion_exclusion(rng) == "");
}

TEST_CASE("graph canonical codes agree with brute-force isomorphism", "[multigraph][canon]") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 3000; ++t) {
        std::size_t n = 1 + rng() % 6, m = rng() % 11;
        MultiGraph a = random_multigraph(rng, n, m);
        // Half of the pairs are relabeled copies.
        MultiGraph b;
        if (t % 2) {
            std::vector<VertexId> p(n);
            std::iota(p.begin(), p.end(), 0);
            std::shuffle(p.begin(), p.end(), rng);
            b = MultiGraph(n);
            std::vector<Edge> es = a.edges();
            std::shuffle(es.begin(), es.end(), rng);
            for (const Edge& e : es) b.add_edge(p[e.v], p[e.u]);
        } else {
            b = random_multigraph(rng, n, m);
        }
        bool brute = brute_force_isomorphic(a, b);
        REQUIRE(graphs_isomorphic(a, b) == brute);
        REQUIRE((graph_canonical_code(a) == graph_canonical_code(b)) == brute);
    }
}

TEST_CASE("canonical codes of disconnected and symmetric graphs", "[multigraph][canon][oracle]") {
    std::mt19937_64 rng(103);
    // Unions of small pieces: many components and many twins.
    auto pieces = [&](std::size_t k) {
        MultiGraph g;
        for (std::size_t i = 0; i < k; ++i) {
            VertexId a = g.add_vertex(), b = g.add_vertex();
            g.add_edge(a, b);
            if (rng() % 3 == 0) g.add_edge(a, b);
            if (rng() % 3 == 0) g.add_edge(b, g.add_vertex());
        }
        return g;
    };
    for (int t = 0; t < 300; ++t) {
        MultiGraph a = pieces(1 + rng() % 3), b = pieces(1 + rng() % 3);
        if (a.vertex_count() > 8 || b.vertex_count() > 8) continue;
        REQUIRE(graphs_isomorphic(a, b) == brute_force_isomorphic(a, b));
    }
    MultiGraph matching(16), star(9);
    for (VertexId v = 0; v < 16; v += 2) matching.add_edge(v, v + 1);
    for (VertexId v = 1; v < 9; ++v) star.add_edge(0, v);
    MultiGraph shuffled(16);
    std::vector<VertexId> p(16);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    for (VertexId v = 0; v < 16; v += 2) shuffled.add_edge(p[v], p[v + 1]);
    CHECK(graphs_isomorphic(matching, shuffled));
    CHECK_FALSE(graphs_isomorphic(matching, star));
}

namespace {

// Every loopless multigraph on n vertices with 2n-2 edges and multiplicity <= 2,
// filtered by the subset oracle and deduplicated by brute-force isomorphism.
std::vector<MultiGraph> brute_force_tight_graphs(std::size_t n) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b) pairs.push_back({a, b});
    std::size_t want = 2 * n - 2;
    std::vector<MultiGraph> classes;
    std::vector<int> mult(pairs.size(), 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
        if (i == pairs.size()) {
            if (used != want) return;
            MultiGraph g(n);
            for (std::size_t k = 0; k < pairs.size(); ++k)
                for (int c = 0; c < mult[k]; ++c) g.add_edge(pairs[k].first, pairs[k].second);
            if (!brute_force_tight(g, 2)) return;
            for (const MultiGraph& h : classes)
                if (brute_force_isomorphic(g, h)) return;
            classes.push_back(g);
            return;
        }
        for (int c = 0; c <= 2 && used + c <= want; ++c) {
            mult[i] = c;
            rec(i + 1, used + c);
        }
        mult[i] = 0;
    };
    rec(0, 0);
    return classes;
}

}  // namespace

TEST_CASE("tight graph enumeration matches the brute-force oracle", "[multigraph][enumeration]") {
    auto graphs = enumerate_tight_graphs(5);
    std::map<std::size_t, std::size_t> by_n;
    for (const MultiGraph& g : graphs) {
        ++by_n[g.vertex_count()];
        REQUIRE(is_tight(g, 2));
    }
    for (std::size_t n = 1; n <= 5; ++n) {
        INFO("n = " << n);
        CHECK(by_n[n] == brute_force_tight_graphs(n).size());
    }
    std::set<std::vector<std::uint8_t>> codes;
    for (const MultiGraph& g : graphs) codes.insert(graph_canonical_code(g));
    CHECK(codes.size() == graphs.size());
}

TEST_CASE("tight graphs on at most four vertices", "[multigraph][enumeration]") {
    CHECK(enumerate_tight_graphs(1).size() == 1);
    auto two = enumerate_tight_graphs(2);
    REQUIRE(two.size() == 2);
    CHECK(two[1].edge_count() == 2);
    CHECK(enumerate_tight_graphs(4).size() == 13);
}
