// Shared test helpers: brute-force oracles and random generators.

#ifndef TOROIDAL_TESTS_SUPPORT_HPP
#define TOROIDAL_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "toroidal/toroidal.hpp"

namespace toroidal::testing {

// Trial count for randomized suites; TOROIDAL_TRIALS overrides.
inline int trials(int fallback = 10000) {
    if (const char* s = std::getenv("TOROIDAL_TRIALS")) return std::max(1, std::atoi(s));
    return fallback;
}

// Subset minimization: the densest subgraph on a vertex set is the induced one.
inline bool brute_force_sparse(const MultiGraph& g, int l) {
    std::size_t n = g.vertex_count();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        long long v = 0, e = 0;
        for (std::size_t i = 0; i < n; ++i) v += (mask >> i) & 1;
        for (const Edge& ed : g.edges())
            if ((mask >> g.vertex_index(ed.u) & 1) && (mask >> g.vertex_index(ed.v) & 1)) ++e;
        if (2 * v - e < l) return false;
    }
    return true;
}

inline bool brute_force_tight(const MultiGraph& g, int l) { return gamma(g) == l && brute_force_sparse(g, l); }

// Tries every vertex bijection and compares multiplicity matrices.
inline bool brute_force_isomorphic(const MultiGraph& a, const MultiGraph& b) {
    std::size_t n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    auto matrix = [](const MultiGraph& g) {
        std::size_t k = g.vertex_count();
        std::vector<int> m(k * k, 0);
        for (const Edge& e : g.edges()) {
            std::size_t i = g.vertex_index(e.u), j = g.vertex_index(e.v);
            ++m[i * k + j];
            if (i != j) ++m[j * k + i];
        }
        return m;
    };
    auto ma = matrix(a), mb = matrix(b);
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j) ok = ma[i * n + j] == mb[p[i] * n + p[j]];
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

// Loopless multigraph with edge multiplicity at most 2.
template <class Rng>
MultiGraph random_multigraph(Rng& rng, std::size_t n, std::size_t m) {
    MultiGraph g(n);
    if (n < 2) return g;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int guard = 0; g.edge_count() < m && guard < 1000; ++guard) {
        VertexId a = static_cast<VertexId>(pick(rng)), b = static_cast<VertexId>(pick(rng));
        if (a != b && g.multiplicity(a, b) < 2) g.add_edge(a, b);
    }
    return g;
}

// Random relabeling of vertices and edges, with random edge orientation.
template <class Rng>
SurfaceMap relabel(const SurfaceMap& m, Rng& rng) {
    const MultiGraph& g = m.graph();
    std::vector<VertexId> vperm;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) vperm.push_back(static_cast<VertexId>(i));
    std::shuffle(vperm.begin(), vperm.end(), rng);
    std::vector<std::size_t> eorder(g.edge_count());
    std::iota(eorder.begin(), eorder.end(), 0);
    std::shuffle(eorder.begin(), eorder.end(), rng);

    MultiGraph h(g.vertex_count());
    std::map<DartId, DartId> dmap;
    for (std::size_t k = 0; k < eorder.size(); ++k) {
        const Edge& e = g.edges()[eorder[k]];
        bool flip = rng() & 1;
        VertexId u = vperm[g.vertex_index(e.u)], v = vperm[g.vertex_index(e.v)];
        EdgeId ne = flip ? h.add_edge(v, u) : h.add_edge(u, v);
        dmap[dart_of(e.id, 0)] = dart_of(ne, flip ? 1 : 0);
        dmap[dart_of(e.id, 1)] = dart_of(ne, flip ? 0 : 1);
    }
    std::map<VertexId, std::vector<DartId>> rot;
    for (VertexId v : g.vertices()) {
        auto& r = rot[vperm[g.vertex_index(v)]];
        for (DartId d : m.rotation(v)) r.push_back(dmap.at(d));
    }
    std::vector<FaceTag> tags;
    for (const Face& f : m.faces()) {
        if (f.cellular()) continue;
        FaceTag t{{}, f.genus};
        for (std::size_t w : f.walks) {
            const FaceWalk& fw = m.walks()[w];
            t.walks.push_back(fw.trivial() ? WalkRef::vertex(vperm[g.vertex_index(fw.vertex)]) : WalkRef::dart(dmap.at(fw.darts.front())));
        }
        tags.push_back(std::move(t));
    }
    return SurfaceMap(h, rot, tags);
}

// Random (2,2)-tight torus map on n vertices grown from K1 by splits and divalent additions.
template <class Rng>
SurfaceMap random_tight_torus_map(Rng& rng, std::size_t n) {
    SurfaceMap m = named_map("G1_1");
    while (m.vertex_count() < n) m = random_growth_move(m, rng, true).map;
    return m;
}

}  // namespace toroidal::testing

#endif  // TOROIDAL_TESTS_SUPPORT_HPP
