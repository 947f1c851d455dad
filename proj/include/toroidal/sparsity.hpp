/*
 * Copyright 2026 The toroidal authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef TOROIDAL_SPARSITY_HPP
#define TOROIDAL_SPARSITY_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "multigraph.hpp"

namespace toroidal {

inline void check_l(int l) {
    if (l < 0 || l > 2) throw std::invalid_argument("sparsity parameter l must be 0, 1 or 2, got " + std::to_string(l));
}

/**
 * The (2,l) pebble game on vertices 0..n-1.
 *
 * Every vertex starts with two pebbles. An accepted edge is covered by a
 * pebble taken from one endpoint and is oriented out of that endpoint, so
 * pebbles + out-degree = 2 at every vertex. An edge uv is accepted iff l+1
 * pebbles can be gathered on {u, v}. Searches visit out-neighbours in
 * increasing index order.
 */
class PebbleGame {
public:
    PebbleGame(std::size_t n, int l) : l_(l), pebbles_(n, 2), out_(n) { check_l(l); }

    std::size_t size() const { return pebbles_.size(); }
    int pebbles(std::size_t v) const { return pebbles_[v]; }

    // Would uv be independent of the accepted edges? Reorients but never adds.
    bool can_insert(std::size_t u, std::size_t v) { return gather(u, v); }

    bool insert(std::size_t u, std::size_t v) {
        if (!gather(u, v)) return false;
        std::size_t tail = pebbles_[u] > 0 ? u : v;
        --pebbles_[tail];
        add_arc(tail, tail == u ? v : u);
        ++accepted_;
        return true;
    }

    std::size_t accepted() const { return accepted_; }

private:
    bool gather(std::size_t u, std::size_t v) {
        if (u == v) {
            while (pebbles_[u] < l_ + 1)
                if (!find_pebble(u, u, v)) return false;
            return true;
        }
        while (pebbles_[u] + pebbles_[v] < l_ + 1) {
            if (find_pebble(u, u, v)) continue;
            if (find_pebble(v, u, v)) continue;
            return false;
        }
        return true;
    }

    // Depth-first search from `root` for a free pebble on a vertex other than
    // a and b; on success the path is reversed and the pebble moves to root.
    bool find_pebble(std::size_t root, std::size_t a, std::size_t b) {
        std::size_t n = pebbles_.size();
        std::vector<std::size_t> from(n, SIZE_MAX);
        std::vector<char> seen(n, 0);
        seen[a] = seen[b] = 1;
        seen[root] = 1;
        std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
        while (!stack.empty()) {
            auto& [x, i] = stack.back();
            if (i == out_[x].size()) {
                stack.pop_back();
                continue;
            }
            std::size_t y = out_[x][i++];
            if (seen[y]) continue;
            seen[y] = 1;
            from[y] = x;
            if (pebbles_[y] > 0) {
                for (std::size_t w = y; w != root; w = from[w]) {
                    remove_arc(from[w], w);
                    add_arc(w, from[w]);
                }
                --pebbles_[y];
                ++pebbles_[root];
                return true;
            }
            stack.emplace_back(y, 0);
        }
        return false;
    }

    void add_arc(std::size_t x, std::size_t y) {
        auto& o = out_[x];
        o.insert(std::upper_bound(o.begin(), o.end(), y), y);
    }
    void remove_arc(std::size_t x, std::size_t y) {
        auto& o = out_[x];
        o.erase(std::lower_bound(o.begin(), o.end(), y));
    }

    int l_;
    std::vector<int> pebbles_;
    std::vector<std::vector<std::size_t>> out_;
    std::size_t accepted_ = 0;
};

// Plays every edge of g; returns the game so callers can probe further edges.
inline PebbleGame play(const MultiGraph& g, int l, bool* all_accepted = nullptr) {
    PebbleGame game(g.vertex_count(), l);
    bool ok = true;
    for (const Edge& e : g.edges())
        if (!game.insert(g.vertex_index(e.u), g.vertex_index(e.v))) ok = false;
    if (all_accepted) *all_accepted = ok;
    return game;
}

inline bool is_sparse(const MultiGraph& g, int l) {
    check_l(l);
    // Cheap global rejections before the game.
    for (const Edge& e : g.edges())
        if (e.is_loop() && l == 2) return false;
    bool ok = false;
    play(g, l, &ok);
    return ok;
}

inline bool is_tight(const MultiGraph& g, int l) {
    check_l(l);
    return gamma(g) == l && is_sparse(g, l);
}

inline bool is_sparse(const SubgraphRef& s, int l) { return is_sparse(to_graph(s), l); }
inline bool is_tight(const SubgraphRef& s, int l) { return is_tight(to_graph(s), l); }

/**
 * The inclusion-maximal tight subgraph containing every seed vertex, if any.
 * Tight subgraphs sharing a vertex are closed under union, so it is unique.
 * Requires g to be (2,l)-sparse.
 */
inline std::optional<SubgraphRef> maximal_tight_subgraph_containing(const MultiGraph& g, int l,
                                                                    const std::vector<VertexId>& seed) {
    check_l(l);
    if (seed.empty()) throw std::invalid_argument("empty seed");
    for (VertexId v : seed)
        if (!g.has_vertex(v)) throw std::invalid_argument("seed vertex " + std::to_string(v) + " not in graph");
    bool ok = false;
    PebbleGame game = play(g, l, &ok);
    if (!ok) throw std::invalid_argument("maximal_tight_subgraph_containing needs a sparse graph");
    std::size_t s0 = g.vertex_index(seed.front());
    // A loop at s0 is dependent iff some tight subgraph contains s0.
    if (game.can_insert(s0, s0)) return std::nullopt;
    std::vector<VertexId> members{seed.front()};
    for (std::size_t w = 0; w < g.vertex_count(); ++w)
        if (w != s0 && !game.can_insert(s0, w)) members.push_back(g.vertices()[w]);
    std::sort(members.begin(), members.end());
    for (VertexId v : seed)
        if (!std::binary_search(members.begin(), members.end(), v)) return std::nullopt;
    SubgraphRef t = induced_subgraph(g, members);
    if (gamma(t) != l) throw std::logic_error("maximal tight subgraph has wrong count");
    return t;
}

// ---------------------------------------------------------------------------
// Graph-level contractions used by the embedding-preserving moves.

// (G/e1) - e2 for a digon or triangle with e1 = v1v2 and e2 at v2.
inline MultiGraph contract_then_delete(const MultiGraph& g, EdgeId e1, EdgeId e2) {
    MultiGraph h = contract_edge(g, e1);
    h.erase_edge(e2);
    return h;
}

/**
 * A closed walk v1 e1 v2 e2 v3 e3 v4 e4 v1 bounding a quadrilateral face.
 * e[i] joins v[i] and v[(i+1) % 4].
 */
struct QuadContext {
    std::array<VertexId, 4> v;
    std::array<EdgeId, 4> e;
    friend bool operator==(const QuadContext&, const QuadContext&) = default;
};

enum class Diagonal { d13, d24 };

// The same walk read from v2, so diagonal 24 becomes diagonal 13.
inline QuadContext rotate(const QuadContext& q) {
    return QuadContext{{q.v[1], q.v[2], q.v[3], q.v[0]}, {q.e[1], q.e[2], q.e[3], q.e[0]}};
}

inline QuadContext oriented(const QuadContext& q, Diagonal d) { return d == Diagonal::d13 ? q : rotate(q); }

inline bool diagonal_degenerate(const QuadContext& q, Diagonal d) {
    QuadContext o = oriented(q, d);
    return o.v[0] == o.v[2] || o.e[0] == o.e[2];
}

/**
 * (G + d)/d - {e1, e3} on the chosen diagonal: the diagonal endpoints are
 * identified (smaller id survives) and the two opposite edges deleted.
 */
inline MultiGraph quad_contract_graph(const MultiGraph& g, const QuadContext& q, Diagonal d) {
    QuadContext o = oriented(q, d);
    if (o.v[0] == o.v[2]) throw std::invalid_argument("degenerate diagonal");
    if (o.e[0] == o.e[2]) throw std::invalid_argument("opposite edges coincide");
    VertexId keep = std::min(o.v[0], o.v[2]), gone = std::max(o.v[0], o.v[2]);
    MultiGraph h = identify_vertices(g, keep, gone);
    h.erase_edge(o.e[0]);
    h.erase_edge(o.e[2]);
    return h;
}

enum class BlockerKind { type1, type2 };

struct Blocker {
    BlockerKind kind;
    SubgraphRef subgraph;
    QuadContext quad;
    Diagonal diagonal;
};

/**
 * Witnesses that contracting the quadrilateral on the given diagonal breaks
 * (2,2)-sparsity. Empty iff the contraction stays sparse.
 *
 * Returned, when they exist: the maximal type-1 blocker containing v2, the
 * maximal type-1 blocker containing v4, and the maximal type-2 blocker. The
 * type-2 witness is only computed when no type-1 blocker exists; that is
 * exactly the situation in which type-2 blockers are closed under union.
 */
inline std::vector<Blocker> find_blockers(const MultiGraph& g, const QuadContext& q, Diagonal diag) {
    if (!is_sparse(g, 2)) throw std::invalid_argument("find_blockers needs a (2,2)-sparse graph");
    QuadContext o = oriented(q, diag);
    if (o.v[0] == o.v[2]) throw std::invalid_argument("degenerate diagonal");
    if (is_sparse(quad_contract_graph(g, q, diag), 2)) return {};

    VertexId a = o.v[0], b = o.v[1], c = o.v[2], d = o.v[3];
    std::vector<Blocker> out;
    auto keep_without = [&](std::vector<VertexId> drop) {
        MultiGraph h = g;
        for (VertexId x : drop) h.erase_vertex(x);
        return h;
    };
    if (b != d) {
        for (auto [inside, outside] : {std::pair{b, d}, std::pair{d, b}}) {
            MultiGraph h = keep_without({outside});
            auto t = maximal_tight_subgraph_containing(h, 2, {a, c});
            if (t && t->contains_vertex(inside))
                out.push_back(Blocker{BlockerKind::type1, induced_subgraph(g, t->vertices), q, diag});
        }
    }
    if (out.empty()) {
        std::vector<VertexId> drop{b};
        if (d != b) drop.push_back(d);
        MultiGraph h = keep_without(drop);
        h.add_edge(a, c);
        if (is_sparse(h, 2)) {
            auto t = maximal_tight_subgraph_containing(h, 2, {a, c});
            if (t) out.push_back(Blocker{BlockerKind::type2, induced_subgraph(g, t->vertices), q, diag});
        }
    }
    if (out.empty()) throw std::logic_error("contraction not sparse but no blocker found");
    return out;
}

/**
 * Witness for a blocked triangle contraction G_{T,e1}: the maximal tight
 * subgraph containing v1 and v2 but not v3. Empty when G - v3 has none.
 */
inline std::optional<SubgraphRef> find_triangle_blocker(const MultiGraph& g, VertexId v1, VertexId v2, VertexId v3) {
    MultiGraph h = g;
    h.erase_vertex(v3);
    auto t = maximal_tight_subgraph_containing(h, 2, {v1, v2});
    if (!t) return std::nullopt;
    return induced_subgraph(g, t->vertices);
}

}  // namespace toroidal

#endif  // TOROIDAL_SPARSITY_HPP
