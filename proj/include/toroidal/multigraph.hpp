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

#ifndef TOROIDAL_MULTIGRAPH_HPP
#define TOROIDAL_MULTIGRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace toroidal {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
    EdgeId id;
    VertexId u;
    VertexId v;

    bool is_loop() const { return u == v; }
    VertexId other(VertexId x) const { return x == u ? v : u; }
    bool incident(VertexId x) const { return x == u || x == v; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

/**
 * Finite undirected multigraph with stable vertex and edge ids.
 *
 * Ids are handed out densely (next id = one past the largest ever issued) and
 * are never reused or renumbered by removal or contraction.
 */
class MultiGraph {
public:
    MultiGraph() = default;

    explicit MultiGraph(std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) add_vertex();
    }

    MultiGraph(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> edges)
        : MultiGraph(n) {
        for (auto [a, b] : edges) add_edge(a, b);
    }

    VertexId add_vertex() {
        VertexId id = next_vertex_++;
        vertices_.push_back(id);
        return id;
    }

    void insert_vertex(VertexId id) {
        auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
        if (it != vertices_.end() && *it == id)
            throw std::invalid_argument("duplicate vertex id " + std::to_string(id));
        vertices_.insert(it, id);
        next_vertex_ = std::max(next_vertex_, id + 1);
    }

    EdgeId add_edge(VertexId u, VertexId v) {
        EdgeId id = next_edge_;
        insert_edge(id, u, v);
        return id;
    }

    void insert_edge(EdgeId id, VertexId u, VertexId v) {
        if (!has_vertex(u) || !has_vertex(v))
            throw std::invalid_argument("edge endpoint is not a vertex");
        auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                                   [](const Edge& e, EdgeId x) { return e.id < x; });
        if (it != edges_.end() && it->id == id)
            throw std::invalid_argument("duplicate edge id " + std::to_string(id));
        edges_.insert(it, Edge{id, u, v});
        next_edge_ = std::max(next_edge_, id + 1);
    }

    void erase_edge(EdgeId id) {
        auto it = find_edge(id);
        if (it == edges_.end()) throw std::invalid_argument("no edge " + std::to_string(id));
        edges_.erase(it);
    }

    // Removes the vertex together with every incident edge.
    void erase_vertex(VertexId id) {
        auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
        if (it == vertices_.end() || *it != id)
            throw std::invalid_argument("no vertex " + std::to_string(id));
        vertices_.erase(it);
        std::erase_if(edges_, [id](const Edge& e) { return e.incident(id); });
    }

    // Reattaches one endpoint of an edge; used by contraction.
    void reattach(EdgeId id, VertexId from, VertexId to) {
        auto it = find_edge(id);
        if (it == edges_.end()) throw std::invalid_argument("no edge " + std::to_string(id));
        if (it->u == from) it->u = to;
        else if (it->v == from) it->v = to;
        else throw std::invalid_argument("edge not incident to vertex");
    }

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool empty() const { return vertices_.empty(); }

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_vertex(VertexId id) const {
        return std::binary_search(vertices_.begin(), vertices_.end(), id);
    }
    bool has_edge(EdgeId id) const { return find_edge(id) != edges_.end(); }

    const Edge& edge(EdgeId id) const {
        auto it = find_edge(id);
        if (it == edges_.end()) throw std::invalid_argument("no edge " + std::to_string(id));
        return *it;
    }

    std::size_t vertex_index(VertexId id) const {
        auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
        if (it == vertices_.end() || *it != id)
            throw std::invalid_argument("no vertex " + std::to_string(id));
        return static_cast<std::size_t>(it - vertices_.begin());
    }

    std::size_t edge_index(EdgeId id) const {
        auto it = find_edge(id);
        if (it == edges_.end()) throw std::invalid_argument("no edge " + std::to_string(id));
        return static_cast<std::size_t>(it - edges_.begin());
    }

    // Loops contribute 2.
    std::size_t degree(VertexId x) const {
        std::size_t d = 0;
        for (const Edge& e : edges_) d += (e.u == x) + (e.v == x);
        return d;
    }

    std::size_t multiplicity(VertexId a, VertexId b) const {
        std::size_t m = 0;
        for (const Edge& e : edges_)
            if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) ++m;
        return m;
    }

    std::vector<EdgeId> incident_edges(VertexId x) const {
        std::vector<EdgeId> out;
        for (const Edge& e : edges_)
            if (e.incident(x)) out.push_back(e.id);
        return out;
    }

    bool has_loop() const {
        return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
    }

    VertexId next_vertex_id() const { return next_vertex_; }
    EdgeId next_edge_id() const { return next_edge_; }

    friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    std::vector<Edge>::const_iterator find_edge(EdgeId id) const {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                                   [](const Edge& e, EdgeId x) { return e.id < x; });
        return (it != edges_.end() && it->id == id) ? it : edges_.end();
    }
    std::vector<Edge>::iterator find_edge(EdgeId id) {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                                   [](const Edge& e, EdgeId x) { return e.id < x; });
        return (it != edges_.end() && it->id == id) ? it : edges_.end();
    }

    std::vector<VertexId> vertices_;
    std::vector<Edge> edges_;
    VertexId next_vertex_ = 0;
    EdgeId next_edge_ = 0;
};

inline long long gamma(const MultiGraph& g) {
    return 2 * static_cast<long long>(g.vertex_count()) - static_cast<long long>(g.edge_count());
}

/**
 * A subgraph of a parent graph, held as sorted id sets.
 *
 * The parent is referenced, not owned; it must outlive the reference.
 */
struct SubgraphRef {
    const MultiGraph* parent = nullptr;
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;

    bool empty() const { return vertices.empty(); }
    bool contains_vertex(VertexId v) const {
        return std::binary_search(vertices.begin(), vertices.end(), v);
    }
    bool contains_edge(EdgeId e) const { return std::binary_search(edges.begin(), edges.end(), e); }
    friend bool operator==(const SubgraphRef& a, const SubgraphRef& b) {
        return a.parent == b.parent && a.vertices == b.vertices && a.edges == b.edges;
    }
};

inline long long gamma(const SubgraphRef& s) {
    return 2 * static_cast<long long>(s.vertices.size()) - static_cast<long long>(s.edges.size());
}

// Builds a validated subgraph reference; ids need not be sorted.
inline SubgraphRef make_subgraph(const MultiGraph& g, std::vector<VertexId> vs, std::vector<EdgeId> es) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    for (VertexId v : vs)
        if (!g.has_vertex(v)) throw std::invalid_argument("subgraph vertex not in parent");
    for (EdgeId e : es) {
        const Edge& ed = g.edge(e);
        if (!std::binary_search(vs.begin(), vs.end(), ed.u) || !std::binary_search(vs.begin(), vs.end(), ed.v))
            throw std::invalid_argument("subgraph edge endpoint not kept");
    }
    return SubgraphRef{&g, std::move(vs), std::move(es)};
}

inline SubgraphRef whole_graph(const MultiGraph& g) {
    std::vector<EdgeId> es;
    for (const Edge& e : g.edges()) es.push_back(e.id);
    return SubgraphRef{&g, g.vertices(), std::move(es)};
}

// The subgraph spanned by a vertex set: all parent edges with both ends inside.
inline SubgraphRef induced_subgraph(const MultiGraph& g, std::vector<VertexId> vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    std::vector<EdgeId> es;
    for (const Edge& e : g.edges())
        if (std::binary_search(vs.begin(), vs.end(), e.u) && std::binary_search(vs.begin(), vs.end(), e.v))
            es.push_back(e.id);
    return make_subgraph(g, std::move(vs), std::move(es));
}

inline SubgraphRef unite(const SubgraphRef& a, const SubgraphRef& b) {
    if (a.parent != b.parent) throw std::invalid_argument("subgraphs of different parents");
    SubgraphRef r{a.parent, {}, {}};
    std::set_union(a.vertices.begin(), a.vertices.end(), b.vertices.begin(), b.vertices.end(),
                   std::back_inserter(r.vertices));
    std::set_union(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(), std::back_inserter(r.edges));
    return r;
}

inline SubgraphRef intersect(const SubgraphRef& a, const SubgraphRef& b) {
    if (a.parent != b.parent) throw std::invalid_argument("subgraphs of different parents");
    SubgraphRef r{a.parent, {}, {}};
    std::set_intersection(a.vertices.begin(), a.vertices.end(), b.vertices.begin(), b.vertices.end(),
                          std::back_inserter(r.vertices));
    std::set_intersection(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
                          std::back_inserter(r.edges));
    return r;
}

// Materializes a subgraph as a standalone graph keeping the parent's ids.
inline MultiGraph to_graph(const SubgraphRef& s) {
    MultiGraph h;
    for (VertexId v : s.vertices) h.insert_vertex(v);
    for (EdgeId e : s.edges) {
        const Edge& ed = s.parent->edge(e);
        h.insert_edge(e, ed.u, ed.v);
    }
    return h;
}

// Merges vertex `gone` into `keep`; every edge between them becomes a loop.
inline MultiGraph identify_vertices(const MultiGraph& g, VertexId keep, VertexId gone) {
    if (keep == gone) return g;
    MultiGraph h;
    for (VertexId v : g.vertices())
        if (v != gone) h.insert_vertex(v);
    for (const Edge& e : g.edges()) {
        VertexId a = e.u == gone ? keep : e.u;
        VertexId b = e.v == gone ? keep : e.v;
        h.insert_edge(e.id, a, b);
    }
    return h;
}

/**
 * Contracts a non-loop edge. The smaller endpoint id survives; all other
 * ids are preserved.
 */
inline MultiGraph contract_edge(const MultiGraph& g, EdgeId e) {
    const Edge& ed = g.edge(e);
    if (ed.is_loop()) throw std::invalid_argument("cannot contract a loop");
    VertexId keep = std::min(ed.u, ed.v), gone = std::max(ed.u, ed.v);
    MultiGraph h = identify_vertices(g, keep, gone);
    h.erase_edge(e);
    return h;
}

inline bool is_connected(const MultiGraph& g) {
    if (g.vertex_count() <= 1) return true;
    std::size_t n = g.vertex_count();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t comps = n;
    for (const Edge& e : g.edges()) {
        std::size_t a = find(g.vertex_index(e.u)), b = find(g.vertex_index(e.v));
        if (a != b) {
            parent[a] = b;
            --comps;
        }
    }
    return comps == 1;
}

inline bool is_connected(const SubgraphRef& s) { return is_connected(to_graph(s)); }

inline std::size_t min_degree(const MultiGraph& g) {
    std::size_t best = SIZE_MAX;
    for (VertexId v : g.vertices()) best = std::min(best, g.degree(v));
    return g.empty() ? 0 : best;
}

/**
 * Canonical form of a multigraph up to isomorphism, as an upper-triangular
 * multiplicity matrix (diagonal = loop counts). A connected graph takes the
 * lexicographically least matrix over all labelings reachable by
 * individualization and colour refinement; a disconnected one lists its
 * components in order of their own codes.
 */
class GraphCanonizer {
public:
    explicit GraphCanonizer(const MultiGraph& g) : n_(g.vertex_count()), adj_(n_ * n_, 0) {
        for (const Edge& e : g.edges()) {
            std::size_t a = g.vertex_index(e.u), b = g.vertex_index(e.v);
            if (a == b) {
                ++adj_[a * n_ + a];
            } else {
                ++adj_[a * n_ + b];
                ++adj_[b * n_ + a];
            }
        }
    }

    std::vector<std::uint8_t> code() {
        best_.clear();
        best_order_.clear();
        if (n_ == 0) return {0};
        auto comps = components();
        if (comps.size() == 1) {
            search(refine(std::vector<std::size_t>(n_, 0)));
        } else {
            std::vector<std::pair<std::vector<std::uint8_t>, std::vector<std::size_t>>> parts;
            for (const auto& comp : comps) {
                GraphCanonizer sub(comp.size(), {});
                for (std::size_t i = 0; i < comp.size(); ++i)
                    for (std::size_t j = 0; j < comp.size(); ++j) sub.adj_[i * comp.size() + j] = adj_[comp[i] * n_ + comp[j]];
                auto c = sub.code();
                std::vector<std::size_t> order;
                for (std::size_t i : sub.labeling()) order.push_back(comp[i]);
                parts.emplace_back(std::move(c), std::move(order));
            }
            std::sort(parts.begin(), parts.end());
            for (const auto& part : parts) best_order_.insert(best_order_.end(), part.second.begin(), part.second.end());
            best_ = matrix(best_order_);
        }
        std::vector<std::uint8_t> out;
        out.push_back(static_cast<std::uint8_t>(n_));
        out.insert(out.end(), best_.begin(), best_.end());
        return out;
    }

    // Vertex order (as indices into the graph's vertex list) realizing code().
    const std::vector<std::size_t>& labeling() const { return best_order_; }

private:
    GraphCanonizer(std::size_t n, std::nullptr_t) : n_(n), adj_(n * n, 0) {}

    std::vector<std::vector<std::size_t>> components() const {
        std::vector<std::vector<std::size_t>> out;
        std::vector<bool> seen(n_, false);
        for (std::size_t s = 0; s < n_; ++s) {
            if (seen[s]) continue;
            std::vector<std::size_t> comp{s};
            seen[s] = true;
            for (std::size_t k = 0; k < comp.size(); ++k)
                for (std::size_t w = 0; w < n_; ++w)
                    if (!seen[w] && adj_[comp[k] * n_ + w]) {
                        seen[w] = true;
                        comp.push_back(w);
                    }
            std::sort(comp.begin(), comp.end());
            out.push_back(std::move(comp));
        }
        return out;
    }

    std::vector<std::uint8_t> matrix(const std::vector<std::size_t>& order) const {
        std::vector<std::uint8_t> c;
        c.reserve(n_ * (n_ + 1) / 2);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i; j < n_; ++j) c.push_back(static_cast<std::uint8_t>(adj_[order[i] * n_ + order[j]]));
        return c;
    }

    // Swapping twins is an automorphism, so their search subtrees give the same codes.
    bool twins(std::size_t u, std::size_t v) const {
        if (adj_[u * n_ + u] != adj_[v * n_ + v]) return false;
        for (std::size_t w = 0; w < n_; ++w)
            if (w != u && w != v && adj_[u * n_ + w] != adj_[v * n_ + w]) return false;
        return true;
    }

    // cell[v] is the rank of v's cell; cells are numbered 0..k-1 in a canonical order.
    std::vector<std::size_t> refine(std::vector<std::size_t> cell) const {
        for (;;) {
            std::vector<std::pair<std::vector<std::size_t>, std::size_t>> sig(n_);
            for (std::size_t v = 0; v < n_; ++v) {
                std::vector<std::size_t> s{cell[v], adj_[v * n_ + v]};
                std::vector<std::pair<std::size_t, std::size_t>> nb;
                for (std::size_t w = 0; w < n_; ++w)
                    if (w != v && adj_[v * n_ + w]) nb.emplace_back(cell[w], adj_[v * n_ + w]);
                std::sort(nb.begin(), nb.end());
                for (auto [c, m] : nb) {
                    s.push_back(c);
                    s.push_back(m);
                }
                sig[v] = {std::move(s), v};
            }
            std::vector<std::size_t> idx(n_);
            std::iota(idx.begin(), idx.end(), 0);
            std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return sig[a].first < sig[b].first; });
            std::vector<std::size_t> next(n_);
            std::size_t rank = 0;
            for (std::size_t i = 0; i < n_; ++i) {
                if (i > 0 && sig[idx[i]].first != sig[idx[i - 1]].first) ++rank;
                next[idx[i]] = rank;
            }
            std::size_t old_cells = *std::max_element(cell.begin(), cell.end()) + 1;
            if (rank + 1 == old_cells) return next;
            cell = std::move(next);
        }
    }

    void search(const std::vector<std::size_t>& cell) {
        std::size_t cells = *std::max_element(cell.begin(), cell.end()) + 1;
        if (cells == n_) {
            std::vector<std::size_t> order(n_);
            for (std::size_t v = 0; v < n_; ++v) order[cell[v]] = v;
            std::vector<std::uint8_t> c = matrix(order);
            if (best_.empty() || c < best_) {
                best_ = std::move(c);
                best_order_ = std::move(order);
            }
            return;
        }
        // first non-singleton cell
        std::vector<std::size_t> size(cells, 0);
        for (std::size_t v = 0; v < n_; ++v) ++size[cell[v]];
        std::size_t target = 0;
        while (size[target] == 1) ++target;
        std::vector<std::size_t> tried;
        for (std::size_t v = 0; v < n_; ++v) {
            if (cell[v] != target) continue;
            if (std::any_of(tried.begin(), tried.end(), [&](std::size_t u) { return twins(u, v); })) continue;
            tried.push_back(v);
            std::vector<std::size_t> split(cell);
            for (std::size_t w = 0; w < n_; ++w)
                if (split[w] > target || (split[w] == target && w != v)) ++split[w];
            search(refine(std::move(split)));
        }
    }

    std::size_t n_;
    std::vector<std::size_t> adj_;
    std::vector<std::uint8_t> best_;
    std::vector<std::size_t> best_order_;
};

inline std::vector<std::uint8_t> graph_canonical_code(const MultiGraph& g) { return GraphCanonizer(g).code(); }

inline bool graphs_isomorphic(const MultiGraph& a, const MultiGraph& b) {
    return graph_canonical_code(a) == graph_canonical_code(b);
}

}  // namespace toroidal

#endif  // TOROIDAL_MULTIGRAPH_HPP
