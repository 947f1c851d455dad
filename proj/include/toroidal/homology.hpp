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

#ifndef TOROIDAL_HOMOLOGY_HPP
#define TOROIDAL_HOMOLOGY_HPP

#include <array>
#include <cstdlib>
#include <deque>
#include <stdexcept>
#include <vector>

#include "map_edit.hpp"

namespace toroidal {

using CycleClass = std::array<long long, 2>;

inline CycleClass operator+(CycleClass a, CycleClass b) { return {a[0] + b[0], a[1] + b[1]}; }
inline CycleClass operator-(CycleClass a, CycleClass b) { return {a[0] - b[0], a[1] - b[1]}; }
inline CycleClass operator-(CycleClass a) { return {-a[0], -a[1]}; }

inline bool is_zero(const CycleClass& a) { return a[0] == 0 && a[1] == 0; }

// Minimal geometric intersection number of two torus classes.
inline long long intersection_number(const CycleClass& a, const CycleClass& b) {
    return std::llabs(a[0] * b[1] - a[1] * b[0]);
}

/**
 * Z^2 class per dart of a connected cellular torus map. Tree darts carry
 * zero, the two leftover edges carry the basis, every facial walk sums to
 * zero and label(d^1) = -label(d).
 */
struct HomologyLabeling {
    std::vector<CycleClass> label;  // indexed by dart id
    std::vector<EdgeId> tree;
    std::vector<EdgeId> cotree;
    std::array<EdgeId, 2> generators{};

    const CycleClass& operator[](DartId d) const { return label.at(d); }

    template <class Range>
    CycleClass sum(const Range& darts) const {
        CycleClass s{0, 0};
        for (DartId d : darts) s = s + label.at(d);
        return s;
    }
};

inline HomologyLabeling homology_labels(const SurfaceMap& m) {
    if (!m.cellular()) throw std::invalid_argument("homology_labels needs a cellular map");
    if (m.genus() != 1) throw std::invalid_argument("homology_labels needs a torus map");
    const MultiGraph& g = m.graph();
    if (!is_connected(g)) throw std::invalid_argument("homology_labels needs a connected map");

    HomologyLabeling h;
    h.label.assign(2 * static_cast<std::size_t>(g.next_edge_id()), CycleClass{0, 0});
    std::vector<char> in_tree(g.edge_count(), 0), in_cotree(g.edge_count(), 0);

    std::vector<char> reached(g.vertex_count(), 0);
    std::deque<VertexId> queue{g.vertices().front()};
    reached[0] = 1;
    while (!queue.empty()) {
        VertexId x = queue.front();
        queue.pop_front();
        for (DartId d : m.rotation(x)) {
            VertexId y = m.head(d);
            if (reached[g.vertex_index(y)]) continue;
            reached[g.vertex_index(y)] = 1;
            in_tree[g.edge_index(edge_of(d))] = 1;
            h.tree.push_back(edge_of(d));
            queue.push_back(y);
        }
    }

    std::size_t nf = m.faces().size();
    std::vector<char> face_reached(nf, 0);
    std::deque<std::size_t> fq{0};
    face_reached[0] = 1;
    while (!fq.empty()) {
        std::size_t f = fq.front();
        fq.pop_front();
        for (DartId d : face_darts(m, f)) {
            std::size_t i = g.edge_index(edge_of(d));
            if (in_tree[i]) continue;
            std::size_t other = m.face_of_dart(mate(d));
            if (face_reached[other]) continue;
            face_reached[other] = 1;
            in_cotree[i] = 1;
            h.cotree.push_back(edge_of(d));
            fq.push_back(other);
        }
    }

    std::vector<EdgeId> left;
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        if (!in_tree[i] && !in_cotree[i]) left.push_back(g.edges()[i].id);
    if (left.size() != 2) throw std::logic_error("tree-cotree decomposition left the wrong number of edges");
    h.generators = {left[0], left[1]};
    h.label[dart_of(left[0], 0)] = {1, 0};
    h.label[dart_of(left[0], 1)] = {-1, 0};
    h.label[dart_of(left[1], 0)] = {0, 1};
    h.label[dart_of(left[1], 1)] = {0, -1};

    // Peel leaves of the dual tree: a face with one unknown edge fixes it.
    std::vector<char> known(g.edge_count(), 1);
    for (EdgeId e : h.cotree) known[g.edge_index(e)] = 0;
    std::size_t unknown = h.cotree.size();
    while (unknown > 0) {
        bool progress = false;
        for (std::size_t f = 0; f < nf; ++f) {
            DartId missing = no_dart;
            std::size_t count = 0;
            CycleClass s{0, 0};
            for (DartId d : face_darts(m, f)) {
                if (known[g.edge_index(edge_of(d))]) {
                    s = s + h.label[d];
                } else {
                    ++count;
                    missing = d;
                }
            }
            if (count != 1) continue;
            h.label[missing] = -s;
            h.label[mate(missing)] = s;
            known[g.edge_index(edge_of(missing))] = 1;
            --unknown;
            progress = true;
        }
        if (!progress) throw std::logic_error("dual tree peeling stalled");
    }
    return h;
}

/**
 * Adds edges inside non-cellular faces until every face is a disc. The
 * surface and all existing darts are unchanged.
 */
inline SurfaceMap cellularize(const SurfaceMap& m) {
    SurfaceMap cur = m;
    for (;;) {
        std::size_t f = 0;
        while (f < cur.faces().size() && cur.faces()[f].cellular()) ++f;
        if (f == cur.faces().size()) return cur;
        const Face& face = cur.faces()[f];
        if (face.walks.size() >= 2) {
            Corner a = walk_corners(cur, face.walks[0]).front();
            Corner b = walk_corners(cur, face.walks[1]).front();
            cur = insert_edge(cur, a, b).first;
        } else {
            Corner c = walk_corners(cur, face.walks[0]).front();
            cur = insert_edge(cur, c, c, FaceSplit{false, {}, 0}).first;
        }
    }
}

// Labels for any torus map, cellular or not; only darts of m are meaningful.
inline HomologyLabeling ambient_labels(const SurfaceMap& m) {
    if (m.genus() != 1) throw std::invalid_argument("ambient_labels needs a torus map");
    return homology_labels(m.cellular() ? m : cellularize(m));
}

enum class Essentiality { inessential, annular, essential_nonannular };

inline const char* to_string(Essentiality e) {
    switch (e) {
        case Essentiality::inessential: return "inessential";
        case Essentiality::annular: return "annular";
        default: return "essential-nonannular";
    }
}

// Classes of the fundamental cycles of a connected subgraph.
inline std::vector<CycleClass> cycle_classes(const SurfaceMap& m, const HomologyLabeling& lab, const SubgraphRef& h) {
    if (h.parent != &m.graph()) throw std::invalid_argument("subgraph is not of this map's graph");
    if (h.vertices.empty()) return {};
    if (!is_connected(h)) throw std::invalid_argument("classification needs a connected subgraph");
    const MultiGraph& g = m.graph();
    std::vector<CycleClass> pot(g.vertex_count(), CycleClass{0, 0});
    std::vector<char> reached(g.vertex_count(), 0), tree(g.edge_count(), 0);
    std::deque<VertexId> q{h.vertices.front()};
    reached[g.vertex_index(h.vertices.front())] = 1;
    while (!q.empty()) {
        VertexId x = q.front();
        q.pop_front();
        for (DartId d : m.rotation(x)) {
            if (!h.contains_edge(edge_of(d))) continue;
            VertexId y = m.head(d);
            if (reached[g.vertex_index(y)]) continue;
            reached[g.vertex_index(y)] = 1;
            tree[g.edge_index(edge_of(d))] = 1;
            pot[g.vertex_index(y)] = pot[g.vertex_index(x)] + lab[d];
            q.push_back(y);
        }
    }
    std::vector<CycleClass> out;
    for (EdgeId e : h.edges) {
        if (tree[g.edge_index(e)]) continue;
        const Edge& ed = g.edge(e);
        out.push_back(pot[g.vertex_index(ed.u)] + lab[dart_of(e, 0)] - pot[g.vertex_index(ed.v)]);
    }
    return out;
}

inline Essentiality classify_classes(const std::vector<CycleClass>& classes) {
    const CycleClass* first = nullptr;
    for (const CycleClass& c : classes) {
        if (is_zero(c)) continue;
        if (!first) first = &c;
        else if (intersection_number(*first, c) != 0) return Essentiality::essential_nonannular;
    }
    return first ? Essentiality::annular : Essentiality::inessential;
}

inline Essentiality classify_subgraph(const SurfaceMap& m, const SubgraphRef& h) {
    return classify_classes(cycle_classes(m, ambient_labels(m), h));
}

}  // namespace toroidal

#endif  // TOROIDAL_HOMOLOGY_HPP
