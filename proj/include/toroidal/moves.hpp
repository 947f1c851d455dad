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

#ifndef TOROIDAL_MOVES_HPP
#define TOROIDAL_MOVES_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "map_edit.hpp"
#include "sparsity.hpp"

namespace toroidal {

enum class MoveKind {
    digon_contract,
    triangle_contract,
    quad_contract,
    digon_split,
    triangle_split,
    quad_split,
    henneberg_add,
    edge_add,
};

inline const char* to_string(MoveKind k) {
    switch (k) {
        case MoveKind::digon_contract: return "digon-contract";
        case MoveKind::triangle_contract: return "triangle-contract";
        case MoveKind::quad_contract: return "quad-contract";
        case MoveKind::digon_split: return "digon-split";
        case MoveKind::triangle_split: return "triangle-split";
        case MoveKind::quad_split: return "quad-split";
        case MoveKind::henneberg_add: return "henneberg-add";
        default: return "edge-add";
    }
}

inline MoveKind move_kind_from_string(const std::string& s) {
    for (MoveKind k : {MoveKind::digon_contract, MoveKind::triangle_contract, MoveKind::quad_contract,
                       MoveKind::digon_split, MoveKind::triangle_split, MoveKind::quad_split,
                       MoveKind::henneberg_add, MoveKind::edge_add})
        if (s == to_string(k)) return k;
    throw std::invalid_argument("unknown move kind '" + s + "'");
}

/**
 * One move with its site in the source map's dart ids.
 *
 * Contractions: `walk` is the face boundary (starting at its smallest dart);
 * triangles also use `edge`, quadrilaterals `diagonal`.
 * digon_split: `vertex` and the darts of `interval` that move to the new vertex.
 * triangle_split: `vertex`, `dart_a` = first dart of the part that stays,
 * `dart_b` = its last dart (the edge that closes the triangle).
 * quad_split: `vertex`, `dart_a` toward v4 and `dart_b` toward v2.
 * henneberg_add / edge_add: `corner_a`, `corner_b`, `split`; henneberg also `face`.
 */
struct MoveRecord {
    MoveKind kind = MoveKind::edge_add;
    std::vector<DartId> walk;
    EdgeId edge = 0;
    Diagonal diagonal = Diagonal::d13;
    VertexId vertex = 0;
    std::vector<DartId> interval;
    DartId dart_a = no_dart, dart_b = no_dart;
    std::size_t face = 0;
    Corner corner_a, corner_b;
    FaceSplit split;

    // Id mapping: vertices merged away (old -> survivor), created ids.
    std::vector<std::pair<VertexId, VertexId>> merged;
    std::vector<VertexId> new_vertices;
    std::vector<EdgeId> new_edges, removed_edges;

    std::string target_code;  // hex canonical code of the result
};

struct MoveResult {
    SurfaceMap map;
    MoveRecord record;
};

namespace detail {

inline std::string code_hex(const SurfaceMap& m) {
    return is_connected(m.graph()) ? to_hex(canonical_code(m)) : std::string();
}

inline std::size_t face_with_walk(const SurfaceMap& m, const std::vector<DartId>& walk) {
    if (walk.empty() || !m.has_dart(walk.front())) throw std::invalid_argument("face walk names unknown dart");
    std::size_t w = m.walk_of_dart(walk.front());
    const auto& darts = m.walks()[w].darts;
    if (darts.size() != walk.size()) throw std::invalid_argument("face walk does not match the map");
    auto it = std::find(darts.begin(), darts.end(), walk.front());
    for (std::size_t i = 0; i < walk.size(); ++i)
        if (darts[(static_cast<std::size_t>(it - darts.begin()) + i) % darts.size()] != walk[i])
            throw std::invalid_argument("face walk does not match the map");
    std::size_t f = m.face_of_walk(w);
    if (!m.faces()[f].cellular()) throw std::invalid_argument("face is not cellular");
    return f;
}

inline const std::vector<DartId>& cellular_walk(const SurfaceMap& m, std::size_t f, std::size_t degree, const char* what) {
    if (f >= m.faces().size()) throw std::invalid_argument("no such face");
    const Face& face = m.faces()[f];
    if (!face.cellular() || m.walks()[face.walks.front()].degree() != degree)
        throw std::invalid_argument(std::string("face is not a ") + what);
    return m.walks()[face.walks.front()].darts;
}

// Copy of g with the tail of every dart in `moved` set to `to`.
inline MultiGraph move_darts(const MultiGraph& g, const std::vector<DartId>& moved, VertexId to) {
    MultiGraph h;
    for (VertexId v : g.vertices()) h.insert_vertex(v);
    if (!h.has_vertex(to)) h.insert_vertex(to);
    for (const Edge& e : g.edges()) {
        VertexId u = e.u, v = e.v;
        if (std::find(moved.begin(), moved.end(), dart_of(e.id, 0)) != moved.end()) u = to;
        if (std::find(moved.begin(), moved.end(), dart_of(e.id, 1)) != moved.end()) v = to;
        h.insert_edge(e.id, u, v);
    }
    return h;
}

// Face tags of `old` carried to `fresh` by old darts; a walk around an
// isolated old vertex goes to `isolated_to` when that vertex gained darts.
// Darts in `absorbed` now bound a new face and never name an old walk.
inline std::vector<FaceTag> carry_all(const SurfaceMap& old, const SurfaceMap& fresh, DartId isolated_to = no_dart,
                                      const std::vector<DartId>& absorbed = {}) {
    std::vector<FaceTag> tags;
    for (const Face& face : old.faces()) {
        if (face.cellular()) continue;
        FaceTag t{{}, face.genus};
        for (std::size_t w : face.walks) {
            const FaceWalk& fw = old.walks()[w];
            if (fw.trivial() && !fresh.rotation(fw.vertex).empty()) {
                if (isolated_to == no_dart) throw std::logic_error("isolated vertex gained darts unexpectedly");
                t.walks.push_back(fresh.walk_ref(fresh.walk_of_dart(isolated_to)));
            } else if (fw.trivial()) {
                t.walks.push_back(fresh.walk_ref(fresh.resolve(old.walk_ref(w))));
            } else {
                auto it = std::find_if(fw.darts.begin(), fw.darts.end(), [&](DartId d) {
                    return std::find(absorbed.begin(), absorbed.end(), d) == absorbed.end();
                });
                if (it == fw.darts.end()) throw std::logic_error("old walk lies entirely on the new face");
                t.walks.push_back(fresh.walk_ref(fresh.walk_of_dart(*it)));
            }
        }
        tags.push_back(std::move(t));
    }
    return tags;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Contractions

/**
 * G_D = (G/e1) - e2 for a digon face D with boundary e1 e2, where e1 is the
 * edge of D's smallest dart.
 */
inline MoveResult digon_contract(const SurfaceMap& m, std::size_t f) {
    const auto walk = detail::cellular_walk(m, f, 2, "digon");
    EdgeId e1 = edge_of(walk[0]), e2 = edge_of(walk[1]);
    VertexId a = m.tail(walk[0]), b = m.head(walk[0]);
    if (e1 == e2 || a == b) throw std::invalid_argument("degenerate digon");
    SurfaceMap r = delete_edge(contract_edge(m, e1), e2);
    MoveRecord rec;
    rec.kind = MoveKind::digon_contract;
    rec.walk = walk;
    rec.edge = e1;
    rec.merged = {{std::max(a, b), std::min(a, b)}};
    rec.removed_edges = {e1, e2};
    rec.target_code = detail::code_hex(r);
    return {std::move(r), std::move(rec)};
}

struct TriangleOutcome {
    std::optional<MoveResult> result;  // empty when blocked
    std::optional<SubgraphRef> witness;
    MultiGraph contracted;
};

/**
 * G_{T,e1} = (G/e1) - e2 for a triangle face T = v1 e1 v2 e2 v3 e3. Blocked
 * when the result is not (2,2)-sparse; the witness is then the maximal tight
 * subgraph through v1, v2 that misses v3.
 */
inline TriangleOutcome triangle_contract(const SurfaceMap& m, std::size_t f, EdgeId e1) {
    auto walk = detail::cellular_walk(m, f, 3, "triangle");
    auto it = std::find_if(walk.begin(), walk.end(), [&](DartId d) { return edge_of(d) == e1; });
    if (it == walk.end()) throw std::invalid_argument("edge is not on the triangle");
    std::rotate(walk.begin(), it, walk.end());
    VertexId v1 = m.tail(walk[0]), v2 = m.head(walk[0]), v3 = m.head(walk[1]);
    if (v1 == v2) throw std::invalid_argument("cannot contract a loop");
    EdgeId e2 = edge_of(walk[1]);
    if (e2 == e1) throw std::invalid_argument("degenerate triangle");

    TriangleOutcome out{std::nullopt, std::nullopt, contract_then_delete(m.graph(), e1, e2)};
    if (!is_sparse(out.contracted, 2)) {
        if (is_sparse(m.graph(), 2) && v3 != v1 && v3 != v2) out.witness = find_triangle_blocker(m.graph(), v1, v2, v3);
        return out;
    }
    SurfaceMap r = delete_edge(contract_edge(m, e1), e2);
    MoveRecord rec;
    rec.kind = MoveKind::triangle_contract;
    rec.walk = m.walks()[m.faces()[f].walks.front()].darts;
    rec.edge = e1;
    rec.merged = {{std::max(v1, v2), std::min(v1, v2)}};
    rec.removed_edges = {e1, e2};
    rec.target_code = detail::code_hex(r);
    out.result = MoveResult{std::move(r), std::move(rec)};
    return out;
}

// The quadrilateral context read off a face walk, starting at its first dart.
inline QuadContext quad_context(const SurfaceMap& m, const std::vector<DartId>& walk) {
    if (walk.size() != 4) throw std::invalid_argument("not a quadrilateral walk");
    QuadContext q;
    for (int i = 0; i < 4; ++i) {
        q.v[i] = m.tail(walk[i]);
        q.e[i] = edge_of(walk[i]);
    }
    return q;
}

struct QuadOutcome {
    std::optional<MoveResult> result;  // empty when blocked
    std::vector<Blocker> blockers;
};

/**
 * G_{Q,v1,v3} = (G + d)/d - {e1, e3}: the diagonal is drawn inside Q,
 * contracted, and the two edges that became parallel to the other pair are
 * removed. Blocked (with maximal witnesses) when the result is not sparse.
 */
inline QuadOutcome quad_contract(const SurfaceMap& m, std::size_t f, Diagonal diag) {
    auto walk = detail::cellular_walk(m, f, 4, "quadrilateral");
    QuadContext q = quad_context(m, walk);
    QuadContext o = oriented(q, diag);
    if (o.v[0] == o.v[2]) throw std::invalid_argument("degenerate diagonal: its endpoints coincide");
    if (o.e[0] == o.e[2]) throw std::invalid_argument("degenerate diagonal: opposite edges coincide");

    QuadOutcome out;
    if (is_sparse(m.graph(), 2)) {
        out.blockers = find_blockers(m.graph(), q, diag);
        if (!out.blockers.empty()) return out;
    }
    std::size_t k = diag == Diagonal::d13 ? 0 : 1;
    Corner c1 = corner_before(m, walk[k]), c3 = corner_before(m, walk[k + 2]);
    auto [with_diag, d] = insert_edge(m, c1, c3);
    SurfaceMap r = delete_edge(delete_edge(contract_edge(with_diag, d), o.e[0]), o.e[2]);
    MoveRecord rec;
    rec.kind = MoveKind::quad_contract;
    rec.walk = walk;
    rec.diagonal = diag;
    rec.merged = {{std::max(o.v[0], o.v[2]), std::min(o.v[0], o.v[2])}};
    rec.removed_edges = {o.e[0], o.e[2]};
    rec.target_code = detail::code_hex(r);
    out.result = MoveResult{std::move(r), std::move(rec)};
    return out;
}

// ---------------------------------------------------------------------------
// Splits

/**
 * Inverse of digon_contract: the darts in `interval` (a contiguous run of
 * w's rotation, in rotation order) move to a new vertex w', and two new
 * parallel edges w w' bound a new digon face.
 */
inline MoveResult digon_split(const SurfaceMap& m, VertexId w, const std::vector<DartId>& interval) {
    const auto& rot = m.rotation(w);
    std::size_t n = rot.size();
    if (interval.size() > n) throw std::invalid_argument("interval longer than the rotation");
    std::size_t start = 0;
    if (!interval.empty()) {
        auto it = std::find(rot.begin(), rot.end(), interval.front());
        if (it == rot.end()) throw std::invalid_argument("interval dart not at the vertex");
        start = static_cast<std::size_t>(it - rot.begin());
        for (std::size_t i = 0; i < interval.size(); ++i)
            if (rot[(start + i) % n] != interval[i]) throw std::invalid_argument("dart interval is not contiguous in the rotation");
    }
    std::vector<DartId> J;
    for (std::size_t i = interval.size(); i < n; ++i) J.push_back(rot[(start + i) % n]);

    MultiGraph g = m.graph();
    VertexId w2 = g.next_vertex_id();
    g = detail::move_darts(g, interval, w2);
    EdgeId e1 = g.add_edge(w, w2), e2 = g.add_edge(w, w2);
    DartId x = dart_of(e1, 0), x2 = dart_of(e1, 1), y = dart_of(e2, 0), y2 = dart_of(e2, 1);
    auto rots = detail::rotations_of(m);
    rots[w] = J;
    rots[w].push_back(y);
    rots[w].push_back(x);
    rots[w2] = interval;
    rots[w2].push_back(x2);
    rots[w2].push_back(y2);
    SurfaceMap bare(g, rots, SurfaceMap::TraceOnly{});
    SurfaceMap r(g, rots, detail::carry_all(m, bare, y));

    MoveRecord rec;
    rec.kind = MoveKind::digon_split;
    rec.vertex = w;
    rec.interval = interval;
    rec.new_vertices = {w2};
    rec.new_edges = {e1, e2};
    rec.target_code = detail::code_hex(r);
    return {std::move(r), std::move(rec)};
}

/**
 * Inverse of triangle_contract. The rotation at z is A ++ B where A runs
 * from `first` to `t` (t = dart of the edge z v3). z keeps A, a new vertex
 * v2 takes B, and new edges z v2, v2 v3 close the triangle z v2 v3.
 */
inline MoveResult triangle_split(const SurfaceMap& m, VertexId z, DartId first, DartId t) {
    const auto& rot = m.rotation(z);
    auto i0 = std::find(rot.begin(), rot.end(), first), i1 = std::find(rot.begin(), rot.end(), t);
    if (i0 == rot.end() || i1 == rot.end()) throw std::invalid_argument("site darts are not at the vertex");
    if (m.head(t) == z) throw std::invalid_argument("triangle split along a loop");
    std::size_t n = rot.size(), s = static_cast<std::size_t>(i0 - rot.begin()), e = static_cast<std::size_t>(i1 - rot.begin());
    std::vector<DartId> A, B;
    for (std::size_t k = s;; k = (k + 1) % n) {
        A.push_back(rot[k]);
        if (k == e) break;
    }
    for (std::size_t k = (e + 1) % n; A.size() + B.size() < n; k = (k + 1) % n) B.push_back(rot[k]);
    VertexId v3 = m.head(t);

    MultiGraph g = m.graph();
    VertexId v2 = g.next_vertex_id();
    g = detail::move_darts(g, B, v2);
    EdgeId e1 = g.add_edge(z, v2), e2 = g.add_edge(v2, v3);
    auto rots = detail::rotations_of(m);
    rots[z] = A;
    rots[z].push_back(dart_of(e1, 0));
    rots[v2] = {dart_of(e1, 1), dart_of(e2, 0)};
    rots[v2].insert(rots[v2].end(), B.begin(), B.end());
    auto& r3 = rots[v3];
    r3.insert(std::find(r3.begin(), r3.end(), mate(t)), dart_of(e2, 1));
    SurfaceMap bare(g, rots, SurfaceMap::TraceOnly{});
    SurfaceMap r(g, rots, detail::carry_all(m, bare, no_dart, {mate(t)}));

    MoveRecord rec;
    rec.kind = MoveKind::triangle_split;
    rec.vertex = z;
    rec.dart_a = first;
    rec.dart_b = t;
    rec.new_vertices = {v2};
    rec.new_edges = {e1, e2};
    rec.target_code = detail::code_hex(r);
    return {std::move(r), std::move(rec)};
}

/**
 * Inverse of quad_contract. With z's rotation read as (X, a, Y, b), z keeps
 * X and a, a new vertex v3 takes Y and b, and new edges z v2 and v3 v4
 * (v2 = head(b), v4 = head(a)) bound the quadrilateral z v2 v3 v4.
 */
inline MoveResult quad_split(const SurfaceMap& m, VertexId z, DartId a, DartId b) {
    const auto& rot = m.rotation(z);
    auto ia = std::find(rot.begin(), rot.end(), a), ib = std::find(rot.begin(), rot.end(), b);
    if (ia == rot.end() || ib == rot.end() || a == b) throw std::invalid_argument("site darts must be two distinct darts at the vertex");
    if (m.head(a) == z || m.head(b) == z) throw std::invalid_argument("quadrilateral split along a loop");
    std::size_t n = rot.size(), pa = static_cast<std::size_t>(ia - rot.begin()), pb = static_cast<std::size_t>(ib - rot.begin());
    std::vector<DartId> X, Y;
    for (std::size_t k = (pb + 1) % n; k != pa; k = (k + 1) % n) X.push_back(rot[k]);
    for (std::size_t k = (pa + 1) % n; k != pb; k = (k + 1) % n) Y.push_back(rot[k]);
    Y.push_back(b);
    VertexId v2 = m.head(b), v4 = m.head(a);

    MultiGraph g = m.graph();
    VertexId v3 = g.next_vertex_id();
    g = detail::move_darts(g, Y, v3);
    EdgeId e1 = g.add_edge(z, v2), e3 = g.add_edge(v3, v4);
    auto rots = detail::rotations_of(m);
    rots[z] = {dart_of(e1, 0)};
    rots[z].insert(rots[z].end(), X.begin(), X.end());
    rots[z].push_back(a);
    rots[v3] = {dart_of(e3, 0)};
    rots[v3].insert(rots[v3].end(), Y.begin(), Y.end());
    auto& r2 = rots[v2];
    r2.insert(std::find(r2.begin(), r2.end(), mate(b)), dart_of(e1, 1));
    auto& r4 = rots[v4];
    r4.insert(std::find(r4.begin(), r4.end(), mate(a)), dart_of(e3, 1));
    SurfaceMap bare(g, rots, SurfaceMap::TraceOnly{});
    SurfaceMap r(g, rots, detail::carry_all(m, bare, no_dart, {mate(a), mate(b)}));

    MoveRecord rec;
    rec.kind = MoveKind::quad_split;
    rec.vertex = z;
    rec.dart_a = a;
    rec.dart_b = b;
    rec.new_vertices = {v3};
    rec.new_edges = {e1, e3};
    rec.target_code = detail::code_hex(r);
    return {std::move(r), std::move(rec)};
}

// The face a quad split created, and the diagonal that undoes it.
inline std::pair<std::size_t, Diagonal> quad_split_site(const SurfaceMap& split, const MoveRecord& rec) {
    DartId d = dart_of(rec.new_edges.at(0), 0);
    std::size_t f = split.face_of_dart(d);
    const auto& walk = split.walks()[split.faces()[f].walks.front()].darts;
    std::size_t pos = static_cast<std::size_t>(std::find(walk.begin(), walk.end(), d) - walk.begin());
    return {f, pos % 2 == 0 ? Diagonal::d13 : Diagonal::d24};
}

// ---------------------------------------------------------------------------
// Additions

/**
 * Adds a new vertex x inside face f joined to corners c1 and c2 of f. The
 * second edge cuts the face; `split` decides the cut for non-cellular faces
 * (the side walk is the one through the second edge's dart at x).
 */
inline MoveResult henneberg_add(const SurfaceMap& m, std::size_t f, const Corner& c1, const Corner& c2,
                                const FaceSplit& split = {}) {
    if (f >= m.faces().size()) throw std::invalid_argument("no such face");
    if (m.face_of_walk(walk_of_corner(m, c1)) != f || m.face_of_walk(walk_of_corner(m, c2)) != f)
        throw std::invalid_argument("corner is not on the face boundary");
    auto [m1, x] = insert_vertex(m, f);
    auto [m2, e1] = insert_edge(m1, Corner{x, no_dart}, c1);
    Corner second = c2 == c1 ? Corner{c1.vertex, dart_of(e1, 1)} : c2;
    auto [r, e2] = insert_edge(m2, Corner{x, dart_of(e1, 0)}, second, split);
    MoveRecord rec;
    rec.kind = MoveKind::henneberg_add;
    rec.face = f;
    rec.corner_a = c1;
    rec.corner_b = c2;
    rec.split = split;
    rec.new_vertices = {x};
    rec.new_edges = {e1, e2};
    rec.target_code = detail::code_hex(r);
    return {std::move(r), std::move(rec)};
}

// Removes a vertex together with its incident edges.
inline SurfaceMap delete_vertex(const SurfaceMap& m, VertexId v) {
    SurfaceMap cur = m;
    while (!cur.rotation(v).empty()) cur = delete_edge(cur, edge_of(cur.rotation(v).front()));
    return delete_isolated_vertex(cur, v);
}

inline MoveResult add_edge_move(const SurfaceMap& m, const Corner& a, const Corner& b, const FaceSplit& split = {}) {
    auto [r, e] = insert_edge(m, a, b, split);
    MoveRecord rec;
    rec.kind = MoveKind::edge_add;
    rec.corner_a = a;
    rec.corner_b = b;
    rec.split = split;
    rec.new_edges = {e};
    rec.target_code = detail::code_hex(r);
    return {std::move(r), std::move(rec)};
}

/**
 * Adds edges inside faces until the map is (2,l)-tight on the same vertex
 * set. Each edge joins a vertex of a maximal tight subgraph L to a vertex
 * outside L across a common face; with no tight subgraph any independent
 * pair on a face is used. Requires a (2,l)-sparse map.
 */
inline SurfaceMap complete_to_tight(const SurfaceMap& m, int l = 2, std::vector<MoveRecord>* log = nullptr) {
    check_l(l);
    if (!is_sparse(m.graph(), l)) throw std::invalid_argument("complete_to_tight needs a sparse map");
    SurfaceMap cur = m;
    while (gamma(cur.graph()) > l) {
        const MultiGraph& g = cur.graph();
        std::optional<SubgraphRef> L;
        for (VertexId s : g.vertices()) {
            auto t = maximal_tight_subgraph_containing(g, l, {s});
            if (t && (!L || t->vertices.size() > L->vertices.size())) L = t;
        }
        bool done = false;
        for (std::size_t f = 0; f < cur.faces().size() && !done; ++f) {
            std::vector<Corner> corners;
            for (std::size_t w : cur.faces()[f].walks)
                for (const Corner& c : walk_corners(cur, w)) corners.push_back(c);
            for (std::size_t i = 0; i < corners.size() && !done; ++i) {
                for (std::size_t j = 0; j < corners.size() && !done; ++j) {
                    VertexId u = corners[i].vertex, v = corners[j].vertex;
                    if (L) {
                        if (!L->contains_vertex(u) || L->contains_vertex(v)) continue;
                    } else {
                        if (j < i) continue;
                        MultiGraph h = g;
                        h.add_edge(u, v);
                        if (!is_sparse(h, l)) continue;
                    }
                    MoveResult r = add_edge_move(cur, corners[i], corners[j]);
                    if (!is_sparse(r.map.graph(), l)) throw std::logic_error("completion edge broke sparsity");
                    if (log) log->push_back(r.record);
                    cur = std::move(r.map);
                    done = true;
                }
            }
        }
        if (!done) throw std::logic_error("no face joins the maximal tight subgraph to the rest");
    }
    return cur;
}

// ---------------------------------------------------------------------------
// Replay

// Re-executes a recorded move on its source map; throws if it is blocked or malformed.
inline SurfaceMap apply_move(const SurfaceMap& m, const MoveRecord& rec) {
    switch (rec.kind) {
        case MoveKind::digon_contract: return digon_contract(m, detail::face_with_walk(m, rec.walk)).map;
        case MoveKind::triangle_contract: {
            auto r = triangle_contract(m, detail::face_with_walk(m, rec.walk), rec.edge);
            if (!r.result) throw std::invalid_argument("recorded triangle contraction is blocked");
            return std::move(r.result->map);
        }
        case MoveKind::quad_contract: {
            auto r = quad_contract(m, detail::face_with_walk(m, rec.walk), rec.diagonal);
            if (!r.result) throw std::invalid_argument("recorded quadrilateral contraction is blocked");
            return std::move(r.result->map);
        }
        case MoveKind::digon_split: return digon_split(m, rec.vertex, rec.interval).map;
        case MoveKind::triangle_split: return triangle_split(m, rec.vertex, rec.dart_a, rec.dart_b).map;
        case MoveKind::quad_split: return quad_split(m, rec.vertex, rec.dart_a, rec.dart_b).map;
        case MoveKind::henneberg_add: return henneberg_add(m, rec.face, rec.corner_a, rec.corner_b, rec.split).map;
        default: return add_edge_move(m, rec.corner_a, rec.corner_b, rec.split).map;
    }
}

}  // namespace toroidal

#endif  // TOROIDAL_MOVES_HPP
