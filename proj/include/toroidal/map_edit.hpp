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

#ifndef TOROIDAL_MAP_EDIT_HPP
#define TOROIDAL_MAP_EDIT_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "surface_map.hpp"

// Low-level map surgery. Every function returns a new map and keeps face
// genus bookkeeping consistent; higher-level moves are built from these.

namespace toroidal {

// The angle at `vertex` just after dart `after` in the rotation; `after` is
// no_dart for an isolated vertex.
struct Corner {
    VertexId vertex = 0;
    DartId after = no_dart;
    friend bool operator==(const Corner&, const Corner&) = default;
};

// The corner that the walk through d passes just before leaving along d.
inline Corner corner_before(const SurfaceMap& m, DartId d) { return {m.tail(d), m.sigma_inv(d)}; }

inline std::size_t walk_of_corner(const SurfaceMap& m, const Corner& c) {
    if (!m.graph().has_vertex(c.vertex)) throw std::invalid_argument("corner at unknown vertex " + std::to_string(c.vertex));
    if (c.after == no_dart) {
        if (!m.rotation(c.vertex).empty()) throw std::invalid_argument("corner needs a dart at a non-isolated vertex");
        return m.walk_of_vertex(c.vertex);
    }
    if (!m.has_dart(c.after) || m.tail(c.after) != c.vertex)
        throw std::invalid_argument("dart " + std::to_string(c.after) + " does not leave vertex " + std::to_string(c.vertex));
    return m.walk_of_dart(m.sigma(c.after));
}

// Every corner of a walk, in walk order.
inline std::vector<Corner> walk_corners(const SurfaceMap& m, std::size_t w) {
    const FaceWalk& fw = m.walks()[w];
    if (fw.trivial()) return {Corner{fw.vertex, no_dart}};
    std::vector<Corner> out;
    for (DartId d : fw.darts) out.push_back(corner_before(m, d));
    return out;
}

/**
 * How a face is divided when a new edge joins two corners of the same
 * boundary walk of a non-cellular face. Separating: the new walk through
 * the edge's first dart takes the walks in `side` and genus `side_genus`.
 * Non-separating: both new walks stay in one face whose genus drops by one.
 */
struct FaceSplit {
    bool separating = true;
    std::vector<WalkRef> side;
    int side_genus = 0;
    friend bool operator==(const FaceSplit&, const FaceSplit&) = default;
};

namespace detail {

using Rotations = std::map<VertexId, std::vector<DartId>>;

inline Rotations rotations_of(const SurfaceMap& m) {
    Rotations r;
    for (VertexId v : m.graph().vertices()) r[v] = m.rotation(v);
    return r;
}

inline void insert_after(std::vector<DartId>& rot, DartId after, DartId d) {
    if (after == no_dart) {
        if (!rot.empty()) throw std::invalid_argument("corner needs a dart");
        rot.push_back(d);
        return;
    }
    auto it = std::find(rot.begin(), rot.end(), after);
    if (it == rot.end()) throw std::invalid_argument("dart not in rotation");
    rot.insert(it + 1, d);
}

inline void erase_dart(std::vector<DartId>& rot, DartId d) {
    auto it = std::find(rot.begin(), rot.end(), d);
    if (it != rot.end()) rot.erase(it);
}

// Face tag for an untouched face of `old`, with walks renamed in `fresh`.
inline FaceTag carry_face(const SurfaceMap& old, const Face& face, const SurfaceMap& fresh) {
    FaceTag t{{}, face.genus};
    for (std::size_t w : face.walks) {
        WalkRef r = old.walk_ref(w);
        t.walks.push_back(fresh.walk_ref(fresh.resolve(r)));
    }
    return t;
}

inline long long face_chi(const Face& f) {
    return 2 - 2 * static_cast<long long>(f.genus) - static_cast<long long>(f.walks.size());
}

inline int genus_from_chi(long long chi, std::size_t walks) {
    long long twice = 2 - static_cast<long long>(walks) - chi;
    if (twice < 0 || twice % 2 != 0) throw std::logic_error("face surgery produced an impossible face");
    return static_cast<int>(twice / 2);
}

}  // namespace detail

/**
 * Draws a new edge from corner a to corner b; both corners must lie on the
 * same face. When b == a the second dart goes right after the first.
 * Returns the new map and the new edge id (dart 2e sits at corner a).
 */
inline std::pair<SurfaceMap, EdgeId> insert_edge(const SurfaceMap& m, const Corner& a, const Corner& b,
                                                 const FaceSplit& split = {}) {
    std::size_t wa = walk_of_corner(m, a), wb = walk_of_corner(m, b);
    std::size_t f = m.face_of_walk(wa);
    if (m.face_of_walk(wb) != f) throw std::invalid_argument("corners lie on different faces");
    MultiGraph g = m.graph();
    EdgeId e = g.add_edge(a.vertex, b.vertex);
    DartId da = dart_of(e, 0), db = dart_of(e, 1);
    auto rot = detail::rotations_of(m);
    detail::insert_after(rot[a.vertex], a.after, da);
    if (b == a) detail::insert_after(rot[b.vertex], da, db);
    else detail::insert_after(rot[b.vertex], b.after, db);
    SurfaceMap bare(g, rot, SurfaceMap::TraceOnly{});

    std::vector<FaceTag> tags;
    for (std::size_t of = 0; of < m.faces().size(); ++of)
        if (of != f && !m.faces()[of].cellular()) tags.push_back(detail::carry_face(m, m.faces()[of], bare));

    const Face& face = m.faces()[f];
    std::vector<std::size_t> others;
    for (std::size_t w : face.walks)
        if (w != wa && w != wb) others.push_back(w);
    auto ref = [&](std::size_t old_walk) { return bare.walk_ref(bare.resolve(m.walk_ref(old_walk))); };

    if (wa != wb) {
        FaceTag t{{bare.walk_ref(bare.walk_of_dart(da))}, face.genus};
        for (std::size_t w : others) t.walks.push_back(ref(w));
        if (!(t.genus == 0 && t.walks.size() == 1)) tags.push_back(std::move(t));
    } else {
        std::size_t A = bare.walk_of_dart(da), B = bare.walk_of_dart(db);
        if (A == B) throw std::logic_error("edge inside one walk did not split it");
        if (split.separating) {
            FaceTag ta{{bare.walk_ref(A)}, split.side_genus}, tb{{bare.walk_ref(B)}, face.genus - split.side_genus};
            if (split.side_genus < 0 || tb.genus < 0) throw std::invalid_argument("bad genus split");
            std::vector<std::size_t> side;
            for (const WalkRef& r : split.side) side.push_back(m.resolve(r));
            for (std::size_t w : side)
                if (std::find(others.begin(), others.end(), w) == others.end())
                    throw std::invalid_argument("split side names a walk outside the face");
            for (std::size_t w : others) {
                bool in_a = std::find(side.begin(), side.end(), w) != side.end();
                (in_a ? ta : tb).walks.push_back(ref(w));
            }
            for (FaceTag* t : {&ta, &tb})
                if (!(t->genus == 0 && t->walks.size() == 1)) tags.push_back(std::move(*t));
        } else {
            if (face.genus < 1) throw std::invalid_argument("non-separating edge needs a face of positive genus");
            FaceTag t{{bare.walk_ref(A), bare.walk_ref(B)}, face.genus - 1};
            for (std::size_t w : others) t.walks.push_back(ref(w));
            tags.push_back(std::move(t));
        }
    }
    return {SurfaceMap(std::move(g), rot, std::move(tags)), e};
}

// Places a new isolated vertex inside face f.
inline std::pair<SurfaceMap, VertexId> insert_vertex(const SurfaceMap& m, std::size_t f) {
    if (f >= m.faces().size()) throw std::invalid_argument("no such face");
    MultiGraph g = m.graph();
    VertexId x = g.add_vertex();
    auto rot = detail::rotations_of(m);
    rot[x] = {};
    SurfaceMap bare(g, rot, SurfaceMap::TraceOnly{});
    std::vector<FaceTag> tags;
    for (std::size_t of = 0; of < m.faces().size(); ++of) {
        if (of == f) {
            FaceTag t = detail::carry_face(m, m.faces()[of], bare);
            t.walks.push_back(WalkRef::vertex(x));
            tags.push_back(std::move(t));
        } else if (!m.faces()[of].cellular()) {
            tags.push_back(detail::carry_face(m, m.faces()[of], bare));
        }
    }
    return {SurfaceMap(std::move(g), rot, std::move(tags)), x};
}

// Removes an edge; the faces on its two sides merge.
inline SurfaceMap delete_edge(const SurfaceMap& m, EdgeId e) {
    if (!m.graph().has_edge(e)) throw std::invalid_argument("no edge " + std::to_string(e));
    std::size_t w0 = m.walk_of_dart(dart_of(e, 0)), w1 = m.walk_of_dart(dart_of(e, 1));
    std::size_t f0 = m.face_of_walk(w0), f1 = m.face_of_walk(w1);
    MultiGraph g = m.graph();
    const Edge ed = g.edge(e);
    g.erase_edge(e);
    auto rot = detail::rotations_of(m);
    detail::erase_dart(rot[ed.u], dart_of(e, 0));
    detail::erase_dart(rot[ed.v], dart_of(e, 1));
    SurfaceMap bare(g, rot, SurfaceMap::TraceOnly{});

    std::vector<FaceTag> tags;
    for (std::size_t of = 0; of < m.faces().size(); ++of)
        if (of != f0 && of != f1 && !m.faces()[of].cellular()) tags.push_back(detail::carry_face(m, m.faces()[of], bare));

    long long chi = detail::face_chi(m.faces()[f0]) - 1;
    if (f1 != f0) chi += detail::face_chi(m.faces()[f1]);
    std::vector<std::size_t> merged;
    for (std::size_t w = 0; w < bare.walks().size(); ++w) {
        const FaceWalk& fw = bare.walks()[w];
        bool inside;
        if (fw.trivial()) {
            inside = m.rotation(fw.vertex).empty() ? (m.face_of_walk(m.walk_of_vertex(fw.vertex)) == f0 ||
                                                      m.face_of_walk(m.walk_of_vertex(fw.vertex)) == f1)
                                                   : true;
        } else {
            std::size_t of = m.face_of_dart(fw.darts.front());
            inside = of == f0 || of == f1;
        }
        if (inside) merged.push_back(w);
    }
    FaceTag t{{}, detail::genus_from_chi(chi, merged.size())};
    for (std::size_t w : merged) t.walks.push_back(bare.walk_ref(w));
    if (!(t.genus == 0 && t.walks.size() == 1)) tags.push_back(std::move(t));
    return SurfaceMap(std::move(g), rot, std::move(tags));
}

// Removes an isolated vertex; its face absorbs the point.
inline SurfaceMap delete_isolated_vertex(const SurfaceMap& m, VertexId v) {
    if (!m.rotation(v).empty()) throw std::invalid_argument("vertex is not isolated");
    std::size_t f = m.face_of_walk(m.walk_of_vertex(v));
    MultiGraph g = m.graph();
    g.erase_vertex(v);
    auto rot = detail::rotations_of(m);
    rot.erase(v);
    SurfaceMap bare(g, rot, SurfaceMap::TraceOnly{});
    std::vector<FaceTag> tags;
    for (std::size_t of = 0; of < m.faces().size(); ++of) {
        const Face& face = m.faces()[of];
        if (of != f) {
            if (!face.cellular()) tags.push_back(detail::carry_face(m, face, bare));
            continue;
        }
        FaceTag t{{}, face.genus};
        for (std::size_t w : face.walks)
            if (!(m.walks()[w].trivial() && m.walks()[w].vertex == v)) t.walks.push_back(bare.walk_ref(bare.resolve(m.walk_ref(w))));
        if (t.walks.empty()) throw std::invalid_argument("cannot delete the last vertex of a face");
        if (!(t.genus == 0 && t.walks.size() == 1)) tags.push_back(std::move(t));
    }
    return SurfaceMap(std::move(g), rot, std::move(tags));
}

/**
 * Contracts a non-loop edge inside the surface. The smaller endpoint id
 * survives; its rotation is the darts after e at u followed by the darts
 * after e at v. Faces keep their topology.
 */
inline SurfaceMap contract_edge(const SurfaceMap& m, EdgeId e) {
    const Edge ed = m.graph().edge(e);
    if (ed.is_loop()) throw std::invalid_argument("cannot contract a loop");
    DartId du = dart_of(e, 0), dv = dart_of(e, 1);
    VertexId keep = std::min(ed.u, ed.v), gone = std::max(ed.u, ed.v);
    std::vector<DartId> merged;
    for (DartId d = m.sigma(du); d != du; d = m.sigma(d)) merged.push_back(d);
    for (DartId d = m.sigma(dv); d != dv; d = m.sigma(d)) merged.push_back(d);
    auto rot = detail::rotations_of(m);
    rot.erase(gone);
    rot[keep] = merged;
    MultiGraph g = toroidal::contract_edge(m.graph(), e);
    SurfaceMap bare(g, rot, SurfaceMap::TraceOnly{});
    std::vector<FaceTag> tags;
    for (const Face& face : m.faces()) {
        if (face.cellular()) continue;
        FaceTag t{{}, face.genus};
        for (std::size_t w : face.walks) {
            const FaceWalk& fw = m.walks()[w];
            if (fw.trivial()) {
                t.walks.push_back(WalkRef::vertex(fw.vertex));
                continue;
            }
            auto it = std::find_if(fw.darts.begin(), fw.darts.end(), [&](DartId d) { return edge_of(d) != e; });
            t.walks.push_back(it == fw.darts.end() ? WalkRef::vertex(keep) : bare.walk_ref(bare.walk_of_dart(*it)));
        }
        tags.push_back(std::move(t));
    }
    return SurfaceMap(std::move(g), rot, std::move(tags));
}

// All darts on the boundary of face f.
inline std::vector<DartId> face_darts(const SurfaceMap& m, std::size_t f) {
    std::vector<DartId> out;
    for (std::size_t w : m.faces()[f].walks)
        for (DartId d : m.walks()[w].darts) out.push_back(d);
    return out;
}

}  // namespace toroidal

#endif  // TOROIDAL_MAP_EDIT_HPP
