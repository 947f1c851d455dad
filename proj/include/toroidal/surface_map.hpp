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

#ifndef TOROIDAL_SURFACE_MAP_HPP
#define TOROIDAL_SURFACE_MAP_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "multigraph.hpp"

namespace toroidal {

// Dart 2e leaves edge e at its u endpoint, dart 2e+1 leaves at v.
using DartId = std::uint32_t;

constexpr DartId dart_of(EdgeId e, int side) { return 2 * e + static_cast<DartId>(side); }
constexpr EdgeId edge_of(DartId d) { return d / 2; }
constexpr DartId mate(DartId d) { return d ^ 1u; }

inline constexpr DartId no_dart = UINT32_MAX;

// Names a boundary walk: by any of its darts, or by the vertex of a walk
// around an isolated vertex.
struct WalkRef {
    bool is_vertex = false;
    std::uint32_t id = 0;

    static WalkRef dart(DartId d) { return {false, d}; }
    static WalkRef vertex(VertexId v) { return {true, v}; }
    friend auto operator<=>(const WalkRef&, const WalkRef&) = default;
};

// A face that is not an open disc: several boundary walks and/or genus.
struct FaceTag {
    std::vector<WalkRef> walks;
    int genus = 0;
    friend bool operator==(const FaceTag&, const FaceTag&) = default;
};

struct FaceWalk {
    std::vector<DartId> darts;  // starts at the smallest dart
    VertexId vertex = 0;        // meaningful for walks around an isolated vertex

    bool trivial() const { return darts.empty(); }
    std::size_t degree() const { return darts.size(); }
};

struct Face {
    std::vector<std::size_t> walks;  // indices into SurfaceMap::walks()
    int genus = 0;

    bool cellular() const { return genus == 0 && walks.size() == 1; }
};

/**
 * Combinatorial map of a multigraph on a closed orientable surface: a
 * rotation at every vertex plus genus/grouping data for faces that are not
 * discs. Immutable once built; all derived data is computed up front.
 */
class SurfaceMap {
public:
    SurfaceMap() { build({}); }

    SurfaceMap(MultiGraph g, std::vector<std::vector<DartId>> rotation, std::vector<FaceTag> tags = {})
        : graph_(std::move(g)), rotation_(std::move(rotation)) {
        build(std::move(tags));
    }

    SurfaceMap(MultiGraph g, const std::map<VertexId, std::vector<DartId>>& rotation, std::vector<FaceTag> tags = {})
        : graph_(std::move(g)) {
        rotation_.resize(graph_.vertex_count());
        for (const auto& [v, ds] : rotation) rotation_.at(graph_.vertex_index(v)) = ds;
        build(std::move(tags));
    }

    // Walks only, no face data: valid for disconnected graphs. genus() is meaningless.
    struct TraceOnly {};
    SurfaceMap(MultiGraph g, const std::map<VertexId, std::vector<DartId>>& rotation, TraceOnly)
        : graph_(std::move(g)) {
        rotation_.resize(graph_.vertex_count());
        for (const auto& [v, ds] : rotation) rotation_.at(graph_.vertex_index(v)) = ds;
        build({}, false);
    }

    const MultiGraph& graph() const { return graph_; }
    std::size_t vertex_count() const { return graph_.vertex_count(); }
    std::size_t edge_count() const { return graph_.edge_count(); }
    std::size_t dart_count() const { return 2 * graph_.edge_count(); }

    const std::vector<DartId>& rotation(VertexId v) const { return rotation_[graph_.vertex_index(v)]; }
    const std::vector<std::vector<DartId>>& rotations() const { return rotation_; }

    std::vector<DartId> darts() const {
        std::vector<DartId> out;
        for (const Edge& e : graph_.edges()) {
            out.push_back(dart_of(e.id, 0));
            out.push_back(dart_of(e.id, 1));
        }
        return out;
    }

    bool has_dart(DartId d) const { return graph_.has_edge(edge_of(d)); }
    VertexId tail(DartId d) const { return tail_.at(d); }
    VertexId head(DartId d) const { return tail_.at(mate(d)); }
    DartId sigma(DartId d) const { return sigma_.at(d); }
    DartId sigma_inv(DartId d) const { return sigma_inv_.at(d); }
    // Next dart along the boundary walk that has d's face on its left.
    DartId phi(DartId d) const { return sigma_.at(mate(d)); }

    const std::vector<FaceWalk>& walks() const { return walks_; }
    const std::vector<Face>& faces() const { return faces_; }
    std::size_t walk_of_dart(DartId d) const { return walk_of_dart_.at(d); }
    std::size_t face_of_walk(std::size_t w) const { return face_of_walk_[w]; }
    std::size_t face_of_dart(DartId d) const { return face_of_walk_[walk_of_dart(d)]; }
    std::size_t walk_of_vertex(VertexId v) const {
        for (std::size_t w = 0; w < walks_.size(); ++w)
            if (walks_[w].trivial() && walks_[w].vertex == v) return w;
        throw std::invalid_argument("vertex is not isolated");
    }

    // Genus of the closed surface after capping every face by its tag.
    int genus() const { return genus_; }
    long long euler_characteristic() const { return 2 - 2 * static_cast<long long>(genus_); }
    bool cellular() const {
        return std::all_of(faces_.begin(), faces_.end(), [](const Face& f) { return f.cellular(); });
    }
    std::size_t face_degree(std::size_t f) const {
        std::size_t d = 0;
        for (std::size_t w : faces_[f].walks) d += walks_[w].degree();
        return d;
    }

    // census()[i] = number of cellular faces of degree i.
    std::vector<std::size_t> census() const {
        std::vector<std::size_t> c;
        for (std::size_t f = 0; f < faces_.size(); ++f) {
            if (!faces_[f].cellular()) continue;
            std::size_t d = face_degree(f);
            if (c.size() <= d) c.resize(d + 1, 0);
            ++c[d];
        }
        return c;
    }
    std::size_t f(std::size_t i) const {
        auto c = census();
        return i < c.size() ? c[i] : 0;
    }

    // Tags describing every non-cellular face, walks named by their first dart.
    std::vector<FaceTag> tags() const {
        std::vector<FaceTag> out;
        for (const Face& face : faces_) {
            if (face.cellular()) continue;
            FaceTag t{{}, face.genus};
            for (std::size_t w : face.walks) t.walks.push_back(walk_ref(w));
            out.push_back(std::move(t));
        }
        return out;
    }

    WalkRef walk_ref(std::size_t w) const {
        return walks_[w].trivial() ? WalkRef::vertex(walks_[w].vertex) : WalkRef::dart(walks_[w].darts.front());
    }

    std::size_t resolve(const WalkRef& r) const {
        if (r.is_vertex) return walk_of_vertex(r.id);
        if (!has_dart(r.id)) throw std::invalid_argument("face tag names unknown dart " + std::to_string(r.id));
        return walk_of_dart(r.id);
    }

    // A walk is degenerate when it visits some vertex twice.
    bool degenerate(std::size_t w) const {
        std::vector<VertexId> seen;
        for (DartId d : walks_[w].darts) seen.push_back(tail(d));
        std::sort(seen.begin(), seen.end());
        return std::adjacent_find(seen.begin(), seen.end()) != seen.end();
    }

    std::vector<VertexId> walk_vertices(std::size_t w) const {
        if (walks_[w].trivial()) return {walks_[w].vertex};
        std::vector<VertexId> out;
        for (DartId d : walks_[w].darts) out.push_back(tail(d));
        return out;
    }

private:
    void build(std::vector<FaceTag> tags, bool check_euler = true) {
        const std::size_t nd = 2 * static_cast<std::size_t>(graph_.next_edge_id());
        if (rotation_.size() != graph_.vertex_count())
            throw std::invalid_argument("rotation must list every vertex");
        tail_.assign(nd, UINT32_MAX);
        sigma_.assign(nd, no_dart);
        sigma_inv_.assign(nd, no_dart);
        for (const Edge& e : graph_.edges()) {
            tail_[dart_of(e.id, 0)] = e.u;
            tail_[dart_of(e.id, 1)] = e.v;
        }
        std::vector<char> placed(nd, 0);
        for (std::size_t i = 0; i < rotation_.size(); ++i) {
            VertexId v = graph_.vertices()[i];
            const auto& rot = rotation_[i];
            for (std::size_t k = 0; k < rot.size(); ++k) {
                DartId d = rot[k];
                if (d >= nd || tail_[d] == UINT32_MAX)
                    throw std::invalid_argument("rotation at vertex " + std::to_string(v) + " names unknown dart " + std::to_string(d));
                if (tail_[d] != v)
                    throw std::invalid_argument("dart " + std::to_string(d) + " does not leave vertex " + std::to_string(v));
                if (placed[d]) throw std::invalid_argument("dart " + std::to_string(d) + " appears twice in rotations");
                placed[d] = 1;
                DartId nx = rot[(k + 1) % rot.size()];
                sigma_[d] = nx;
                sigma_inv_[nx] = d;
            }
        }
        for (const Edge& e : graph_.edges())
            for (int s = 0; s < 2; ++s)
                if (!placed[dart_of(e.id, s)])
                    throw std::invalid_argument("dart " + std::to_string(dart_of(e.id, s)) + " missing from rotation");

        walks_.clear();
        walk_of_dart_.assign(nd, SIZE_MAX);
        for (const Edge& e : graph_.edges()) {
            for (int s = 0; s < 2; ++s) {
                DartId start = dart_of(e.id, s);
                if (walk_of_dart_[start] != SIZE_MAX) continue;
                FaceWalk w;
                DartId d = start;
                do {
                    walk_of_dart_[d] = walks_.size();
                    w.darts.push_back(d);
                    d = sigma_[mate(d)];
                } while (d != start);
                walks_.push_back(std::move(w));
            }
        }
        for (std::size_t i = 0; i < rotation_.size(); ++i) {
            if (!rotation_[i].empty()) continue;
            FaceWalk w;
            w.vertex = graph_.vertices()[i];
            walks_.push_back(std::move(w));
        }

        face_of_walk_.assign(walks_.size(), SIZE_MAX);
        std::vector<Face> tagged;
        for (FaceTag& t : tags) {
            if (t.genus < 0) throw std::invalid_argument("negative face genus");
            if (t.walks.empty()) throw std::invalid_argument("face tag without walks");
            Face f{{}, t.genus};
            for (const WalkRef& r : t.walks) {
                std::size_t w = resolve(r);
                if (face_of_walk_[w] != SIZE_MAX) throw std::invalid_argument("walk listed in two face tags");
                face_of_walk_[w] = 0;
                f.walks.push_back(w);
            }
            std::sort(f.walks.begin(), f.walks.end());
            tagged.push_back(std::move(f));
        }
        std::fill(face_of_walk_.begin(), face_of_walk_.end(), SIZE_MAX);
        faces_.clear();
        std::vector<Face> all = std::move(tagged);
        std::vector<char> in_tag(walks_.size(), 0);
        for (const Face& f : all)
            for (std::size_t w : f.walks) in_tag[w] = 1;
        for (std::size_t w = 0; w < walks_.size(); ++w)
            if (!in_tag[w]) all.push_back(Face{{w}, 0});
        std::sort(all.begin(), all.end(), [](const Face& a, const Face& b) { return a.walks.front() < b.walks.front(); });
        faces_ = std::move(all);
        for (std::size_t f = 0; f < faces_.size(); ++f)
            for (std::size_t w : faces_[f].walks) face_of_walk_[w] = f;

        long long chi = static_cast<long long>(graph_.vertex_count()) - static_cast<long long>(graph_.edge_count());
        for (const Face& f : faces_) chi += 2 - 2 * static_cast<long long>(f.genus) - static_cast<long long>(f.walks.size());
        if (graph_.vertex_count() == 0) chi = 2;
        if (!check_euler) return;
        if (chi > 2 || (chi % 2) != 0)
            throw std::invalid_argument("face data gives Euler characteristic " + std::to_string(chi));
        genus_ = static_cast<int>((2 - chi) / 2);
    }

    MultiGraph graph_;
    std::vector<std::vector<DartId>> rotation_;
    std::vector<VertexId> tail_;
    std::vector<DartId> sigma_, sigma_inv_;
    std::vector<FaceWalk> walks_;
    std::vector<std::size_t> walk_of_dart_;
    std::vector<std::size_t> face_of_walk_;
    std::vector<Face> faces_;
    int genus_ = 0;
};

// Genus of the rotation system alone, ignoring face tags (every walk capped by a disc).
inline int rotation_genus(const SurfaceMap& m) {
    long long chi = static_cast<long long>(m.vertex_count()) - static_cast<long long>(m.edge_count()) +
                    static_cast<long long>(m.walks().size());
    return static_cast<int>((2 - chi) / 2);
}

/**
 * Checks sum_i (4 - i) f_i = 8 - 8g - 2 gamma on a connected cellular map.
 */
inline bool euler_census_check(const SurfaceMap& m) {
    if (!m.cellular()) throw std::invalid_argument("euler_census_check needs a cellular map");
    if (!is_connected(m.graph())) throw std::invalid_argument("euler_census_check needs a connected map");
    auto c = m.census();
    long long lhs = 0;
    for (std::size_t i = 0; i < c.size(); ++i) lhs += (4 - static_cast<long long>(i)) * static_cast<long long>(c[i]);
    return lhs == 8 - 8 * static_cast<long long>(m.genus()) - 2 * gamma(m.graph());
}

// ---------------------------------------------------------------------------
// Submaps

/**
 * The map induced on a subgraph: rotations restricted, and each face of the
 * submap formed by the ambient faces it swallows. `ambient_face` maps every
 * ambient face to the submap face that contains it.
 */
struct Restriction {
    SurfaceMap map;
    std::vector<std::size_t> ambient_face;
    std::vector<std::size_t> edge_face;    // per ambient edge index: submap face containing it, or SIZE_MAX for kept edges
    std::vector<std::size_t> vertex_face;  // per ambient vertex index: same for vertices
};

inline Restriction restrict_map(const SurfaceMap& m, const SubgraphRef& h) {
    if (h.parent != &m.graph()) throw std::invalid_argument("subgraph is not of this map's graph");
    if (h.vertices.empty()) throw std::invalid_argument("cannot restrict to the empty subgraph");
    const MultiGraph& g = m.graph();
    std::size_t nf = m.faces().size();

    std::vector<std::size_t> parent(nf);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Edge& e : g.edges())
        if (!h.contains_edge(e.id)) {
            std::size_t a = find(m.face_of_dart(dart_of(e.id, 0))), b = find(m.face_of_dart(dart_of(e.id, 1)));
            if (a != b) parent[a] = b;
        }

    std::map<VertexId, std::vector<DartId>> rot;
    for (VertexId v : h.vertices) {
        std::vector<DartId> r;
        for (DartId d : m.rotation(v))
            if (h.contains_edge(edge_of(d))) r.push_back(d);
        rot[v] = std::move(r);
    }
    SurfaceMap bare(to_graph(h), rot, SurfaceMap::TraceOnly{});

    // Ambient face class of every walk of the bare restriction.
    auto class_of_vertex = [&](VertexId v) {
        const auto& r = m.rotation(v);
        if (!r.empty()) return find(m.face_of_dart(r.front()));
        return find(m.face_of_walk(m.walk_of_vertex(v)));
    };
    std::map<std::size_t, std::vector<std::size_t>> walks_by_class;
    for (std::size_t w = 0; w < bare.walks().size(); ++w) {
        const FaceWalk& fw = bare.walks()[w];
        std::size_t cls = fw.trivial() ? class_of_vertex(fw.vertex) : find(m.face_of_dart(fw.darts.front()));
        walks_by_class[cls].push_back(w);
    }

    std::map<std::size_t, long long> chi;
    for (std::size_t f = 0; f < nf; ++f) {
        const Face& face = m.faces()[f];
        chi[find(f)] += 2 - 2 * static_cast<long long>(face.genus) - static_cast<long long>(face.walks.size());
    }
    for (const Edge& e : g.edges())
        if (!h.contains_edge(e.id)) chi[find(m.face_of_dart(dart_of(e.id, 0)))] -= 1;
    for (VertexId v : g.vertices())
        if (!h.contains_vertex(v)) chi[class_of_vertex(v)] += 1;

    std::vector<FaceTag> tags;
    for (const auto& [cls, ws] : walks_by_class) {
        long long b = static_cast<long long>(ws.size());
        long long twice_genus = 2 - b - chi[cls];
        if (twice_genus < 0 || twice_genus % 2 != 0) throw std::logic_error("restricted face has invalid topology");
        int gen = static_cast<int>(twice_genus / 2);
        if (gen == 0 && ws.size() == 1) continue;
        FaceTag t{{}, gen};
        for (std::size_t w : ws) t.walks.push_back(bare.walk_ref(w));
        tags.push_back(std::move(t));
    }
    for (std::size_t f = 0; f < nf; ++f)
        if (!walks_by_class.count(find(f))) throw std::invalid_argument("ambient face not adjacent to the subgraph");

    Restriction out{SurfaceMap(to_graph(h), rot, std::move(tags)), {}, {}, {}};
    std::map<std::size_t, std::size_t> face_of_class;
    for (const auto& [cls, ws] : walks_by_class) face_of_class[cls] = out.map.face_of_walk(ws.front());
    out.ambient_face.resize(nf);
    for (std::size_t f = 0; f < nf; ++f) out.ambient_face[f] = face_of_class.at(find(f));
    out.edge_face.assign(g.edge_count(), SIZE_MAX);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edges()[i];
        if (!h.contains_edge(e.id)) out.edge_face[i] = face_of_class.at(find(m.face_of_dart(dart_of(e.id, 0))));
    }
    out.vertex_face.assign(g.vertex_count(), SIZE_MAX);
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        VertexId v = g.vertices()[i];
        if (!h.contains_vertex(v)) out.vertex_face[i] = face_of_class.at(class_of_vertex(v));
    }
    return out;
}

inline SurfaceMap submap(const SurfaceMap& m, const SubgraphRef& h) { return restrict_map(m, h).map; }

struct FaceInterior {
    SubgraphRef interior;  // everything of the ambient graph in the closure of F
    SubgraphRef exterior;  // everything of the ambient graph outside the open face F
    SubgraphRef boundary;  // interior ∩ exterior
};

/**
 * Splits the ambient graph along face `f` of the submap on `h`.
 */
inline FaceInterior face_interior(const SurfaceMap& ambient, const SubgraphRef& h, std::size_t f) {
    Restriction r = restrict_map(ambient, h);
    if (f >= r.map.faces().size()) throw std::invalid_argument("no such face of the submap");
    const MultiGraph& g = ambient.graph();
    std::vector<VertexId> in_v, ex_v;
    std::vector<EdgeId> in_e, ex_e;
    std::vector<char> closure_v(g.vertex_count(), 0), closure_e(g.edge_count(), 0);
    for (std::size_t af = 0; af < ambient.faces().size(); ++af) {
        if (r.ambient_face[af] != f) continue;
        for (std::size_t w : ambient.faces()[af].walks) {
            const FaceWalk& fw = ambient.walks()[w];
            if (fw.trivial()) closure_v[g.vertex_index(fw.vertex)] = 1;
            for (DartId d : fw.darts) {
                closure_e[g.edge_index(edge_of(d))] = 1;
                closure_v[g.vertex_index(ambient.tail(d))] = 1;
            }
        }
    }
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        if (closure_v[i]) in_v.push_back(g.vertices()[i]);
        if (r.vertex_face[i] != f) ex_v.push_back(g.vertices()[i]);
    }
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        if (closure_e[i]) in_e.push_back(g.edges()[i].id);
        if (r.edge_face[i] != f) ex_e.push_back(g.edges()[i].id);
    }
    FaceInterior out{make_subgraph(g, in_v, in_e), make_subgraph(g, ex_v, ex_e), {}};
    out.boundary = intersect(out.interior, out.exterior);
    return out;
}

// ---------------------------------------------------------------------------
// Cutting and capping

/**
 * How to cut a non-cellular face along a simple closed curve inside it.
 * `handle`: the curve is non-separating in the face; its genus drops by one.
 * `split`: the curve separates the face; walks listed in `side` (indices
 * into SurfaceMap::walks()) end up in one new face with genus `side_genus`,
 * the rest with the remaining genus.
 */
struct CutSpec {
    std::size_t face = 0;
    enum Kind { handle, split } kind = handle;
    std::vector<std::size_t> side;
    int side_genus = 0;
};

inline SurfaceMap cut_and_cap(const SurfaceMap& m, const CutSpec& cut) {
    if (cut.face >= m.faces().size()) throw std::invalid_argument("no such face");
    const Face& target = m.faces()[cut.face];
    if (target.cellular()) throw std::invalid_argument("cannot cut a cellular face");
    std::vector<FaceTag> tags;
    for (std::size_t f = 0; f < m.faces().size(); ++f) {
        const Face& face = m.faces()[f];
        if (f != cut.face) {
            if (face.cellular()) continue;
            FaceTag t{{}, face.genus};
            for (std::size_t w : face.walks) t.walks.push_back(m.walk_ref(w));
            tags.push_back(std::move(t));
            continue;
        }
        if (cut.kind == CutSpec::handle) {
            if (face.genus < 1) throw std::invalid_argument("handle cut needs a face of positive genus");
            FaceTag t{{}, face.genus - 1};
            for (std::size_t w : face.walks) t.walks.push_back(m.walk_ref(w));
            tags.push_back(std::move(t));
            continue;
        }
        FaceTag a{{}, cut.side_genus}, b{{}, face.genus - cut.side_genus};
        if (cut.side_genus < 0 || b.genus < 0) throw std::invalid_argument("bad genus split");
        for (std::size_t w : cut.side)
            if (std::find(face.walks.begin(), face.walks.end(), w) == face.walks.end())
                throw std::invalid_argument("split side names a walk outside the face");
        for (std::size_t w : face.walks) {
            bool in_a = std::find(cut.side.begin(), cut.side.end(), w) != cut.side.end();
            (in_a ? a : b).walks.push_back(m.walk_ref(w));
        }
        if (a.walks.empty() || b.walks.empty()) throw std::invalid_argument("split must leave walks on both sides");
        tags.push_back(std::move(a));
        tags.push_back(std::move(b));
    }
    return SurfaceMap(m.graph(), m.rotations(), std::move(tags));
}

// ---------------------------------------------------------------------------
// Canonical codes

namespace detail {

inline void put16(std::string& s, std::size_t x) {
    if (x > 0xFFFF) throw std::length_error("map too large for canonical code");
    s.push_back(static_cast<char>((x >> 8) & 0xFF));
    s.push_back(static_cast<char>(x & 0xFF));
}

}  // namespace detail

/**
 * Canonical code of a connected map, optionally with an integer mark per
 * face. Equal codes iff the maps are isomorphic by a homeomorphism that may
 * reverse orientation, carrying face data (genus, walk grouping, marks) along.
 */
inline std::string canonical_code(const SurfaceMap& m, const std::vector<int>* face_marks = nullptr) {
    if (!is_connected(m.graph())) throw std::invalid_argument("canonical_code needs a connected map");
    auto mark = [&](std::size_t f) { return face_marks ? (*face_marks)[f] : 0; };
    std::string best;
    if (m.dart_count() == 0) {
        detail::put16(best, 0);
        detail::put16(best, static_cast<std::size_t>(m.faces().front().genus));
        detail::put16(best, static_cast<std::size_t>(mark(0)));
        return best;
    }
    const std::vector<DartId> all = m.darts();
    const std::size_t nd = all.size();
    DartId top = *std::max_element(all.begin(), all.end()) + 1;
    std::vector<std::size_t> label(top);
    std::vector<DartId> order;
    order.reserve(nd);

    struct Record {
        std::size_t genus, mark;
        std::vector<std::size_t> walks;
        auto operator<=>(const Record&) const = default;
    };

    for (int dir = 0; dir < 2; ++dir) {
        auto rot = [&](DartId d) { return dir == 0 ? m.sigma(d) : m.sigma_inv(d); };
        for (DartId start : all) {
            std::fill(label.begin(), label.end(), SIZE_MAX);
            order.clear();
            label[start] = 0;
            order.push_back(start);
            for (std::size_t i = 0; i < order.size(); ++i) {
                for (DartId nb : {rot(order[i]), mate(order[i])}) {
                    if (label[nb] == SIZE_MAX) {
                        label[nb] = order.size();
                        order.push_back(nb);
                    }
                }
            }
            std::string code;
            detail::put16(code, nd);
            bool worse = false, better = best.empty();
            auto emit = [&](std::size_t x) {
                detail::put16(code, x);
                if (!better && !worse) {
                    std::size_t k = code.size();
                    int c = code.compare(k - 2, 2, best, k - 2, 2);
                    if (c < 0) better = true;
                    else if (c > 0) worse = true;
                }
            };
            for (std::size_t i = 0; i < nd && !worse; ++i) {
                emit(label[rot(order[i])]);
                if (!worse) emit(label[mate(order[i])]);
            }
            if (worse) continue;
            std::vector<Record> recs;
            for (std::size_t f = 0; f < m.faces().size(); ++f) {
                const Face& face = m.faces()[f];
                if (face.cellular() && mark(f) == 0) continue;
                Record r{static_cast<std::size_t>(face.genus), static_cast<std::size_t>(mark(f)), {}};
                for (std::size_t w : face.walks) {
                    std::size_t lo = SIZE_MAX;
                    for (DartId d : m.walks()[w].darts) lo = std::min(lo, label[dir == 0 ? d : mate(d)]);
                    r.walks.push_back(lo);
                }
                std::sort(r.walks.begin(), r.walks.end());
                recs.push_back(std::move(r));
            }
            std::sort(recs.begin(), recs.end());
            emit(recs.size());
            for (const Record& r : recs) {
                if (worse) break;
                emit(r.genus);
                emit(r.mark);
                emit(r.walks.size());
                for (std::size_t w : r.walks) emit(w);
            }
            if (worse) continue;
            if (better || code < best) best = std::move(code);
        }
    }
    return best;
}

/**
 * The map encoded by an unmarked canonical code. Dart labels become
 * edges in order of their smaller label and vertices in order of their
 * smallest dart label, so isomorphic maps decode to identical objects.
 */
inline SurfaceMap map_from_canonical_code(const std::string& code) {
    std::size_t pos = 0;
    auto get = [&]() -> std::size_t {
        if (pos + 2 > code.size()) throw std::invalid_argument("truncated canonical code");
        std::size_t x = (static_cast<unsigned char>(code[pos]) << 8) | static_cast<unsigned char>(code[pos + 1]);
        pos += 2;
        return x;
    };
    std::size_t nd = get();
    if (nd == 0) {
        MultiGraph g(1);
        int genus = static_cast<int>(get());
        std::vector<FaceTag> tags;
        if (genus > 0) tags.push_back(FaceTag{{WalkRef::vertex(0)}, genus});
        return SurfaceMap(g, std::vector<std::vector<DartId>>{{}}, std::move(tags));
    }
    std::vector<std::size_t> rot(nd), mt(nd);
    for (std::size_t i = 0; i < nd; ++i) {
        rot[i] = get();
        mt[i] = get();
        if (rot[i] >= nd || mt[i] >= nd) throw std::invalid_argument("canonical code names an unknown dart");
    }
    std::vector<DartId> id(nd, no_dart);
    EdgeId edges = 0;
    for (std::size_t i = 0; i < nd; ++i) {
        if (id[i] != no_dart) continue;
        if (mt[i] == i || mt[mt[i]] != i) throw std::invalid_argument("canonical code has a broken involution");
        id[i] = dart_of(edges, 0);
        id[mt[i]] = dart_of(edges, 1);
        ++edges;
    }
    std::vector<std::size_t> vertex_of(nd, SIZE_MAX);
    std::vector<std::vector<DartId>> rotations;
    for (std::size_t i = 0; i < nd; ++i) {
        if (vertex_of[i] != SIZE_MAX) continue;
        std::vector<DartId> cyc;
        std::size_t x = i;
        do {
            if (vertex_of[x] != SIZE_MAX) throw std::invalid_argument("canonical code rotation is not a permutation");
            vertex_of[x] = rotations.size();
            cyc.push_back(id[x]);
            x = rot[x];
        } while (x != i);
        rotations.push_back(std::move(cyc));
    }
    MultiGraph g(rotations.size());
    std::vector<std::pair<VertexId, VertexId>> ends(edges);
    for (std::size_t i = 0; i < nd; ++i) {
        auto v = static_cast<VertexId>(vertex_of[i]);
        (id[i] % 2 == 0 ? ends[edge_of(id[i])].first : ends[edge_of(id[i])].second) = v;
    }
    for (auto [u, v] : ends) g.add_edge(u, v);
    std::vector<FaceTag> tags;
    std::size_t records = get();
    for (std::size_t r = 0; r < records; ++r) {
        FaceTag t;
        t.genus = static_cast<int>(get());
        if (get() != 0) throw std::invalid_argument("marked canonical codes cannot be decoded");
        std::size_t walks = get();
        for (std::size_t w = 0; w < walks; ++w) {
            std::size_t lo = get();
            if (lo >= nd) throw std::invalid_argument("canonical code names an unknown dart");
            t.walks.push_back(WalkRef::dart(id[lo]));
        }
        tags.push_back(std::move(t));
    }
    if (pos != code.size()) throw std::invalid_argument("trailing bytes in canonical code");
    return SurfaceMap(std::move(g), std::move(rotations), std::move(tags));
}

// A fixed representative of m's isomorphism class.
inline SurfaceMap canonical_form(const SurfaceMap& m) { return map_from_canonical_code(canonical_code(m)); }

inline bool map_isomorphic(const SurfaceMap& a, const SurfaceMap& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_code(a) == canonical_code(b);
}

inline std::string to_hex(const std::string& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

}  // namespace toroidal

#endif  // TOROIDAL_SURFACE_MAP_HPP
