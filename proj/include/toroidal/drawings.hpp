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

#ifndef TOROIDAL_DRAWINGS_HPP
#define TOROIDAL_DRAWINGS_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "homology.hpp"

// Torus maps given as straight-line drawings in the unit square with
// opposite sides identified. Used as reference fixtures.

namespace toroidal {

struct DrawnEdge {
    int u, v;
    int dx = 0, dy = 0;  // the edge runs from pos(u) to pos(v) + (dx, dy)
};

struct Drawing {
    std::string name;
    std::vector<std::pair<double, double>> pos;
    std::vector<DrawnEdge> edges;
};

/**
 * The map of a drawing: rotations are counterclockwise angle order. When
 * the rotation system is planar the face data comes from the lattice
 * offsets: the two walks that wind around become one annular face, and a
 * lone walk that does not wind is capped by a handle.
 */
inline SurfaceMap drawing_map(const Drawing& d) {
    MultiGraph g(d.pos.size());
    for (const DrawnEdge& e : d.edges) g.add_edge(static_cast<VertexId>(e.u), static_cast<VertexId>(e.v));
    if (d.edges.empty()) {
        if (d.pos.size() != 1) throw std::invalid_argument("edgeless drawings must have one vertex");
        return SurfaceMap(g, std::vector<std::vector<DartId>>{{}}, {FaceTag{{WalkRef::vertex(0)}, 1}});
    }
    std::vector<std::vector<std::pair<double, DartId>>> around(d.pos.size());
    std::vector<CycleClass> offset(2 * d.edges.size());
    for (std::size_t i = 0; i < d.edges.size(); ++i) {
        const DrawnEdge& e = d.edges[i];
        double x = d.pos[e.v].first + e.dx - d.pos[e.u].first;
        double y = d.pos[e.v].second + e.dy - d.pos[e.u].second;
        around[e.u].emplace_back(std::atan2(y, x), dart_of(static_cast<EdgeId>(i), 0));
        around[e.v].emplace_back(std::atan2(-y, -x), dart_of(static_cast<EdgeId>(i), 1));
        offset[2 * i] = {e.dx, e.dy};
        offset[2 * i + 1] = {-e.dx, -e.dy};
    }
    std::vector<std::vector<DartId>> rot(d.pos.size());
    for (std::size_t v = 0; v < around.size(); ++v) {
        std::sort(around[v].begin(), around[v].end());
        for (std::size_t i = 1; i < around[v].size(); ++i)
            if (std::abs(around[v][i].first - around[v][i - 1].first) < 1e-9)
                throw std::invalid_argument(d.name + ": two edges leave a vertex in the same direction");
        for (auto& [a, dart] : around[v]) rot[v].push_back(dart);
    }
    SurfaceMap bare(g, rot);
    if (rotation_genus(bare) == 1) return bare;
    if (rotation_genus(bare) != 0) throw std::invalid_argument(d.name + ": drawing is not a torus map");
    std::vector<WalkRef> winding;
    for (std::size_t w = 0; w < bare.walks().size(); ++w) {
        CycleClass c{0, 0};
        for (DartId dart : bare.walks()[w].darts) c = c + offset[dart];
        if (!is_zero(c)) winding.push_back(bare.walk_ref(w));
    }
    if (winding.size() == 2) return SurfaceMap(g, rot, {FaceTag{winding, 0}});
    if (winding.empty() && bare.walks().size() == 1) return SurfaceMap(g, rot, {FaceTag{{bare.walk_ref(0)}, 1}});
    throw std::invalid_argument(d.name + ": cannot infer the non-cellular face");
}

namespace detail {

inline Drawing diamond(std::string name) {
    return Drawing{std::move(name),
                   {{.25, .5}, {.5, .75}, {.75, .5}, {.5, .25}},
                   {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 3, 0, 1}}};
}

inline Drawing with(Drawing d, std::vector<std::pair<double, double>> pos, std::vector<DrawnEdge> edges) {
    d.pos.insert(d.pos.end(), pos.begin(), pos.end());
    d.edges.insert(d.edges.end(), edges.begin(), edges.end());
    return d;
}

inline const std::vector<std::pair<double, double>> column{{.2, .2}, {.2, .4}, {.2, .6}, {.2, .8}};
inline const std::vector<DrawnEdge> column_edges{{0, 1}, {1, 2}, {2, 3}, {3, 0, 0, 1}};

}  // namespace detail

// The irreducible torus maps without divalent vertices, by catalog name.
inline std::vector<Drawing> named_irreducible_drawings() {
    using detail::column;
    using detail::column_edges;
    std::vector<Drawing> out;
    out.push_back({"G1_1", {{.5, .5}}, {}});
    out.push_back(detail::with(detail::diamond("G4_1"), {}, {{2, 0, 1, 0}}));
    out.push_back({"G4_2",
                   {{.25, .25}, {.75, .25}, {.25, .75}, {.75, .75}},
                   {{3, 1}, {0, 2}, {2, 3}, {1, 0, 1, 0}, {3, 1, 0, 1}, {2, 0, 0, 1}}});
    out.push_back({"G5_1",
                   {{.25, .25}, {.25, .75}, {.5, .75}, {.75, .75}, {.75, .25}},
                   {{0, 1}, {1, 2}, {2, 3}, {3, 0, 0, 1}, {3, 1, 1, 0}, {1, 4, -1, 1}, {2, 4}, {4, 0, 1, 0}}});
    out.push_back(detail::with(detail::diamond("G5_2"), {{.75, .25}}, {{2, 4}, {2, 4, 0, 1}, {4, 0, 1, 0}}));
    out.push_back({"G6_1",
                   {{0, .5}, {.5, .5}, {.25, .25}, {.25, .75}, {.75, .25}, {.75, .75}},
                   {{0, 2}, {0, 3}, {1, 2}, {3, 2, 0, 1}, {1, 3}, {1, 4}, {1, 5}, {5, 0, 1, 0}, {4, 0, 1, 0}, {5, 4, 0, 1}}});
    Drawing g62{"G6_2", column, column_edges};
    g62 = detail::with(g62, {{.8, .8}, {.8, .2}}, {{5, 3, 1, -1}, {4, 3}, {4, 5, 0, 1}, {4, 1, 1, 0}, {5, 1}, {2, 0, 1, 0}});
    out.push_back(g62);
    Drawing g63{"G6_3", column, column_edges};
    g63 = detail::with(g63, {{.8, .8}, {.8, .4}}, {{4, 3}, {4, 5}, {1, 5}, {0, 1, -1, 0}, {5, 2, 1, 0}, {4, 0, 1, 1}});
    out.push_back(g63);
    Drawing g64{"G6_4", column, column_edges};
    g64 = detail::with(g64, {{.8, .8}, {.8, .2}}, {{4, 2}, {4, 5}, {0, 5}, {4, 1, 1, 0}, {5, 3, 1, -1}, {4, 5, 0, 1}});
    out.push_back(g64);
    out.push_back(detail::with(detail::diamond("G6_5"), {{.25, .25}, {.75, .25}},
                               {{5, 4, 1, 0}, {4, 0}, {0, 4, 0, 1}, {2, 5}, {2, 5, 0, 1}}));
    out.push_back({"G7_1",
                   {{0, .5}, {.2, .7}, {.4, .5}, {.2, .3}, {.8, .3}, {.6, .5}, {.8, .7}},
                   {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 3, 0, 1}, {4, 0, 1, 0}, {2, 5}, {2, 5, 0, 1}, {4, 5}, {6, 4, 0, 1}, {6, 5}, {6, 0, 1, 0}}});
    out.push_back({"G8_1",
                   {{.1, .5}, {.25, .7}, {.4, .5}, {.25, .3}, {.75, .3}, {.9, .5}, {.75, .7}, {.6, .5}},
                   {{0, 1}, {1, 2}, {3, 0}, {1, 3, 0, 1}, {2, 3}, {4, 5}, {6, 4, 0, 1}, {6, 5}, {5, 0, 1, 0}, {7, 2}, {7, 4}, {6, 7}, {2, 7, 0, 1}, {5, 0, 1, 1}}});
    return out;
}

// The ten maximal blocker shapes: one inessential, nine essential.
inline std::vector<Drawing> blocker_shape_drawings() {
    std::vector<Drawing> out;
    out.push_back({"inessential-K2", {{.25, .5}, {.75, .5}}, {{0, 1}}});
    Drawing a{"essential-a", {{.2, .5}, {.8, .5}, {.2, .75}, {.8, .75}}, {{0, 1}, {0, 2}, {2, 0, 0, 1}, {1, 3}, {3, 1, 0, 1}}};
    out.push_back(a);
    Drawing b = detail::with(a, {{.5, .75}}, {{0, 4}, {4, 1, 0, 1}});
    b.name = "essential-b";
    out.push_back(b);
    Drawing c = detail::with(a, {{.5, .75}}, {{2, 4}, {4, 3}});
    c.name = "essential-c";
    out.push_back(c);
    out.push_back({"essential-d", {{.2, .5}, {.8, .5}, {.2, .75}, {.5, .75}}, {{0, 1}, {0, 2}, {2, 0, 0, 1}, {1, 3}, {0, 3, 0, -1}}});
    out.push_back({"essential-e", {{.2, .5}, {.8, .5}, {.5, .75}}, {{0, 1}, {1, 2}, {0, 2, 0, -1}}});
    out.push_back({"essential-f", {{.2, .5}, {.2, .75}, {.8, .5}}, {{0, 1}, {1, 0, 0, 1}, {0, 2}}});
    Drawing qa = detail::with(detail::diamond("essential-quad-a"), {{.25, .75}, {.75, .75}}, {{0, 4}, {4, 0, 0, 1}, {2, 5}, {5, 2, 0, 1}});
    out.push_back(qa);
    out.push_back(detail::with(detail::diamond("essential-quad-b"), {{.25, .75}}, {{0, 4}, {4, 0, 0, 1}}));
    out.push_back(detail::diamond("essential-quad-c"));
    return out;
}

inline SurfaceMap named_map(const std::string& name) {
    for (const auto& list : {named_irreducible_drawings(), blocker_shape_drawings()})
        for (const Drawing& d : list)
            if (d.name == name) return drawing_map(d);
    throw std::invalid_argument("no drawing named " + name);
}

}  // namespace toroidal

#endif  // TOROIDAL_DRAWINGS_HPP
