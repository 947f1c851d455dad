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

#ifndef TOROIDAL_IRREDUCIBLE_HPP
#define TOROIDAL_IRREDUCIBLE_HPP

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "drawings.hpp"
#include "embeddings.hpp"
#include "homology.hpp"
#include "moves.hpp"

namespace toroidal {

struct QuadEvidence {
    std::size_t face = 0;
    QuadContext quad;
    std::vector<Blocker> d13, d24;  // maximal witnesses; empty for a degenerate diagonal
};

struct IrreducibleVerdict {
    bool irreducible = false;
    std::optional<MoveResult> reduction;  // first sparsity-preserving contraction found
    std::vector<QuadEvidence> quads;      // filled when irreducible
};

/**
 * Looks for a contraction that keeps the map (2,2)-sparse, in the order
 * digons, triangles, quadrilaterals; within a kind by face index, then edge
 * id or diagonal (13 before 24). Faces that are not discs are never
 * contracted.
 */
inline std::optional<MoveResult> find_reduction(const SurfaceMap& m) {
    const auto& faces = m.faces();
    for (std::size_t f = 0; f < faces.size(); ++f)
        if (faces[f].cellular() && m.face_degree(f) == 2) return digon_contract(m, f);
    for (std::size_t f = 0; f < faces.size(); ++f) {
        if (!faces[f].cellular() || m.face_degree(f) != 3) continue;
        std::vector<EdgeId> es;
        for (DartId d : m.walks()[faces[f].walks.front()].darts) es.push_back(edge_of(d));
        std::sort(es.begin(), es.end());
        for (EdgeId e : es) {
            auto r = triangle_contract(m, f, e);
            if (r.result) return std::move(*r.result);
        }
    }
    for (std::size_t f = 0; f < faces.size(); ++f) {
        if (!faces[f].cellular() || m.face_degree(f) != 4) continue;
        QuadContext q = quad_context(m, m.walks()[faces[f].walks.front()].darts);
        for (Diagonal d : {Diagonal::d13, Diagonal::d24}) {
            if (diagonal_degenerate(q, d)) continue;
            auto r = quad_contract(m, f, d);
            if (r.result) return std::move(*r.result);
        }
    }
    return std::nullopt;
}

inline IrreducibleVerdict is_irreducible(const SurfaceMap& m) {
    if (!is_tight(m.graph(), 2)) throw std::invalid_argument("is_irreducible needs a (2,2)-tight map");
    IrreducibleVerdict v;
    v.reduction = find_reduction(m);
    if (v.reduction) return v;
    v.irreducible = true;
    for (std::size_t f = 0; f < m.faces().size(); ++f) {
        if (!m.faces()[f].cellular() || m.face_degree(f) != 4) continue;
        QuadEvidence ev{f, quad_context(m, m.walks()[m.faces()[f].walks.front()].darts), {}, {}};
        for (Diagonal d : {Diagonal::d13, Diagonal::d24})
            if (!diagonal_degenerate(ev.quad, d)) (d == Diagonal::d13 ? ev.d13 : ev.d24) = find_blockers(m.graph(), ev.quad, d);
        v.quads.push_back(std::move(ev));
    }
    return v;
}

// Cheap necessary condition for irreducibility: no cellular digon or triangle.
inline bool no_small_faces(const SurfaceMap& m) {
    for (std::size_t f = 0; f < m.faces().size(); ++f)
        if (m.faces()[f].cellular() && m.face_degree(f) <= 3) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Blocker taxonomy

class BlockerClassifier {
public:
    BlockerClassifier() {
        for (const Drawing& d : blocker_shape_drawings()) shapes_.emplace(canonical_code(drawing_map(d)), d.name);
    }

    // Shape name of a blocker of map m; throws if it is outside the taxonomy.
    std::string classify(const SurfaceMap& m, const Blocker& b) const {
        SurfaceMap sub = submap(m, b.subgraph);
        auto it = shapes_.find(canonical_code(sub));
        if (it == shapes_.end()) throw std::domain_error("blocker shape outside the taxonomy");
        return it->second;
    }

    std::optional<std::string> try_classify(const SurfaceMap& m, const Blocker& b) const {
        try {
            return classify(m, b);
        } catch (const std::domain_error&) {
            return std::nullopt;
        }
    }

private:
    std::map<std::string, std::string> shapes_;
};

inline std::string classify_blocker(const SurfaceMap& m, const Blocker& b) {
    static const BlockerClassifier classifier;
    return classifier.classify(m, b);
}

/**
 * Checks the structure of irreducible evidence: per quadrilateral both
 * diagonals carry exactly one maximal type-2 blocker, the two are disjoint,
 * and at least one is an inessential K2. Returns a description of the first
 * violation, or an empty string.
 */
inline std::string check_quad_evidence(const SurfaceMap& m, const QuadEvidence& ev) {
    for (const auto* side : {&ev.d13, &ev.d24}) {
        if (side->size() != 1) return "expected one maximal blocker per diagonal, got " + std::to_string(side->size());
        const Blocker& b = side->front();
        if (b.kind != BlockerKind::type2) return "blocker is not type 2";
        if (gamma(b.subgraph) != 3) return "type-2 blocker with wrong count";
    }
    const SubgraphRef &h1 = ev.d13.front().subgraph, &h2 = ev.d24.front().subgraph;
    if (!intersect(h1, h2).vertices.empty()) return "paired blockers intersect";
    std::string s1 = classify_blocker(m, ev.d13.front()), s2 = classify_blocker(m, ev.d24.front());
    if (s1 != "inessential-K2" && s2 != "inessential-K2") return "no inessential K2 blocker";
    return {};
}

// ---------------------------------------------------------------------------
// Tight submaps

// Vertex sets of all (2,2)-tight subgraphs; tight subgraphs of sparse graphs are induced.
inline std::vector<SubgraphRef> tight_subgraphs(const MultiGraph& g) {
    if (g.vertex_count() > 20) throw std::invalid_argument("too many vertices for subset enumeration");
    std::vector<SubgraphRef> out;
    std::size_t n = g.vertex_count();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<VertexId> vs;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) vs.push_back(g.vertices()[i]);
        SubgraphRef s = induced_subgraph(g, vs);
        if (gamma(s) == 2 && is_tight(s, 2)) out.push_back(std::move(s));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Sphere, plane and annulus

struct SphereReport {
    std::size_t graphs = 0, maps = 0, failures = 0;
    std::vector<std::string> messages;
};

inline std::size_t small_faces(const SurfaceMap& m, std::size_t skip = SIZE_MAX) {
    std::size_t c = 0;
    for (std::size_t f = 0; f < m.faces().size(); ++f)
        if (f != skip && m.faces()[f].cellular() && m.face_degree(f) <= 3) ++c;
    return c;
}

// Annulus maps: sphere maps with a puncture count per face, two in total.
struct AnnulusMap {
    SurfaceMap sphere;
    std::vector<int> punctures;
};

inline std::vector<AnnulusMap> annulus_variants(const SurfaceMap& sphere) {
    std::vector<AnnulusMap> out;
    std::size_t nf = sphere.faces().size();
    for (std::size_t a = 0; a < nf; ++a)
        for (std::size_t b = a; b < nf; ++b) {
            std::vector<int> p(nf, 0);
            ++p[a];
            ++p[b];
            out.push_back({sphere, std::move(p)});
        }
    return out;
}

// Irreducible on the annulus: no unpunctured digon/triangle, every unpunctured quadrilateral blocked.
inline bool annulus_irreducible(const AnnulusMap& am) {
    const SurfaceMap& m = am.sphere;
    for (std::size_t f = 0; f < m.faces().size(); ++f) {
        if (am.punctures[f] != 0) continue;
        std::size_t deg = m.face_degree(f);
        if (deg <= 3) return false;
        if (deg != 4) continue;
        QuadContext q = quad_context(m, m.walks()[m.faces()[f].walks.front()].darts);
        for (Diagonal d : {Diagonal::d13, Diagonal::d24}) {
            if (diagonal_degenerate(q, d)) continue;
            if (find_blockers(m.graph(), q, d).empty()) return false;
        }
    }
    return true;
}

}  // namespace toroidal

#endif  // TOROIDAL_IRREDUCIBLE_HPP
