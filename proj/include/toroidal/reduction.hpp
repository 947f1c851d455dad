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

#ifndef TOROIDAL_REDUCTION_HPP
#define TOROIDAL_REDUCTION_HPP

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "catalog.hpp"

namespace toroidal {

inline constexpr const char* library_version = "1.0.0";

struct ReductionCertificate {
    SurfaceMap start;
    std::vector<MoveRecord> moves;
    std::string terminal_id;
};

/**
 * Contracts digons, then triangles, then quadrilaterals (first admissible
 * site each time) until the map is a catalog member.
 */
inline ReductionCertificate reduce_to_irreducible(const SurfaceMap& m, const Catalog& cat) {
    if (m.genus() != 1) throw std::invalid_argument("reduction needs a torus map");
    if (!is_tight(m.graph(), 2)) throw std::invalid_argument("reduction needs a (2,2)-tight map");
    ReductionCertificate cert{m, {}, {}};
    SurfaceMap cur = m;
    for (;;) {
        if (const CatalogEntry* e = cat.find(cur)) {
            cert.terminal_id = e->id;
            return cert;
        }
        auto r = find_reduction(cur);
        if (!r) throw std::logic_error("irreducible map missing from the catalog: " + to_hex(canonical_code(cur)));
        cert.moves.push_back(r->record);
        cur = std::move(r->map);
    }
}

struct ReplayReport {
    bool ok = false;
    std::string message;
    std::size_t steps = 0;
};

// Re-applies every move, checking tightness and recorded codes, then catalog membership.
inline ReplayReport replay_certificate(const ReductionCertificate& cert, const Catalog& cat) {
    ReplayReport rep;
    SurfaceMap cur = cert.start;
    if (!is_tight(cur.graph(), 2)) {
        rep.message = "start map is not (2,2)-tight";
        return rep;
    }
    for (const MoveRecord& mv : cert.moves) {
        try {
            cur = apply_move(cur, mv);
        } catch (const std::exception& e) {
            rep.message = "step " + std::to_string(rep.steps + 1) + ": " + e.what();
            return rep;
        }
        ++rep.steps;
        if (!is_tight(cur.graph(), 2)) {
            rep.message = "step " + std::to_string(rep.steps) + " is not (2,2)-tight";
            return rep;
        }
        if (!mv.target_code.empty() && mv.target_code != to_hex(canonical_code(cur))) {
            rep.message = "step " + std::to_string(rep.steps) + " does not match its recorded code";
            return rep;
        }
    }
    const CatalogEntry* e = cat.find(cur);
    if (!e) {
        rep.message = "final map is not in the catalog";
        return rep;
    }
    if (e->id != cert.terminal_id) {
        rep.message = "final map is " + e->id + ", certificate claims " + cert.terminal_id;
        return rep;
    }
    rep.ok = true;
    rep.message = "reached " + e->id + " in " + std::to_string(rep.steps) + " steps";
    return rep;
}

inline Json certificate_to_json(const ReductionCertificate& c) {
    Json j;
    j["format"] = "toroidal-certificate";
    j["version"] = 1;
    j["library_version"] = library_version;
    j["start"] = map_to_json(c.start);
    Json moves = Json::array();
    for (const MoveRecord& r : c.moves) moves.push_back(move_to_json(r));
    j["moves"] = std::move(moves);
    j["terminal"] = c.terminal_id;
    return j;
}

inline ReductionCertificate certificate_from_json(const Json& j) {
    const std::string root = "$";
    if (!j.is_object() || j.empty()) throw ParseError(root, "empty or non-object certificate");
    if (detail::get_field<std::string>(j, "format", root) != "toroidal-certificate") throw ParseError("$.format", "not a certificate");
    if (detail::get_field<int>(j, "version", root) != 1) throw ParseError("$.version", "unsupported version");
    ReductionCertificate c;
    try {
        c.start = map_from_json(detail::get_field<Json>(j, "start", root));
    } catch (const ParseError& e) {
        throw ParseError("$.start", e.what());
    }
    const Json& moves = detail::get_array(j, "moves", root);
    for (std::size_t i = 0; i < moves.size(); ++i) c.moves.push_back(move_from_json(moves[i], "$.moves[" + std::to_string(i) + "]"));
    c.terminal_id = detail::get_field<std::string>(j, "terminal", root);
    return c;
}

// ---------------------------------------------------------------------------
// Random growth

/**
 * One random digon, triangle or quadrilateral split of m, or a divalent
 * addition when `allow_additions` is set. Splits keep (2,2)-tightness.
 */
template <class Rng>
MoveResult random_growth_move(const SurfaceMap& m, Rng& rng, bool allow_additions = false) {
    auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::size_t kind = pick(allow_additions ? 4 : 3);
        VertexId z = m.graph().vertices()[pick(m.vertex_count())];
        const auto& rot = m.rotation(z);
        std::size_t n = rot.size();
        try {
            if (kind == 0) {
                std::size_t s = n ? pick(n) : 0, len = pick(n + 1);
                std::vector<DartId> interval;
                for (std::size_t i = 0; i < len; ++i) interval.push_back(rot[(s + i) % n]);
                return digon_split(m, z, interval);
            }
            if (kind == 1) {
                if (n == 0) continue;
                return triangle_split(m, z, rot[pick(n)], rot[pick(n)]);
            }
            if (kind == 2) {
                if (n < 2) continue;
                return quad_split(m, z, rot[pick(n)], rot[pick(n)]);
            }
            std::size_t f = pick(m.faces().size());
            std::vector<Corner> cs;
            for (std::size_t w : m.faces()[f].walks)
                for (const Corner& c : walk_corners(m, w)) cs.push_back(c);
            FaceSplit split;
            if (!m.faces()[f].cellular() && pick(2) == 0) split = FaceSplit{false, {}, 0};
            return henneberg_add(m, f, cs[pick(cs.size())], cs[pick(cs.size())], split);
        } catch (const std::invalid_argument&) {
            continue;
        }
    }
    throw std::runtime_error("no applicable growth move found");
}

// ---------------------------------------------------------------------------
// Sphere, plane and annulus checks

struct SurfaceCheckReport {
    std::size_t graphs = 0, sphere_maps = 0, plane_maps = 0;
    std::size_t sphere_failures = 0, plane_failures = 0;
    std::vector<std::string> annulus_irreducibles;  // canonical codes (hex) with puncture marks
    std::vector<std::string> messages;
};

/**
 * Tight sphere maps on 2..sphere_max vertices must have two faces of degree
 * at most 3, and keep one outside any single punctured face. Tight annulus
 * maps (sphere maps with two punctures) on up to annulus_max vertices are
 * tested for irreducibility.
 */
inline SurfaceCheckReport sphere_plane_annulus_checks(int sphere_max = 7, int annulus_max = 4) {
    SurfaceCheckReport rep;
    std::set<std::string> annulus;
    for (const MultiGraph& g : enumerate_tight_graphs(std::max(sphere_max, annulus_max))) {
        int n = static_cast<int>(g.vertex_count());
        ++rep.graphs;
        for (const SurfaceMap& s : enumerate_sphere_embeddings(g)) {
            if (n >= 2 && n <= sphere_max) {
                ++rep.sphere_maps;
                if (small_faces(s) < 2) {
                    ++rep.sphere_failures;
                    rep.messages.push_back("sphere map with fewer than two small faces: " + to_hex(canonical_code(s)));
                }
                for (std::size_t f = 0; f < s.faces().size(); ++f) {
                    ++rep.plane_maps;
                    if (small_faces(s, f) < 1) {
                        ++rep.plane_failures;
                        rep.messages.push_back("plane map without a small inner face: " + to_hex(canonical_code(s)));
                    }
                }
            }
            if (n <= annulus_max)
                for (const AnnulusMap& a : annulus_variants(s))
                    if (annulus_irreducible(a)) annulus.insert(to_hex(canonical_code(a.sphere, &a.punctures)));
        }
    }
    rep.annulus_irreducibles.assign(annulus.begin(), annulus.end());
    return rep;
}

}  // namespace toroidal

#endif  // TOROIDAL_REDUCTION_HPP
