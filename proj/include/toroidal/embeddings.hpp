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

#ifndef TOROIDAL_EMBEDDINGS_HPP
#define TOROIDAL_EMBEDDINGS_HPP

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "surface_map.hpp"

namespace toroidal {

/**
 * Depth-first generator of all rotation systems of a connected graph whose
 * genus stays within a bound.
 *
 * Edges are inserted in breadth-first order so the partial map stays
 * connected. A dart entering a vertex of current degree k has k corners to
 * choose from, so every rotation system is produced exactly once. Joining
 * two corners of one walk splits it; joining two walks merges them and
 * raises the genus by one, which is where branches get cut.
 */
class RotationEnumerator {
public:
    // Called with the rotation (graph vertex order) and its genus.
    using Visitor = std::function<void(const std::vector<std::vector<DartId>>&, int)>;

    RotationEnumerator(const MultiGraph& g, int max_genus) : g_(g), max_genus_(max_genus) {
        if (!is_connected(g)) throw std::invalid_argument("rotation enumeration needs a connected graph");
        std::size_t n = g.vertex_count(), m = g.edge_count();
        nd_ = 2 * m;
        next_.assign(nd_, npos);
        prev_.assign(nd_, npos);
        tail_.resize(nd_);
        for (std::size_t i = 0; i < m; ++i) {
            tail_[2 * i] = g.vertex_index(g.edges()[i].u);
            tail_[2 * i + 1] = g.vertex_index(g.edges()[i].v);
        }
        any_.assign(n, npos);
        // Breadth-first edge order.
        std::vector<char> reached(n, 0), used(m, 0);
        std::deque<std::size_t> q;
        if (n > 0) {
            q.push_back(0);
            reached[0] = 1;
        }
        while (!q.empty()) {
            std::size_t x = q.front();
            q.pop_front();
            for (std::size_t i = 0; i < m; ++i) {
                if (used[i] || (tail_[2 * i] != x && tail_[2 * i + 1] != x)) continue;
                used[i] = 1;
                std::size_t d = tail_[2 * i] == x ? 2 * i : 2 * i + 1;  // dart at the reached end
                order_.push_back(d);
                std::size_t y = tail_[d ^ 1];
                if (!reached[y]) {
                    reached[y] = 1;
                    q.push_back(y);
                }
            }
        }
    }

    // Visits every rotation system of genus <= max_genus; returns the count.
    std::uint64_t run(const Visitor& visit) {
        visit_ = &visit;
        count_ = 0;
        std::fill(next_.begin(), next_.end(), npos);
        std::fill(any_.begin(), any_.end(), npos);
        if (g_.vertex_count() == 0) return 0;
        present_ = 1;
        faces_ = 1;
        placed_ = 0;
        recurse(0);
        return count_;
    }

    std::uint64_t leaves() const { return count_; }

private:
    static constexpr std::size_t npos = SIZE_MAX;

    int genus() const {
        long long chi = static_cast<long long>(present_) - static_cast<long long>(placed_) + static_cast<long long>(faces_);
        return static_cast<int>((2 - chi) / 2);
    }

    void insert_after(std::size_t p, std::size_t d) {
        std::size_t v = tail_[d];
        if (p == npos) {
            next_[d] = prev_[d] = d;
            any_[v] = d;
            return;
        }
        std::size_t s = next_[p];
        next_[p] = d;
        prev_[d] = p;
        next_[d] = s;
        prev_[s] = d;
    }

    void remove(std::size_t d) {
        std::size_t v = tail_[d];
        if (next_[d] == d) {
            any_[v] = npos;
        } else {
            std::size_t p = prev_[d], s = next_[d];
            next_[p] = s;
            prev_[s] = p;
            if (any_[v] == d) any_[v] = s;
        }
        next_[d] = prev_[d] = npos;
    }

    // Walk id of every placed dart (phi = next o mate).
    std::vector<std::size_t> label_walks() const {
        std::vector<std::size_t> walk(nd_, npos);
        std::size_t id = 0;
        for (std::size_t d = 0; d < nd_; ++d) {
            if (next_[d] == npos || walk[d] != npos) continue;
            std::size_t x = d;
            do {
                walk[x] = id;
                x = next_[x ^ 1];
            } while (x != d);
            ++id;
        }
        return walk;
    }

    std::vector<std::size_t> darts_at(std::size_t v) const {
        std::vector<std::size_t> out;
        std::size_t a = any_[v];
        if (a == npos) return out;
        std::size_t x = a;
        do {
            out.push_back(x);
            x = next_[x];
        } while (x != a);
        return out;
    }

    void recurse(std::size_t k) {
        if (k == order_.size()) {
            emit();
            return;
        }
        std::size_t d = order_[k], e = d ^ 1;
        std::size_t x = tail_[d], y = tail_[e];
        std::vector<std::size_t> cx = darts_at(x);
        if (any_[y] == npos && y != x) {
            // y enters the map now: the walk just grows.
            if (cx.empty()) cx.push_back(npos);
            for (std::size_t p : cx) {
                insert_after(p, d);
                insert_after(npos, e);
                ++present_;
                ++placed_;
                recurse(k + 1);
                --placed_;
                --present_;
                remove(e);
                remove(d);
            }
            return;
        }
        if (cx.empty()) cx.push_back(npos);
        const std::vector<std::size_t> walk = label_walks();
        for (std::size_t p : cx) {
            std::size_t wp = p == npos ? npos : walk[next_[p]];
            insert_after(p, d);
            for (std::size_t q : darts_at(y)) {
                // Both ends in one corner, or two corners of one walk: the walk splits.
                bool same = q == d || (x == y && q == p) || walk[next_[q]] == wp;
                long long delta = same ? 1 : -1;
                faces_ = static_cast<std::size_t>(static_cast<long long>(faces_) + delta);
                ++placed_;
                if (genus() <= max_genus_) {
                    insert_after(q, e);
                    recurse(k + 1);
                    remove(e);
                }
                --placed_;
                faces_ = static_cast<std::size_t>(static_cast<long long>(faces_) - delta);
            }
            remove(d);
        }
    }

    void emit() {
        ++count_;
        std::vector<std::vector<DartId>> rot(g_.vertex_count());
        for (std::size_t v = 0; v < rot.size(); ++v)
            for (std::size_t d : darts_at(v)) rot[v].push_back(dart_of(g_.edges()[d / 2].id, static_cast<int>(d & 1)));
        (*visit_)(rot, genus());
    }

    const MultiGraph& g_;
    int max_genus_;
    std::size_t nd_ = 0;
    std::vector<std::size_t> next_, prev_, tail_, any_, order_;
    std::size_t present_ = 0, placed_ = 0, faces_ = 0;
    std::uint64_t count_ = 0;
    const Visitor* visit_ = nullptr;
};

/**
 * Every way to make a torus map from a sphere map: one walk capped by a
 * torus with a hole, or two walks joined into one annular face.
 */
inline std::vector<SurfaceMap> torus_tag_variants(const SurfaceMap& sphere) {
    if (sphere.genus() != 0 || !sphere.cellular()) throw std::invalid_argument("tag variants need a cellular sphere map");
    std::vector<SurfaceMap> out;
    std::size_t nw = sphere.walks().size();
    for (std::size_t w = 0; w < nw; ++w)
        out.emplace_back(sphere.graph(), sphere.rotations(), std::vector<FaceTag>{FaceTag{{sphere.walk_ref(w)}, 1}});
    for (std::size_t a = 0; a < nw; ++a)
        for (std::size_t b = a + 1; b < nw; ++b)
            out.emplace_back(sphere.graph(), sphere.rotations(),
                             std::vector<FaceTag>{FaceTag{{sphere.walk_ref(a), sphere.walk_ref(b)}, 0}});
    return out;
}

struct EmbeddingOptions {
    bool cellular = true;
    bool noncellular = true;
    // Optional cheap filter applied to each candidate before canonicalization.
    std::function<bool(const SurfaceMap&)> accept;
};

/**
 * All torus maps of a connected graph up to isomorphism (reflections
 * included), in canonical-code order.
 */
inline std::vector<SurfaceMap> enumerate_torus_embeddings(const MultiGraph& g, const EmbeddingOptions& opt = {}) {
    std::map<std::string, SurfaceMap> found;
    auto consider = [&](SurfaceMap m) {
        if (opt.accept && !opt.accept(m)) return;
        std::string code = canonical_code(m);
        if (!found.count(code)) found.emplace(std::move(code), std::move(m));
    };
    if (g.edge_count() == 0) {
        if (g.vertex_count() != 1) throw std::invalid_argument("torus embeddings need a connected graph");
        if (opt.noncellular) consider(SurfaceMap(g, std::vector<std::vector<DartId>>{{}}, {FaceTag{{WalkRef::vertex(g.vertices()[0])}, 1}}));
    } else {
        RotationEnumerator en(g, 1);
        en.run([&](const std::vector<std::vector<DartId>>& rot, int genus) {
            if (genus == 1 && opt.cellular) consider(SurfaceMap(g, rot));
            if (genus == 0 && opt.noncellular)
                for (SurfaceMap& v : torus_tag_variants(SurfaceMap(g, rot))) consider(std::move(v));
        });
    }
    std::vector<SurfaceMap> out;
    for (auto& [code, m] : found) out.push_back(std::move(m));
    return out;
}

// All sphere maps of a connected graph up to isomorphism.
inline std::vector<SurfaceMap> enumerate_sphere_embeddings(const MultiGraph& g) {
    std::map<std::string, SurfaceMap> found;
    if (g.edge_count() == 0) return {SurfaceMap(g, std::vector<std::vector<DartId>>(g.vertex_count()))};
    RotationEnumerator en(g, 0);
    en.run([&](const std::vector<std::vector<DartId>>& rot, int) {
        SurfaceMap m(g, rot);
        std::string code = canonical_code(m);
        if (!found.count(code)) found.emplace(std::move(code), std::move(m));
    });
    std::vector<SurfaceMap> out;
    for (auto& [code, m] : found) out.push_back(std::move(m));
    return out;
}

}  // namespace toroidal

#endif  // TOROIDAL_EMBEDDINGS_HPP
