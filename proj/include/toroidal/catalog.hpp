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

#ifndef TOROIDAL_CATALOG_HPP
#define TOROIDAL_CATALOG_HPP

#include <algorithm>
#include <atomic>
#include <deque>
#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "io.hpp"
#include "irreducible.hpp"

namespace toroidal {

// ---------------------------------------------------------------------------
// Underlying graphs

// g relabeled so that vertex i is the i-th vertex of its canonical order.
inline MultiGraph canonical_relabel(const MultiGraph& g) {
    GraphCanonizer c(g);
    c.code();
    std::vector<std::size_t> pos(g.vertex_count());
    for (std::size_t i = 0; i < c.labeling().size(); ++i) pos[c.labeling()[i]] = i;
    std::vector<std::pair<VertexId, VertexId>> es;
    for (const Edge& e : g.edges()) {
        auto a = static_cast<VertexId>(pos[g.vertex_index(e.u)]), b = static_cast<VertexId>(pos[g.vertex_index(e.v)]);
        es.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(es.begin(), es.end());
    MultiGraph h(g.vertex_count());
    for (auto [a, b] : es) h.add_edge(a, b);
    return h;
}

/**
 * One representative per isomorphism class of loopless (2,2)-tight
 * multigraphs with 1..n_max vertices, ordered by vertex count and then
 * canonical code. Built by adding one edge at a time to (2,2)-sparse graphs
 * and merging isomorphic results at every edge count. Edge multiplicity
 * never exceeds 2 in a (2,2)-sparse graph.
 */
inline std::vector<MultiGraph> enumerate_tight_graphs(int n_max) {
    std::vector<MultiGraph> out;
    for (int n = 1; n <= n_max; ++n) {
        std::map<std::vector<std::uint8_t>, MultiGraph> level;
        MultiGraph empty(static_cast<std::size_t>(n));
        level.emplace(graph_canonical_code(empty), empty);
        for (int k = 0; k < 2 * n - 2; ++k) {
            std::map<std::vector<std::uint8_t>, MultiGraph> next;
            for (const auto& [code, g] : level) {
                for (VertexId a = 0; a < static_cast<VertexId>(n); ++a) {
                    for (VertexId b = a + 1; b < static_cast<VertexId>(n); ++b) {
                        if (g.multiplicity(a, b) >= 2) continue;
                        MultiGraph h = g;
                        h.add_edge(a, b);
                        if (!is_sparse(h, 2)) continue;
                        auto c = graph_canonical_code(h);
                        if (!next.count(c)) next.emplace(std::move(c), canonical_relabel(h));
                    }
                }
            }
            level = std::move(next);
        }
        for (auto& [code, g] : level) out.push_back(std::move(g));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Catalog

struct CatalogEntry {
    std::string id;
    std::string code;  // hex canonical map code
    SurfaceMap map;
};

class Catalog {
public:
    std::vector<CatalogEntry> entries;

    std::size_t size() const { return entries.size(); }

    const CatalogEntry* find_code(const std::string& hex) const {
        for (const CatalogEntry& e : entries)
            if (e.code == hex) return &e;
        return nullptr;
    }
    const CatalogEntry* find(const SurfaceMap& m) const {
        if (!is_connected(m.graph())) return nullptr;
        return find_code(to_hex(canonical_code(m)));
    }
    const CatalogEntry* find_id(const std::string& id) const {
        for (const CatalogEntry& e : entries)
            if (e.id == id) return &e;
        return nullptr;
    }
};

struct CatalogOptions {
    int max_vertices = 8;
    // Uses the structure theorems to cut the search; off = exhaustive slow mode.
    bool theory_pruning = true;
    unsigned jobs = 1;
    std::string checkpoint;  // empty: no checkpointing
    std::function<void(const std::string&)> progress;
};

class CheckpointMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline bool census_candidate(const SurfaceMap& m, bool theory) {
    if (!no_small_faces(m)) return false;
    return !theory || m.f(4) <= 2;
}

inline std::vector<SurfaceMap> irreducible_only(std::vector<SurfaceMap> maps) {
    std::vector<SurfaceMap> out;
    for (SurfaceMap& m : maps)
        if (is_irreducible(m).irreducible) out.push_back(std::move(m));
    return out;
}

inline std::vector<SurfaceMap> embedding_shard(const MultiGraph& g, bool theory) {
    EmbeddingOptions opt;
    opt.noncellular = !theory || g.vertex_count() <= 2;
    opt.accept = [theory](const SurfaceMap& m) { return census_candidate(m, theory); };
    return irreducible_only(enumerate_torus_embeddings(g, opt));
}

// Every divalent addition to a cellular face of m that could be irreducible.
inline std::vector<SurfaceMap> henneberg_shard(const SurfaceMap& m, bool theory) {
    std::map<std::string, SurfaceMap> found;
    for (std::size_t f = 0; f < m.faces().size(); ++f) {
        if (!m.faces()[f].cellular()) throw std::logic_error("divalent additions are only generated in disc faces");
        std::vector<Corner> cs = walk_corners(m, m.faces()[f].walks.front());
        for (const Corner& c1 : cs)
            for (const Corner& c2 : cs) {
                SurfaceMap r = henneberg_add(m, f, c1, c2).map;
                if (!census_candidate(r, theory)) continue;
                std::string code = canonical_code(r);
                if (!found.count(code)) found.emplace(std::move(code), std::move(r));
            }
    }
    std::vector<SurfaceMap> out;
    for (auto& [code, r] : found) out.push_back(std::move(r));
    return irreducible_only(std::move(out));
}

struct Shard {
    std::string name;
    std::function<std::vector<SurfaceMap>()> run;
};

class CheckpointStore {
public:
    CheckpointStore(const CatalogOptions& opt) : opt_(opt) {
        if (opt.checkpoint.empty() || !std::filesystem::exists(opt.checkpoint)) return;
        Json j = parse_json_text(read_text_file(opt.checkpoint), opt.checkpoint);
        if (j.value("version", 0) != 1) throw CheckpointMismatch("checkpoint has an unknown version");
        if (j.value("max_vertices", -1) != opt.max_vertices)
            throw CheckpointMismatch("checkpoint was written for --max-vertices " + std::to_string(j.value("max_vertices", -1)));
        if (j.value("pruning", std::string()) != pruning())
            throw CheckpointMismatch("checkpoint was written with pruning '" + j.value("pruning", std::string()) + "'");
        for (auto& [name, maps] : j.at("shards").items()) {
            std::vector<SurfaceMap> ms;
            for (const Json& mj : maps) ms.push_back(map_from_json(mj));
            done_.emplace(name, std::move(ms));
        }
    }

    std::optional<std::vector<SurfaceMap>> lookup(const std::string& shard) const {
        std::lock_guard lock(mu_);
        auto it = done_.find(shard);
        if (it == done_.end()) return std::nullopt;
        return it->second;
    }

    bool has(const std::string& shard) const {
        std::lock_guard lock(mu_);
        return done_.count(shard) > 0;
    }

    void record(const std::string& shard, const std::vector<SurfaceMap>& maps) {
        std::lock_guard lock(mu_);
        done_[shard] = maps;
        if (opt_.checkpoint.empty()) return;
        Json j;
        j["version"] = 1;
        j["max_vertices"] = opt_.max_vertices;
        j["pruning"] = pruning();
        Json shards = Json::object();
        for (const auto& [name, ms] : done_) {
            Json arr = Json::array();
            for (const SurfaceMap& m : ms) arr.push_back(map_to_json(m));
            shards[name] = std::move(arr);
        }
        j["shards"] = std::move(shards);
        std::string tmp = opt_.checkpoint + ".tmp";
        {
            std::ofstream out(tmp);
            if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
            out << j.dump() << "\n";
        }
        std::filesystem::rename(tmp, opt_.checkpoint);
    }

private:
    std::string pruning() const { return opt_.theory_pruning ? "theory" : "none"; }

    const CatalogOptions& opt_;
    mutable std::mutex mu_;
    std::map<std::string, std::vector<SurfaceMap>> done_;
};

// Runs shards on a pool of threads; results come back in shard order.
inline std::vector<std::vector<SurfaceMap>> run_shards(const std::vector<Shard>& shards, const CatalogOptions& opt,
                                                       CheckpointStore& store) {
    std::vector<std::vector<SurfaceMap>> results(shards.size());
    std::atomic<std::size_t> next{0};
    std::mutex err_mu;
    std::exception_ptr error;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next++;
            if (i >= shards.size()) return;
            try {
                if (auto cached = store.lookup(shards[i].name)) {
                    results[i] = std::move(*cached);
                    continue;
                }
                results[i] = shards[i].run();
                store.record(shards[i].name, results[i]);
            } catch (...) {
                std::lock_guard lock(err_mu);
                if (!error) error = std::current_exception();
                next = shards.size();
            }
        }
    };
    unsigned jobs = std::max(1u, opt.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);
    return results;
}

}  // namespace detail

/**
 * Every irreducible (2,2)-tight torus map with at most max_vertices
 * vertices, up to isomorphism.
 *
 * With theory pruning, maps on up to four vertices come from a full
 * embedding search (non-cellular ones only on one or two vertices). Larger
 * maps come from two sources: divalent additions to the previous level, and
 * embeddings of tight graphs with minimum degree 3. Quadrilateral counts
 * above two are discarded early. Without pruning every tight graph gets the
 * full cellular and non-cellular search.
 *
 * Entries are ordered by vertex count, then canonical code. Maps matching a
 * named drawing take its name; the rest are named T<n>_<k>.
 */
inline Catalog build_catalog(const CatalogOptions& opt = {}) {
    if (opt.max_vertices < 1) throw std::invalid_argument("max_vertices must be at least 1");
    auto say = [&](const std::string& s) {
        if (opt.progress) opt.progress(s);
    };
    detail::CheckpointStore store(opt);
    const bool theory = opt.theory_pruning;
    std::vector<MultiGraph> graphs = enumerate_tight_graphs(opt.max_vertices);

    std::map<std::string, std::string> named;
    for (const Drawing& d : named_irreducible_drawings()) named.emplace(canonical_code(drawing_map(d)), d.name);

    Catalog cat;
    std::vector<SurfaceMap> previous;  // members with n - 1 vertices
    for (int n = 1; n <= opt.max_vertices; ++n) {
        std::vector<detail::Shard> shards;
        std::size_t gi = 0;
        for (const MultiGraph& g : graphs) {
            if (static_cast<int>(g.vertex_count()) != n) continue;
            std::string name = "n" + std::to_string(n) + ":g" + std::to_string(gi++);
            if (theory && n >= 5 && min_degree(g) < 3) continue;
            shards.push_back({name, [&g, theory] { return detail::embedding_shard(g, theory); }});
        }
        if (theory && n >= 5)
            for (std::size_t j = 0; j < previous.size(); ++j)
                shards.push_back({"n" + std::to_string(n) + ":h" + std::to_string(j),
                                  [m = previous[j], theory] { return detail::henneberg_shard(m, theory); }});
        std::size_t cached = std::count_if(shards.begin(), shards.end(), [&](const detail::Shard& s) { return store.has(s.name); });
        say("level " + std::to_string(n) + ": " + std::to_string(shards.size()) + " shards" +
            (cached ? ", " + std::to_string(cached) + " resumed from checkpoint" : std::string()));

        std::map<std::string, SurfaceMap> level;
        for (auto& maps : detail::run_shards(shards, opt, store))
            for (SurfaceMap& m : maps) {
                std::string code = canonical_code(m);
                if (!level.count(code)) level.emplace(std::move(code), std::move(m));
            }
        previous.clear();
        std::size_t k = 0;
        for (auto& [code, m] : level) {
            auto it = named.find(code);
            std::string id = it != named.end() ? it->second : "T" + std::to_string(n) + "_" + std::to_string(++k);
            SurfaceMap rep = map_from_canonical_code(code);
            cat.entries.push_back({id, to_hex(code), rep});
            previous.push_back(std::move(rep));
        }
        say("level " + std::to_string(n) + ": " + std::to_string(level.size()) + " irreducible");
    }
    return cat;
}

// ---------------------------------------------------------------------------
// Persistence

inline Json catalog_entry_json(const CatalogEntry& e) {
    const SurfaceMap& m = e.map;
    Json meta;
    meta["id"] = e.id;
    meta["code"] = e.code;
    std::vector<std::size_t> vdeg;
    for (VertexId v : m.graph().vertices()) vdeg.push_back(m.graph().degree(v));
    std::sort(vdeg.begin(), vdeg.end());
    meta["vertex_degrees"] = vdeg;
    meta["face_census"] = m.census();
    meta["cellular"] = m.cellular();
    return map_to_json(m, meta);
}

inline void write_catalog_jsonl(std::ostream& out, const Catalog& cat) {
    for (const CatalogEntry& e : cat.entries) out << catalog_entry_json(e).dump() << "\n";
}

inline Catalog read_catalog_jsonl(std::istream& in, const std::string& source = "catalog") {
    Catalog cat;
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (line.empty()) continue;
        Json meta;
        SurfaceMap m;
        try {
            m = map_from_json(parse_json_text(line, source), &meta);
        } catch (const ParseError& e) {
            throw ParseError(source + ":" + std::to_string(no), e.what());
        }
        std::string id = meta.value("id", std::string());
        if (id.empty()) throw ParseError(source + ":" + std::to_string(no), "entry without id");
        cat.entries.push_back({id, to_hex(canonical_code(m)), std::move(m)});
    }
    return cat;
}

// ---------------------------------------------------------------------------
// Divalent-addition reachability

/**
 * Breadth-first search over catalog members: starting from the members
 * without divalent vertices, one step adds a divalent vertex in any face. Returns
 * the number of steps needed for each member (-1 if not reached within
 * max_steps).
 */
inline std::map<std::string, int> henneberg_distances(const Catalog& cat, int max_steps) {
    std::map<std::string, int> dist;
    for (const CatalogEntry& e : cat.entries) dist[e.id] = -1;
    std::deque<const CatalogEntry*> q;
    for (const CatalogEntry& e : cat.entries)
        if (std::none_of(e.map.graph().vertices().begin(), e.map.graph().vertices().end(),
                         [&](VertexId v) { return e.map.graph().degree(v) == 2; })) {
            dist[e.id] = 0;
            q.push_back(&e);
        }
    while (!q.empty()) {
        const CatalogEntry* e = q.front();
        q.pop_front();
        int d = dist[e->id];
        if (d >= max_steps) continue;
        const SurfaceMap& m = e->map;
        for (std::size_t f = 0; f < m.faces().size(); ++f) {
            std::vector<Corner> cs;
            for (std::size_t w : m.faces()[f].walks)
                for (const Corner& c : walk_corners(m, w)) cs.push_back(c);
            for (const Corner& c1 : cs)
                for (const Corner& c2 : cs) {
                    std::vector<FaceSplit> splits{FaceSplit{}};
                    if (!m.faces()[f].cellular()) splits.push_back(FaceSplit{false, {}, 0});
                    for (const FaceSplit& s : splits) {
                        SurfaceMap r;
                        try {
                            r = henneberg_add(m, f, c1, c2, s).map;
                        } catch (const std::exception&) {
                            continue;
                        }
                        const CatalogEntry* t = cat.find(r);
                        if (t && dist[t->id] < 0) {
                            dist[t->id] = d + 1;
                            q.push_back(t);
                        }
                    }
                }
        }
    }
    return dist;
}

}  // namespace toroidal

#endif  // TOROIDAL_CATALOG_HPP
