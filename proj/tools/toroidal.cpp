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

// toroidal: command-line front end.
//
// Exit codes: 0 ok, 1 negative verdict or failed replay, 2 usage, I/O or parse error.

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <thread>

#include "toroidal/toroidal.hpp"

namespace {

using namespace toroidal;

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_io = 2;

std::string census_string(const SurfaceMap& m) {
    std::string s;
    auto c = m.census();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i]) s += (s.empty() ? "" : " ") + ("f" + std::to_string(i)) + "=" + std::to_string(c[i]);
    return s.empty() ? "-" : s;
}

int cmd_check(const std::string& path, int l) {
    check_l(l);
    SurfaceMap m = load_map(path);
    const MultiGraph& g = m.graph();
    bool sparse = is_sparse(g, l), tight = sparse && gamma(g) == l;
    std::string verdict = tight ? "tight(2," + std::to_string(l) + ")"
                                : sparse ? "sparse(2," + std::to_string(l) + ")" : "not sparse";
    std::cout << "vertices: " << g.vertex_count() << "\n"
              << "edges: " << g.edge_count() << "\n"
              << "gamma: " << gamma(g) << "\n"
              << "sparsity: " << verdict << "\n"
              << "genus: " << m.genus() << "\n"
              << "cellular: " << (m.cellular() ? "yes" : "no") << "\n"
              << "census: " << census_string(m) << "\n"
              << verdict << ", g=" << m.genus() << ", " << census_string(m) << "\n";
    return sparse ? exit_ok : exit_negative;
}

Catalog load_or_build_catalog(const std::string& path, unsigned jobs) {
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw ParseError(path, "cannot open");
        return read_catalog_jsonl(in, path);
    }
    CatalogOptions opt;
    opt.jobs = jobs;
    return build_catalog(opt);
}

struct EnumerateArgs {
    int max_vertices = 8;
    unsigned jobs = 1;
    std::string checkpoint, out, dot;
    bool no_pruning = false, quiet = false;
};

int cmd_enumerate(const EnumerateArgs& a) {
    CatalogOptions opt;
    opt.max_vertices = a.max_vertices;
    opt.jobs = a.jobs;
    opt.checkpoint = a.checkpoint;
    opt.theory_pruning = !a.no_pruning;
    auto t0 = std::chrono::steady_clock::now();
    if (!a.quiet)
        opt.progress = [t0](const std::string& s) {
            double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            std::cerr << "[" << std::fixed << std::setprecision(1) << t << "s] " << s << "\n";
        };
    Catalog cat;
    try {
        cat = build_catalog(opt);
    } catch (const CheckpointMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_negative;
    }
    if (!a.out.empty()) {
        std::ofstream out(a.out);
        if (!out) throw ParseError(a.out, "cannot write");
        write_catalog_jsonl(out, cat);
    } else {
        write_catalog_jsonl(std::cout, cat);
    }
    if (!a.dot.empty()) {
        std::filesystem::create_directories(a.dot);
        for (const CatalogEntry& e : cat.entries) {
            std::ofstream out(std::filesystem::path(a.dot) / (e.id + ".dot"));
            out << to_dot(e.map, e.id);
        }
    }

    std::map<std::size_t, std::array<std::size_t, 3>> rows;  // all, non-cellular, no degree-2 vertex
    for (const CatalogEntry& e : cat.entries) {
        auto& r = rows[e.map.vertex_count()];
        ++r[0];
        if (!e.map.cellular()) ++r[1];
        const MultiGraph& g = e.map.graph();
        if (std::none_of(g.vertices().begin(), g.vertices().end(), [&](VertexId v) { return g.degree(v) == 2; })) ++r[2];
    }
    std::ostream& os = a.out.empty() ? std::cerr : std::cout;
    os << std::setw(9) << "vertices" << std::setw(8) << "maps" << std::setw(14) << "non-cellular" << std::setw(12) << "no deg-2" << "\n";
    std::array<std::size_t, 3> tot{};
    for (const auto& [n, r] : rows) {
        os << std::setw(9) << n << std::setw(8) << r[0] << std::setw(14) << r[1] << std::setw(12) << r[2] << "\n";
        for (int i = 0; i < 3; ++i) tot[i] += r[i];
    }
    os << std::setw(9) << "total" << std::setw(8) << tot[0] << std::setw(14) << tot[1] << std::setw(12) << tot[2] << "\n";
    return exit_ok;
}

int cmd_reduce(const std::string& path, const std::string& out_cert, const std::string& catalog, unsigned jobs) {
    SurfaceMap m = load_map(path);
    if (m.genus() != 1 || !is_connected(m.graph()) || !is_tight(m.graph(), 2)) {
        std::cerr << "error: input is not a connected (2,2)-tight torus map\n";
        return exit_negative;
    }
    Catalog cat = load_or_build_catalog(catalog, jobs);
    ReductionCertificate cert = reduce_to_irreducible(m, cat);
    std::string text = certificate_to_json(cert).dump(2) + "\n";
    if (out_cert.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_cert);
        if (!out) throw ParseError(out_cert, "cannot write");
        out << text;
    }
    std::cerr << cert.moves.size() << " moves to " << cert.terminal_id << "\n";
    return exit_ok;
}

int cmd_replay(const std::string& path, const std::string& catalog, unsigned jobs) {
    ReductionCertificate cert = certificate_from_json(parse_json_text(read_text_file(path), path));
    Catalog cat = load_or_build_catalog(catalog, jobs);
    ReplayReport r = replay_certificate(cert, cat);
    std::cout << (r.ok ? "ok: " : "rejected: ") << r.message << "\n";
    return r.ok ? exit_ok : exit_negative;
}

int cmd_iso(const std::string& a, const std::string& b) {
    SurfaceMap m1 = load_map(a), m2 = load_map(b);
    bool iso = map_isomorphic(m1, m2);
    std::cout << (iso ? "isomorphic" : "not isomorphic") << "\n";
    return iso ? exit_ok : exit_negative;
}

int cmd_canon(const std::string& path) {
    SurfaceMap m = load_map(path);
    if (!is_connected(m.graph())) {
        std::cerr << "error: canonical codes need a connected map\n";
        return exit_negative;
    }
    std::cout << to_hex(canonical_code(m)) << "\n";
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Enumerate and verify irreducible (2,2)-tight torus graphs"};
    app.require_subcommand(1);
    unsigned default_jobs = std::max(1u, std::thread::hardware_concurrency());

    std::string path, path2, out_cert, catalog;
    int l = 2;
    unsigned jobs = default_jobs;
    EnumerateArgs ea;
    ea.jobs = default_jobs;

    auto* check = app.add_subcommand("check", "Report sparsity, genus and face census of a map file");
    check->add_option("map", path, "map file")->required();
    check->add_option("--l", l, "sparsity parameter l in (2,l)")->check(CLI::Range(0, 2));

    auto* enumerate = app.add_subcommand("enumerate", "Build the catalog of irreducible torus maps");
    enumerate->add_option("--max-vertices", ea.max_vertices, "largest vertex count")->check(CLI::Range(1, 8));
    enumerate->add_option("--jobs", ea.jobs, "worker threads")->check(CLI::PositiveNumber);
    enumerate->add_option("--checkpoint", ea.checkpoint, "resumable checkpoint file");
    enumerate->add_flag("--no-theory-pruning", ea.no_pruning, "exhaustive search without structural shortcuts");
    enumerate->add_option("--out", ea.out, "JSON-lines catalog (default: stdout)");
    enumerate->add_option("--dot", ea.dot, "directory for one DOT file per member");
    enumerate->add_flag("--quiet", ea.quiet, "no progress output");

    auto* reduce = app.add_subcommand("reduce", "Reduce a tight torus map to a catalog member");
    reduce->add_option("map", path, "map file")->required();
    reduce->add_option("--out-cert", out_cert, "certificate file (default: stdout)");
    reduce->add_option("--catalog", catalog, "catalog file from 'enumerate' (default: build it)");
    reduce->add_option("--jobs", jobs, "worker threads when building the catalog")->check(CLI::PositiveNumber);

    auto* replay = app.add_subcommand("replay", "Verify a reduction certificate");
    replay->add_option("certificate", path, "certificate file")->required();
    replay->add_option("--catalog", catalog, "catalog file from 'enumerate' (default: build it)");
    replay->add_option("--jobs", jobs, "worker threads when building the catalog")->check(CLI::PositiveNumber);

    auto* iso = app.add_subcommand("iso", "Decide whether two maps are isomorphic");
    iso->add_option("a", path, "first map file")->required();
    iso->add_option("b", path2, "second map file")->required();

    auto* canon = app.add_subcommand("canon", "Print the canonical code of a map");
    canon->add_option("map", path, "map file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_io;
    }

    try {
        if (*check) return cmd_check(path, l);
        if (*enumerate) return cmd_enumerate(ea);
        if (*reduce) return cmd_reduce(path, out_cert, catalog, jobs);
        if (*replay) return cmd_replay(path, catalog, jobs);
        if (*iso) return cmd_iso(path, path2);
        if (*canon) return cmd_canon(path);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_io;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_negative;
    }
    return exit_io;
}
