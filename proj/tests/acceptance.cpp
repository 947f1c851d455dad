// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// TOROIDAL_TRIALS scales the randomized trials (default 10000).

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <thread>

#include "properties.hpp"

using namespace toroidal;
using namespace toroidal::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int n, bool ok, const std::string& detail) {
    if (!ok) ++failures;
    std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << "  " << detail << std::endl;
}

bool has_divalent(const MultiGraph& g) {
    return std::any_of(g.vertices().begin(), g.vertices().end(), [&](VertexId v) { return g.degree(v) == 2; });
}

std::string fmt(double s) {
    std::ostringstream o;
    o << std::fixed << std::setprecision(1) << s << "s";
    return o.str();
}

// All loopless multigraphs with multiplicity <= 2, no isolated vertices and
// at most max_edges edges, one per isomorphism class.
std::vector<MultiGraph> small_multigraphs(std::size_t max_edges) {
    std::vector<MultiGraph> all, level{MultiGraph()};
    for (std::size_t k = 1; k <= max_edges; ++k) {
        std::set<std::vector<std::uint8_t>> seen;
        std::vector<MultiGraph> next;
        auto offer = [&](MultiGraph g) {
            if (seen.insert(graph_canonical_code(g)).second) next.push_back(std::move(g));
        };
        for (const MultiGraph& g : level) {
            VertexId n = static_cast<VertexId>(g.vertex_count());
            for (VertexId a = 0; a < n; ++a)
                for (VertexId b = a + 1; b < n; ++b)
                    if (g.multiplicity(a, b) < 2) {
                        MultiGraph h = g;
                        h.add_edge(a, b);
                        offer(std::move(h));
                    }
            for (VertexId a = 0; a < n; ++a) {
                MultiGraph h = g;
                h.add_edge(a, h.add_vertex());
                offer(std::move(h));
            }
            MultiGraph h = g;
            VertexId a = h.add_vertex();
            h.add_edge(a, h.add_vertex());
            offer(std::move(h));
        }
        all.insert(all.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return all;
}

}  // namespace

int main() {
    const int n_trials = trials();
    const std::size_t jobs = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::cout << "randomized trials per suite: " << n_trials << ", jobs: " << jobs << std::endl;

    // 1 and 2: the full catalog.
    auto t0 = Clock::now();
    CatalogOptions opt;
    opt.max_vertices = 8;
    opt.jobs = jobs;
    const Catalog cat = build_catalog(opt);
    double full_time = seconds_since(t0);
    report(1, cat.size() == 116, std::to_string(cat.size()) + " classes (want 116) in " + fmt(full_time));

    {
        std::map<std::size_t, std::size_t> by_n;
        std::size_t noncellular = 0, no_divalent = 0, f4_over = 0;
        for (const CatalogEntry& e : cat.entries) {
            ++by_n[e.map.vertex_count()];
            noncellular += !e.map.cellular();
            no_divalent += !has_divalent(e.map.graph());
            f4_over += e.map.f(4) > 2;
        }
        std::size_t upto3 = by_n[1] + by_n[2] + by_n[3];
        std::size_t over8 = 0;
        for (const auto& [n, c] : by_n) over8 += n > 8 ? c : 0;
        auto t1 = Clock::now();
        CatalogOptions small = opt;
        small.max_vertices = 4;
        std::size_t small_size = build_catalog(small).size();
        double small_time = seconds_since(t1);
        bool ok = noncellular == 2 && upto3 == 4 && by_n[4] == 9 && by_n[8] == 6 && no_divalent == 12 && over8 == 0 &&
                  f4_over == 0 && small_size == upto3 + by_n[4] && small_time <= 60;
        std::ostringstream d;
        d << "non-cellular " << noncellular << " (2), <=3 vertices " << upto3 << " (4), 4 vertices " << by_n[4]
          << " (9), 8 vertices " << by_n[8] << " (6), no degree-2 vertex " << no_divalent << " (12), over 8 vertices "
          << over8 << " (0), f4>2 " << f4_over << " (0), <=4 slice " << small_size << " in " << fmt(small_time) << " (<=60s)";
        report(2, ok, d.str());
    }

    // 3: tight graphs on at most four vertices.
    {
        auto t1 = Clock::now();
        std::size_t count = enumerate_tight_graphs(4).size();
        double t = seconds_since(t1);
        report(3, count == 13 && t <= 5, std::to_string(count) + " graphs (13) in " + fmt(t) + " (<=5s)");
    }

    // 4: blocker taxonomy over every quadrilateral of every member.
    {
        std::size_t quads = 0, bad = 0;
        std::set<std::string> shapes;
        std::string first;
        for (const CatalogEntry& e : cat.entries) {
            for (const QuadEvidence& ev : is_irreducible(e.map).quads) {
                ++quads;
                std::string why;
                try {
                    why = check_quad_evidence(e.map, ev);
                    for (const auto* side : {&ev.d13, &ev.d24})
                        for (const Blocker& b : *side) shapes.insert(classify_blocker(e.map, b));
                } catch (const std::exception& ex) {
                    why = ex.what();
                }
                if (!why.empty() && bad++ == 0) first = e.id + ": " + why;
            }
        }
        std::ostringstream d;
        d << quads << " quadrilaterals, " << bad << " exceptions, " << shapes.size() << " of "
          << blocker_shape_drawings().size() << " shapes seen";
        if (bad) d << "; first: " << first;
        report(4, bad == 0 && blocker_shape_drawings().size() == 10, d.str());
    }

    // 5: tight submaps are irreducible.
    {
        auto t1 = Clock::now();
        std::size_t subs = 0, bad = 0;
        for (const CatalogEntry& e : cat.entries)
            for (const SubgraphRef& s : tight_subgraphs(e.map.graph())) {
                ++subs;
                bad += !is_irreducible(submap(e.map, s)).irreducible;
            }
        double t = seconds_since(t1);
        report(5, bad == 0 && t <= 600,
               std::to_string(subs) + " tight submaps, " + std::to_string(bad) + " reducible, " + fmt(t) + " (<=600s)");
    }

    // 6: K4 and K4 plus a divalent vertex.
    {
        MultiGraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
        MultiGraph k4x = k4;
        VertexId x = k4x.add_vertex();
        k4x.add_edge(x, 0);
        k4x.add_edge(x, 1);
        auto irreducible_classes = [](const MultiGraph& g) {
            std::set<std::string> codes;
            for (const SurfaceMap& m : enumerate_torus_embeddings(g))
                if (is_irreducible(m).irreducible) codes.insert(canonical_code(m));
            return codes.size();
        };
        std::size_t a = irreducible_classes(k4), b = irreducible_classes(k4x);
        report(6, a == 1 && b == 2, "K4 " + std::to_string(a) + " (1), K4 plus divalent vertex " + std::to_string(b) + " (2)");
    }

    // 7: pebble game against subset minimization, exhaustively.
    {
        auto t1 = Clock::now();
        auto graphs = small_multigraphs(8);
        std::size_t mismatches = 0;
        for (const MultiGraph& g : graphs)
            for (int l = 0; l <= 2; ++l) mismatches += is_sparse(g, l) != brute_force_sparse(g, l);
        double t = seconds_since(t1);
        report(7, mismatches == 0 && t <= 300,
               std::to_string(graphs.size()) + " multigraphs x l in {0,1,2}, " + std::to_string(mismatches) +
                   " mismatches, " + fmt(t) + " (<=300s)");
    }

    // 8: property suites.
    {
        std::mt19937_64 rng(8);
        std::vector<std::pair<std::string, std::function<std::string()>>> suites{
            {"inclusion-exclusion", [&] { return props::inclusion_exclusion(rng); }},
            {"Euler census", [&] { return props::euler_census(rng); }},
            {"hole filling", [&] { return props::hole_filling(rng); }},
            {"triangle blocks", [&] { return props::triangle_blocks(rng); }},
            {"split round trip", [&] { return props::split_round_trip(rng); }},
            {"reduction to 12 vertices", [&] { return props::reduction_terminates(rng, cat, 12); }},
        };
        bool ok = true;
        std::ostringstream d;
        for (auto& [name, trial] : suites) {
            auto t1 = Clock::now();
            int failed = 0;
            std::string first;
            for (int t = 0; t < n_trials; ++t) {
                std::string why;
                try {
                    why = trial();
                } catch (const std::exception& e) {
                    why = e.what();
                }
                if (!why.empty() && failed++ == 0) first = why;
            }
            ok &= failed == 0;
            if (name != suites.front().first) d << "; ";
            d << name << " " << failed << "/" << n_trials << " failed in " << fmt(seconds_since(t1));
            if (failed) d << " (" << first << ")";
        }
        report(8, ok, d.str());
    }

    // 9: Henneberg distances and certificate replay.
    {
        auto dist = henneberg_distances(cat, 5);
        std::size_t roots = 0, unreached = 0;
        int deepest = 0;
        for (const auto& [id, d] : dist) {
            roots += d == 0;
            unreached += d < 0;
            deepest = std::max(deepest, d);
        }
        std::mt19937_64 rng(9);
        int replays = std::max(1, n_trials / 10), rejected = 0;
        std::size_t moves = 0;
        for (int t = 0; t < replays; ++t) {
            SurfaceMap m = random_tight_torus_map(rng, 1 + rng() % 10);
            try {
                ReductionCertificate cert = reduce_to_irreducible(m, cat);
                moves += cert.moves.size();
                rejected += !replay_certificate(cert, cat).ok;
            } catch (const std::exception&) {
                ++rejected;
            }
        }
        std::ostringstream d;
        d << roots << " roots (12), " << unreached << " members beyond 5 moves, deepest " << deepest << "; " << replays
          << " random maps up to 10 vertices, " << rejected << " certificates rejected, " << moves << " moves replayed";
        report(9, roots == 12 && unreached == 0 && rejected == 0, d.str());
    }

    std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria passed") << std::endl;
    return failures ? 1 : 0;
}
