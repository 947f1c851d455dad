#include <catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include "properties.hpp"

using namespace toroidal;
using namespace toroidal::testing;

namespace {

std::uint64_t factorial(std::size_t k) { return k <= 1 ? 1 : k * factorial(k - 1); }

// Map isomorphism by growing a dart bijection from each possible image of one dart.
bool brute_map_isomorphic_oriented(const SurfaceMap& a, const SurfaceMap& b) {
    if (a.dart_count() != b.dart_count() || a.vertex_count() != b.vertex_count()) return false;
    if (a.dart_count() == 0) return a.faces().size() == b.faces().size() && a.faces()[0].genus == b.faces()[0].genus;
    auto da = a.darts(), db = b.darts();
    for (DartId target : db) {
        std::map<DartId, DartId> phi{{da.front(), target}};
        std::vector<DartId> stack{da.front()};
        bool ok = true;
        while (ok && !stack.empty()) {
            DartId x = stack.back();
            stack.pop_back();
            for (auto [nx, ny] : {std::pair{a.sigma(x), b.sigma(phi[x])}, std::pair{mate(x), mate(phi[x])}}) {
                auto it = phi.find(nx);
                if (it == phi.end()) {
                    phi[nx] = ny;
                    stack.push_back(nx);
                } else if (it->second != ny) {
                    ok = false;
                }
            }
        }
        if (!ok || phi.size() != da.size()) continue;
        std::set<DartId> image;
        for (auto& [x, y] : phi) image.insert(y);
        if (image.size() != db.size()) continue;
        // Faces must correspond with equal genus and walk grouping.
        std::map<std::size_t, std::size_t> fmap;
        for (auto& [x, y] : phi) {
            std::size_t fa = a.face_of_dart(x), fb = b.face_of_dart(y);
            auto [it, fresh] = fmap.emplace(fa, fb);
            if (!fresh && it->second != fb) ok = false;
            if (a.faces()[fa].genus != b.faces()[fb].genus || a.faces()[fa].walks.size() != b.faces()[fb].walks.size()) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

SurfaceMap mirror(const SurfaceMap& m) {
    std::map<VertexId, std::vector<DartId>> rot;
    for (VertexId v : m.graph().vertices()) {
        auto r = m.rotation(v);
        std::reverse(r.begin(), r.end());
        rot[v] = r;
    }
    std::vector<FaceTag> tags;
    for (FaceTag t : m.tags()) {
        for (WalkRef& w : t.walks)
            if (!w.is_vertex) w.id = mate(w.id);
        tags.push_back(t);
    }
    return SurfaceMap(m.graph(), rot, tags);
}

bool brute_map_isomorphic(const SurfaceMap& a, const SurfaceMap& b) {
    return brute_map_isomorphic_oriented(a, b) || brute_map_isomorphic_oriented(mirror(a), b);
}

}  // namespace

TEST_CASE("face tracing of K4 on the torus", "[surface_map]") {
    SurfaceMap m = named_map("G4_1");
    CHECK(m.genus() == 1);
    CHECK(m.cellular());
    CHECK(m.faces().size() == 2);
    CHECK(m.face_degree(0) + m.face_degree(1) == 12);
    CHECK(m.f(2) + m.f(3) == 0);
    for (DartId d : m.darts()) {
        CHECK(m.sigma_inv(m.sigma(d)) == d);
        CHECK(m.tail(m.phi(d)) == m.head(d));
    }
}

TEST_CASE("non-cellular maps carry their tags", "[surface_map]") {
    SurfaceMap k1 = named_map("G1_1");
    CHECK(k1.genus() == 1);
    CHECK_FALSE(k1.cellular());
    MultiGraph c2(2, {{0, 1}, {0, 1}});
    SurfaceMap sphere(c2, std::vector<std::vector<DartId>>{{0, 2}, {1, 3}});
    CHECK(sphere.genus() == 0);
    CHECK(sphere.faces().size() == 2);
    std::vector<FaceTag> annulus{FaceTag{{WalkRef::dart(sphere.walks()[0].darts.front()), WalkRef::dart(sphere.walks()[1].darts.front())}, 0}};
    SurfaceMap essential(c2, sphere.rotations(), annulus);
    CHECK(essential.genus() == 1);
    CHECK(essential.faces().size() == 1);
    CHECK_THROWS(SurfaceMap(c2, sphere.rotations(), {FaceTag{{WalkRef::dart(99)}, 0}}));
    CHECK_THROWS(SurfaceMap(c2, sphere.rotations(), {FaceTag{{WalkRef::dart(0)}, 0}, FaceTag{{WalkRef::dart(0)}, 1}}));
}

TEST_CASE("rotation enumeration visits prod (d-1)! systems", "[surface_map][embeddings][oracle]") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 60; ++t) {
        MultiGraph g = random_connected_multigraph(rng, 1 + rng() % 5, rng() % 4);
        std::uint64_t want = 1;
        for (VertexId v : g.vertices()) want *= factorial(std::max<std::size_t>(g.degree(v), 1) - 1);
        RotationEnumerator en(g, 1000);
        std::uint64_t seen = 0;
        std::uint64_t got = en.run([&](const std::vector<std::vector<DartId>>& rot, int genus) {
            ++seen;
            SurfaceMap m(g, rot);
            REQUIRE(rotation_genus(m) == genus);
        });
        REQUIRE(got == want);
        REQUIRE(seen == want);
    }
}

TEST_CASE("Euler census identity on random cellular maps of genus 0 and 1", "[surface_map][property]") {
    std::mt19937_64 rng(22);
    int n_trials = trials(), torus = 0;
    for (int t = 0; t < n_trials; ++t) {
        bool on_torus = false;
        REQUIRE(props::euler_census(rng, &on_torus) == "");
        torus += on_torus;
    }
    CHECK(torus > n_trials / 10);
}

TEST_CASE("hole filling and its corollary on random tight torus maps", "[surface_map][property]") {
    std::mt19937_64 rng(23);
    int n_trials = trials();
    for (int t = 0; t < n_trials; ++t) REQUIRE(props::hole_filling(rng) == "");
}

TEST_CASE("canonical codes decide map isomorphism", "[surface_map][canon][oracle]") {
    std::mt19937_64 rng(24);
    std::vector<SurfaceMap> pool;
    for (const Drawing& d : named_irreducible_drawings()) pool.push_back(drawing_map(d));
    for (const Drawing& d : blocker_shape_drawings()) pool.push_back(drawing_map(d));
    for (int t = 0; t < 150; ++t) pool.push_back(random_tight_torus_map(rng, 2 + rng() % 5));
    for (int t = 0; t < 300; ++t) {
        const SurfaceMap& a = pool[rng() % pool.size()];
        SurfaceMap b = relabel(a, rng);
        REQUIRE(canonical_code(a) == canonical_code(b));
        REQUIRE(canonical_code(mirror(a)) == canonical_code(a));
        REQUIRE(canonical_code(canonical_form(a)) == canonical_code(a));
    }
    for (int t = 0; t < 3000; ++t) {
        const SurfaceMap& a = pool[rng() % pool.size()];
        const SurfaceMap& b = pool[rng() % pool.size()];
        if (!is_connected(a.graph()) || !is_connected(b.graph())) continue;
        REQUIRE(map_isomorphic(a, b) == brute_map_isomorphic(a, b));
    }
}

TEST_CASE("the two K4 maps with one vertex split differ", "[surface_map][canon]") {
    CHECK_FALSE(map_isomorphic(named_map("G4_1"), named_map("G4_2")));
    CHECK(map_isomorphic(named_map("G4_2"), named_map("G4_2")));
}

TEST_CASE("homology labels give the drawing's intersection numbers", "[homology][oracle]") {
    for (const Drawing& d : named_irreducible_drawings()) {
        SurfaceMap m = drawing_map(d);
        if (!m.cellular()) continue;
        INFO(d.name);
        HomologyLabeling lab = homology_labels(m);
        // Fundamental cycles of a BFS tree, as dart sequences.
        const MultiGraph& g = m.graph();
        std::map<VertexId, std::vector<DartId>> path{{g.vertices().front(), {}}};
        std::vector<VertexId> queue{g.vertices().front()};
        std::set<EdgeId> tree;
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (DartId dt : m.rotation(queue[i]))
                if (!path.count(m.head(dt))) {
                    path[m.head(dt)] = path[queue[i]];
                    path[m.head(dt)].push_back(dt);
                    tree.insert(edge_of(dt));
                    queue.push_back(m.head(dt));
                }
        std::vector<CycleClass> by_labels, by_drawing;
        for (const Edge& e : g.edges()) {
            if (tree.count(e.id)) continue;
            std::vector<DartId> cyc = path[e.u];
            cyc.push_back(dart_of(e.id, 0));
            auto back = path[e.v];
            for (auto it = back.rbegin(); it != back.rend(); ++it) cyc.push_back(mate(*it));
            CycleClass a{0, 0}, b{0, 0};
            for (DartId dt : cyc) {
                a = a + lab[dt];
                const DrawnEdge& de = d.edges[edge_of(dt)];
                CycleClass off{de.dx, de.dy};
                b = b + ((dt & 1) ? -off : off);
            }
            by_labels.push_back(a);
            by_drawing.push_back(b);
        }
        for (std::size_t i = 0; i < by_labels.size(); ++i)
            for (std::size_t j = 0; j < by_labels.size(); ++j)
                REQUIRE(intersection_number(by_labels[i], by_labels[j]) == intersection_number(by_drawing[i], by_drawing[j]));
    }
}

TEST_CASE("intersection numbers count crossings of closed geodesics", "[homology][oracle]") {
    // Straight closed curves of classes a and b on R^2/Z^2, through generic base points.
    auto crossings = [](CycleClass a, CycleClass b) {
        double px = 0.1234, py = 0.4321, qx = 0.7071, qy = 0.2718;
        double det = static_cast<double>(a[0] * b[1] - a[1] * b[0]);
        if (det == 0) return 0LL;
        long long count = 0;
        for (int kx = -12; kx <= 12; ++kx)
            for (int ky = -12; ky <= 12; ++ky) {
                // p + s a = q + t b + k
                double rx = qx + kx - px, ry = qy + ky - py;
                double s = (rx * b[1] - ry * b[0]) / det;
                double t = (a[0] * ry - a[1] * rx) / det;
                if (s >= 0 && s < 1 && t >= 0 && t < 1) ++count;
            }
        return count;
    };
    auto primitive = [](CycleClass c) { return std::gcd(c[0], c[1]) == 1; };
    for (long long a0 = -3; a0 <= 3; ++a0)
        for (long long a1 = -3; a1 <= 3; ++a1)
            for (long long b0 = -3; b0 <= 3; ++b0)
                for (long long b1 = -3; b1 <= 3; ++b1) {
                    CycleClass a{a0, a1}, b{b0, b1};
                    if (!primitive(a) || !primitive(b)) continue;
                    REQUIRE(intersection_number(a, b) == crossings(a, b));
                }
}

TEST_CASE("blocker shapes have the expected essentiality", "[homology]") {
    for (const Drawing& d : blocker_shape_drawings()) {
        SurfaceMap m = drawing_map(d);
        INFO(d.name);
        SubgraphRef all = whole_graph(m.graph());
        Essentiality e = classify_subgraph(m, all);
        if (d.name == "inessential-K2") CHECK(e == Essentiality::inessential);
        else CHECK(e != Essentiality::inessential);
    }
}
