// Writes the map files used by the command-line tests into a directory.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "support.hpp"

using namespace toroidal;

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: make_fixtures DIR\n";
        return 2;
    }
    std::filesystem::path dir = argv[1];
    std::filesystem::create_directories(dir);
    auto out = [&](const char* name) { return (dir / name).string(); };

    save_map(out("g4_1.json"), named_map("G4_1"));
    SurfaceMap g42 = named_map("G4_2");
    save_map(out("g4_2.json"), g42);
    std::mt19937_64 rng(7);
    save_map(out("g4_2_relabeled.json"), testing::relabel(g42, rng));
    save_map(out("not_tight.json"), named_map("essential-f"));

    MultiGraph loop(1, {{0, 0}});
    save_map(out("loop.json"), SurfaceMap(loop, std::vector<std::vector<DartId>>{{0, 1}}));

    std::ofstream(out("empty.json"));

    // One quad split away from G4_2.
    VertexId z = g42.graph().vertices().front();
    const auto& rot = g42.rotation(z);
    for (std::size_t i = 0; i < rot.size(); ++i)
        for (std::size_t j = 0; j < rot.size(); ++j) {
            if (i == j) continue;
            try {
                MoveResult s = quad_split(g42, z, rot[i], rot[j]);
                if (is_irreducible(s.map).irreducible) continue;
                save_map(out("g4_2_split.json"), s.map);
                return 0;
            } catch (const std::invalid_argument&) {
            }
        }
    std::cerr << "no reducible quad split of G4_2\n";
    return 1;
}
