#include <catch_amalgamated.hpp>

#include <filesystem>

#include "support.hpp"

using namespace toroidal;
using namespace toroidal::testing;

namespace {

std::string error_location(const Json& j) {
    try {
        map_from_json(j);
    } catch (const ParseError& e) {
        return e.where();
    }
    return "no error";
}

}  // namespace

TEST_CASE("map files round trip", "[io]") {
    std::mt19937_64 rng(61);
    std::vector<SurfaceMap> pool;
    for (const Drawing& d : named_irreducible_drawings()) pool.push_back(drawing_map(d));
    for (int t = 0; t < 300; ++t) pool.push_back(random_tight_torus_map(rng, 1 + rng() % 9));
    for (const SurfaceMap& m : pool) {
        Json meta{{"id", "x"}};
        Json j = map_to_json(m, meta);
        Json got_meta;
        SurfaceMap back = map_from_json(parse_json_text(j.dump(2)), &got_meta);
        REQUIRE(canonical_code(back) == canonical_code(m));
        REQUIRE(back.graph() == m.graph());
        REQUIRE(back.rotations() == m.rotations());
        REQUIRE(got_meta == meta);
        REQUIRE(map_to_json(back, meta) == j);
    }
}

TEST_CASE("map files on disk", "[io]") {
    auto path = std::filesystem::temp_directory_path() / "toroidal-io-test.json";
    SurfaceMap m = named_map("G6_3");
    save_map(path.string(), m);
    CHECK(map_isomorphic(load_map(path.string()), m));
    std::filesystem::remove(path);
    CHECK_THROWS_AS(load_map(path.string()), ParseError);
}

TEST_CASE("malformed map files report where they fail", "[io]") {
    Json good = map_to_json(named_map("G4_1"));
    CHECK(error_location(Json::object()) == "$");
    CHECK(error_location(Json::array()) == "$");

    Json j = good;
    j.erase("darts");
    CHECK(error_location(j) == "$.darts");

    j = good;
    j["format"] = "something";
    CHECK(error_location(j) == "$.format");

    j = good;
    j["version"] = 99;
    CHECK(error_location(j) == "$.version");

    j = good;
    j["darts"][3] = Json::array({3});
    CHECK(error_location(j) == "$.darts[3]");

    j = good;
    j["darts"][3][1] = 42;
    CHECK(error_location(j) == "$.darts[3]");

    j = good;
    j["involution"][1] = Json::array({2, 5});
    CHECK(error_location(j) == "$.involution[1]");

    j = good;
    j["involution"].erase(j["involution"].size() - 1);
    CHECK(error_location(j) == "$.involution");

    j = good;
    j["rotation"][0]["vertex"] = "zero";
    CHECK(error_location(j) == "$.rotation[0].vertex");

    j = good;
    j["rotation"][0]["darts"] = Json::array();
    CHECK(error_location(j) == "$.rotation");

    j = good;
    j["tags"] = Json::array({Json{{"walks", Json::array()}}});
    CHECK(error_location(j) == "$.tags[0].genus");
}

TEST_CASE("JSON syntax errors carry a line number", "[io]") {
    try {
        parse_json_text("{\n  \"a\": 1,\n  oops\n}", "file.json");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.where() == "file.json:3");
    }
    CHECK_THROWS_AS(parse_json_text("", "empty.json"), ParseError);
}

TEST_CASE("DOT export lists every vertex and edge", "[io]") {
    SurfaceMap m = named_map("G5_1");
    std::string dot = to_dot(m, "G5_1");
    CHECK(dot.rfind("graph \"G5_1\" {", 0) == 0);
    CHECK(static_cast<std::size_t>(std::count(dot.begin(), dot.end(), '\n')) == m.vertex_count() + m.edge_count() + 3);
    CHECK(dot.find(" -- ") != std::string::npos);
}
