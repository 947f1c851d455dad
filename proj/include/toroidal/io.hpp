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

#ifndef TOROIDAL_IO_HPP
#define TOROIDAL_IO_HPP

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "moves.hpp"

namespace toroidal {

using Json = nlohmann::ordered_json;

inline constexpr int map_format_version = 1;

// Malformed input; `where` names the offending field or line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string where, const std::string& what)
        : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

namespace detail {

template <class T>
T get_field(const Json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) throw ParseError(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(path + "." + key, "missing");
    try {
        return it->template get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + "." + key, "wrong type");
    }
}

inline const Json& get_array(const Json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) throw ParseError(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(path + "." + key, "missing");
    if (!it->is_array()) throw ParseError(path + "." + key, "expected an array");
    return *it;
}

inline Json walk_ref_json(const WalkRef& r) {
    Json j;
    j[r.is_vertex ? "vertex" : "dart"] = r.id;
    return j;
}

inline WalkRef walk_ref_from(const Json& j, const std::string& path) {
    if (j.is_object() && j.contains("vertex")) return WalkRef::vertex(get_field<std::uint32_t>(j, "vertex", path));
    return WalkRef::dart(get_field<std::uint32_t>(j, "dart", path));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Maps

/**
 * Schema: {format, version, vertices, darts: [[dart, tail]...],
 * involution: [[d, d']...], rotation: [{vertex, darts}...],
 * tags: [{walks: [{dart}|{vertex}], genus}], metadata}. Involution pairs
 * are always (2k, 2k+1), k being the edge id.
 */
inline Json map_to_json(const SurfaceMap& m, const Json& metadata = Json::object()) {
    Json j;
    j["format"] = "toroidal-map";
    j["version"] = map_format_version;
    j["vertices"] = m.graph().vertices();
    Json darts = Json::array(), inv = Json::array();
    for (const Edge& e : m.graph().edges()) {
        darts.push_back({dart_of(e.id, 0), e.u});
        darts.push_back({dart_of(e.id, 1), e.v});
        inv.push_back({dart_of(e.id, 0), dart_of(e.id, 1)});
    }
    j["darts"] = std::move(darts);
    j["involution"] = std::move(inv);
    Json rot = Json::array();
    for (VertexId v : m.graph().vertices()) rot.push_back({{"vertex", v}, {"darts", m.rotation(v)}});
    j["rotation"] = std::move(rot);
    Json tags = Json::array();
    for (const FaceTag& t : m.tags()) {
        Json walks = Json::array();
        for (const WalkRef& r : t.walks) walks.push_back(detail::walk_ref_json(r));
        tags.push_back({{"walks", std::move(walks)}, {"genus", t.genus}});
    }
    j["tags"] = std::move(tags);
    j["metadata"] = metadata;
    return j;
}

inline SurfaceMap map_from_json(const Json& j, Json* metadata = nullptr) {
    const std::string root = "$";
    if (!j.is_object() || j.empty()) throw ParseError(root, "empty or non-object map document");
    if (detail::get_field<std::string>(j, "format", root) != "toroidal-map") throw ParseError("$.format", "not a toroidal map");
    int version = detail::get_field<int>(j, "version", root);
    if (version != map_format_version) throw ParseError("$.version", "unsupported version " + std::to_string(version));

    MultiGraph g;
    const Json& vs = detail::get_array(j, "vertices", root);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (!vs[i].is_number_unsigned()) throw ParseError("$.vertices[" + std::to_string(i) + "]", "expected a vertex id");
        try {
            g.insert_vertex(vs[i].get<VertexId>());
        } catch (const std::invalid_argument& e) {
            throw ParseError("$.vertices[" + std::to_string(i) + "]", e.what());
        }
    }
    std::map<DartId, VertexId> tail;
    const Json& ds = detail::get_array(j, "darts", root);
    for (std::size_t i = 0; i < ds.size(); ++i) {
        std::string p = "$.darts[" + std::to_string(i) + "]";
        if (!ds[i].is_array() || ds[i].size() != 2 || !ds[i][0].is_number_unsigned() || !ds[i][1].is_number_unsigned())
            throw ParseError(p, "expected [dart, tail]");
        auto d = ds[i][0].get<DartId>();
        auto v = ds[i][1].get<VertexId>();
        if (!g.has_vertex(v)) throw ParseError(p, "tail is not a listed vertex");
        if (!tail.emplace(d, v).second) throw ParseError(p, "duplicate dart");
    }
    const Json& inv = detail::get_array(j, "involution", root);
    std::set<DartId> paired;
    for (std::size_t i = 0; i < inv.size(); ++i) {
        std::string p = "$.involution[" + std::to_string(i) + "]";
        if (!inv[i].is_array() || inv[i].size() != 2 || !inv[i][0].is_number_unsigned() || !inv[i][1].is_number_unsigned())
            throw ParseError(p, "expected [dart, dart]");
        auto a = inv[i][0].get<DartId>(), b = inv[i][1].get<DartId>();
        if (a > b) std::swap(a, b);
        if (a % 2 != 0 || b != a + 1) throw ParseError(p, "pair must be (2k, 2k+1)");
        if (!tail.count(a) || !tail.count(b)) throw ParseError(p, "pair names an undeclared dart");
        if (!paired.insert(a).second) throw ParseError(p, "dart paired twice");
        paired.insert(b);
        g.insert_edge(edge_of(a), tail[a], tail[b]);
    }
    if (paired.size() != tail.size()) throw ParseError("$.involution", "some darts are unpaired");

    std::map<VertexId, std::vector<DartId>> rot;
    const Json& rs = detail::get_array(j, "rotation", root);
    for (std::size_t i = 0; i < rs.size(); ++i) {
        std::string p = "$.rotation[" + std::to_string(i) + "]";
        auto v = detail::get_field<VertexId>(rs[i], "vertex", p);
        if (!g.has_vertex(v)) throw ParseError(p + ".vertex", "not a listed vertex");
        if (rot.count(v)) throw ParseError(p + ".vertex", "rotation given twice");
        rot[v] = detail::get_field<std::vector<DartId>>(rs[i], "darts", p);
    }
    std::vector<FaceTag> tags;
    if (j.contains("tags")) {
        const Json& ts = detail::get_array(j, "tags", root);
        for (std::size_t i = 0; i < ts.size(); ++i) {
            std::string p = "$.tags[" + std::to_string(i) + "]";
            FaceTag t;
            t.genus = detail::get_field<int>(ts[i], "genus", p);
            const Json& ws = detail::get_array(ts[i], "walks", p);
            for (std::size_t k = 0; k < ws.size(); ++k) t.walks.push_back(detail::walk_ref_from(ws[k], p + ".walks[" + std::to_string(k) + "]"));
            tags.push_back(std::move(t));
        }
    }
    if (metadata) *metadata = j.value("metadata", Json::object());
    try {
        return SurfaceMap(std::move(g), rot, std::move(tags));
    } catch (const std::invalid_argument& e) {
        throw ParseError("$.rotation", e.what());
    }
}

// Parses JSON text, reporting syntax errors with a line number.
inline Json parse_json_text(const std::string& text, const std::string& source = "input") {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(std::min(e.byte, text.size())), '\n'));
        throw ParseError(source + ":" + std::to_string(line), "invalid JSON");
    }
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path, "cannot open");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline SurfaceMap load_map(const std::string& path, Json* metadata = nullptr) {
    return map_from_json(parse_json_text(read_text_file(path), path), metadata);
}

inline void save_map(const std::string& path, const SurfaceMap& m, const Json& metadata = Json::object()) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << map_to_json(m, metadata).dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// Move records

inline Json corner_json(const Corner& c) {
    Json j{{"vertex", c.vertex}};
    j["after"] = c.after == no_dart ? Json(nullptr) : Json(c.after);
    return j;
}

inline Corner corner_from(const Json& j, const std::string& path) {
    Corner c;
    c.vertex = detail::get_field<VertexId>(j, "vertex", path);
    if (!j.contains("after")) throw ParseError(path + ".after", "missing");
    c.after = j["after"].is_null() ? no_dart : detail::get_field<DartId>(j, "after", path);
    return c;
}

inline Json move_to_json(const MoveRecord& r) {
    Json j;
    j["kind"] = to_string(r.kind);
    j["walk"] = r.walk;
    j["edge"] = r.edge;
    j["diagonal"] = r.diagonal == Diagonal::d13 ? "13" : "24";
    j["vertex"] = r.vertex;
    j["interval"] = r.interval;
    j["dart_a"] = r.dart_a == no_dart ? Json(nullptr) : Json(r.dart_a);
    j["dart_b"] = r.dart_b == no_dart ? Json(nullptr) : Json(r.dart_b);
    j["face"] = r.face;
    j["corner_a"] = corner_json(r.corner_a);
    j["corner_b"] = corner_json(r.corner_b);
    Json side = Json::array();
    for (const WalkRef& w : r.split.side) side.push_back(detail::walk_ref_json(w));
    j["split"] = {{"separating", r.split.separating}, {"side", std::move(side)}, {"side_genus", r.split.side_genus}};
    Json merged = Json::array();
    for (auto [a, b] : r.merged) merged.push_back({a, b});
    j["merged"] = std::move(merged);
    j["new_vertices"] = r.new_vertices;
    j["new_edges"] = r.new_edges;
    j["removed_edges"] = r.removed_edges;
    j["target_code"] = r.target_code;
    return j;
}

inline MoveRecord move_from_json(const Json& j, const std::string& path) {
    using detail::get_field;
    MoveRecord r;
    try {
        r.kind = move_kind_from_string(get_field<std::string>(j, "kind", path));
    } catch (const std::invalid_argument& e) {
        throw ParseError(path + ".kind", e.what());
    }
    r.walk = get_field<std::vector<DartId>>(j, "walk", path);
    r.edge = get_field<EdgeId>(j, "edge", path);
    std::string diag = get_field<std::string>(j, "diagonal", path);
    if (diag != "13" && diag != "24") throw ParseError(path + ".diagonal", "expected \"13\" or \"24\"");
    r.diagonal = diag == "13" ? Diagonal::d13 : Diagonal::d24;
    r.vertex = get_field<VertexId>(j, "vertex", path);
    r.interval = get_field<std::vector<DartId>>(j, "interval", path);
    r.dart_a = j.contains("dart_a") && !j["dart_a"].is_null() ? get_field<DartId>(j, "dart_a", path) : no_dart;
    r.dart_b = j.contains("dart_b") && !j["dart_b"].is_null() ? get_field<DartId>(j, "dart_b", path) : no_dart;
    r.face = get_field<std::size_t>(j, "face", path);
    r.corner_a = corner_from(get_field<Json>(j, "corner_a", path), path + ".corner_a");
    r.corner_b = corner_from(get_field<Json>(j, "corner_b", path), path + ".corner_b");
    Json split = get_field<Json>(j, "split", path);
    r.split.separating = get_field<bool>(split, "separating", path + ".split");
    r.split.side_genus = get_field<int>(split, "side_genus", path + ".split");
    const Json& side = detail::get_array(split, "side", path + ".split");
    for (std::size_t i = 0; i < side.size(); ++i) r.split.side.push_back(detail::walk_ref_from(side[i], path + ".split.side"));
    for (const auto& p : detail::get_array(j, "merged", path)) {
        if (!p.is_array() || p.size() != 2) throw ParseError(path + ".merged", "expected [old, survivor] pairs");
        r.merged.emplace_back(p[0].get<VertexId>(), p[1].get<VertexId>());
    }
    r.new_vertices = get_field<std::vector<VertexId>>(j, "new_vertices", path);
    r.new_edges = get_field<std::vector<EdgeId>>(j, "new_edges", path);
    r.removed_edges = get_field<std::vector<EdgeId>>(j, "removed_edges", path);
    r.target_code = get_field<std::string>(j, "target_code", path);
    return r;
}

// ---------------------------------------------------------------------------
// DOT

inline std::string to_dot(const SurfaceMap& m, const std::string& name = "G") {
    std::ostringstream out;
    out << "graph \"" << name << "\" {\n";
    out << "  // genus " << m.genus() << ", " << m.faces().size() << " faces\n";
    for (VertexId v : m.graph().vertices()) {
        out << "  v" << v << " [label=\"" << v << "\"];  // rotation:";
        for (DartId d : m.rotation(v)) out << " " << d;
        out << "\n";
    }
    for (const Edge& e : m.graph().edges()) out << "  v" << e.u << " -- v" << e.v << " [label=\"e" << e.id << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace toroidal

#endif  // TOROIDAL_IO_HPP
