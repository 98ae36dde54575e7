#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "hypfloquet/error.hpp"
#include "hypfloquet/surface.hpp"

namespace hypfloquet {

inline nlohmann::json to_json(const SurfaceComplex &c) {
    nlohmann::json out;
    out["orientable"] = c.orientable();
    out["genus"] = c.genus();
    out["vertices"] = c.vertex_ids();
    auto edges = nlohmann::json::array();
    for (const auto &e : c.edges()) {
        edges.push_back({{"id", e.id}, {"ends", {c.vertex_ids()[e.ends[0]], c.vertex_ids()[e.ends[1]]}}});
    }
    out["edges"] = std::move(edges);
    auto faces = nlohmann::json::array();
    for (const auto &f : c.faces()) {
        auto boundary = nlohmann::json::array();
        for (const auto &s : f) {
            boundary.push_back({{"edge", c.edges()[s.edge].id}, {"dir", s.dir}});
        }
        faces.push_back(std::move(boundary));
    }
    out["faces"] = std::move(faces);
    return out;
}

inline std::string serialize(const SurfaceComplex &c, int indent = -1) {
    return to_json(c).dump(indent);
}

namespace detail {

inline const nlohmann::json &require_key(const nlohmann::json &obj, const char *key, const std::string &where) {
    if (!obj.is_object()) {
        throw ParseError("surface", "expected an object", where.empty() ? "/" : where);
    }
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw ParseError("surface", std::string("missing key \"") + key + "\"", where.empty() ? "/" : where);
    }
    return *it;
}

inline int require_int(const nlohmann::json &v, const std::string &where) {
    if (!v.is_number_integer()) {
        throw ParseError("surface", "expected an integer", where);
    }
    return v.get<int>();
}

inline const nlohmann::json &require_array(const nlohmann::json &v, const std::string &where) {
    if (!v.is_array()) {
        throw ParseError("surface", "expected an array", where);
    }
    return v;
}

}  // namespace detail

/// Parses and validates a complex document. Shape errors raise ParseError with
/// a JSON pointer; topological problems raise DomainError from validation.
inline SurfaceComplex from_json(const nlohmann::json &doc) {
    using detail::require_array;
    using detail::require_int;
    using detail::require_key;
    const auto &orientable = require_key(doc, "orientable", "");
    if (!orientable.is_boolean()) {
        throw ParseError("surface", "expected a boolean", "/orientable");
    }
    int genus = require_int(require_key(doc, "genus", ""), "/genus");

    std::vector<int> vertices;
    const auto &jv = require_array(require_key(doc, "vertices", ""), "/vertices");
    for (size_t i = 0; i < jv.size(); i++) {
        vertices.push_back(require_int(jv[i], "/vertices/" + std::to_string(i)));
    }

    std::vector<std::pair<int, std::array<int, 2>>> edges;
    const auto &je = require_array(require_key(doc, "edges", ""), "/edges");
    for (size_t i = 0; i < je.size(); i++) {
        std::string at = "/edges/" + std::to_string(i);
        int id = require_int(require_key(je[i], "id", at), at + "/id");
        const auto &ends = require_array(require_key(je[i], "ends", at), at + "/ends");
        if (ends.size() != 2) {
            throw ParseError("surface", "an edge needs exactly two ends", at + "/ends");
        }
        edges.push_back({id, {require_int(ends[0], at + "/ends/0"), require_int(ends[1], at + "/ends/1")}});
    }

    std::vector<std::vector<std::pair<int, int>>> faces;
    const auto &jf = require_array(require_key(doc, "faces", ""), "/faces");
    for (size_t i = 0; i < jf.size(); i++) {
        std::string at = "/faces/" + std::to_string(i);
        const auto &boundary = require_array(jf[i], at);
        std::vector<std::pair<int, int>> face;
        for (size_t j = 0; j < boundary.size(); j++) {
            std::string slot = at + "/" + std::to_string(j);
            int edge = require_int(require_key(boundary[j], "edge", slot), slot + "/edge");
            int dir = require_int(require_key(boundary[j], "dir", slot), slot + "/dir");
            if (dir != 1 && dir != -1) {
                throw ParseError("surface", "dir must be +1 or -1", slot + "/dir");
            }
            face.push_back({edge, dir});
        }
        faces.push_back(std::move(face));
    }
    return SurfaceComplex::create(orientable.get<bool>(), genus, std::move(vertices), edges, faces);
}

inline SurfaceComplex deserialize(const std::string &text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError("surface", "malformed JSON", "byte " + std::to_string(e.byte));
    }
    return from_json(doc);
}

}  // namespace hypfloquet
