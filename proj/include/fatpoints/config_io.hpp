#pragma once

// Configuration files: one JSON object per file.
//
//   {
//     "ambient_dim": 2,
//     "field": {"kind": "prime-field", "prime": 2147483647},
//     "multiplicities": [2, 2, ...],
//     "points": [[1, 5, 7], ...],
//     "provenance": {"kind": "c_dr", "d": 5, "r": 1},
//     "seed": 7,
//     "tool_version": "0.1.0"
//   }
//
// Points are canonical integer representatives (see geometry.hpp). Over Q the
// field is {"kind": "exact-rational"} and points are integer vectors.

#include <fatpoints/error.hpp>
#include <fatpoints/field.hpp>
#include <fatpoints/geometry.hpp>
#include <fatpoints/hilbert.hpp>
#include <fatpoints/version.hpp>

#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace fatpoints {

using Json = nlohmann::json;

inline Json field_to_json(const FieldSpec& f) {
    Json j;
    j["kind"] = to_string(f.kind());
    if (f.is_prime()) j["prime"] = f.prime();
    return j;
}

inline FieldSpec field_from_json(const Json& j) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "prime-field") return FieldSpec::prime_field(j.at("prime").get<std::uint64_t>());
    if (kind == "exact-rational") return FieldSpec::rational();
    throw Error(ErrorKind::invalid_input, "unknown field kind '" + kind + "'");
}

inline Json provenance_to_json(const Provenance& p) {
    Json j;
    j["kind"] = to_string(p.kind);
    switch (p.kind) {
        case ProvenanceKind::c_d: j["d"] = p.d; break;
        case ProvenanceKind::c_dr:
            j["d"] = p.d;
            j["r"] = p.r;
            break;
        case ProvenanceKind::random: j["s"] = p.count; break;
        case ProvenanceKind::file: break;
    }
    return j;
}

inline Provenance provenance_from_json(const Json& j) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "random") return {ProvenanceKind::random, 0, 0, j.value("s", 0)};
    if (kind == "c_d") return {ProvenanceKind::c_d, j.at("d").get<int>(), 0, 0};
    if (kind == "c_dr") return {ProvenanceKind::c_dr, j.at("d").get<int>(), j.at("r").get<int>(), 0};
    if (kind == "file") return {};
    throw Error(ErrorKind::invalid_input, "unknown provenance '" + kind + "'");
}

inline Json scheme_to_json(const FatPointScheme& z) {
    Json j;
    j["ambient_dim"] = z.ambient_dim();
    j["field"] = field_to_json(z.field());
    j["multiplicities"] = z.multiplicities();
    Json points = Json::array();
    for (const auto& p : z.support().points()) points.push_back(p.coords());
    j["points"] = std::move(points);
    j["provenance"] = provenance_to_json(z.support().provenance());
    j["seed"] = z.support().seed() ? Json(*z.support().seed()) : Json(nullptr);
    j["tool_version"] = version;
    return j;
}

inline FatPointScheme scheme_from_json(const Json& j) {
    try {
        const FieldSpec field = field_from_json(j.at("field"));
        const auto ambient = j.value("ambient_dim", std::size_t{2});
        const auto& pts = j.at("points");
        if (!pts.is_array()) throw Error(ErrorKind::invalid_input, "points must be a list");
        std::vector<ProjectivePoint> points;
        for (const auto& p : pts) {
            auto coords = p.get<std::vector<std::int64_t>>();
            if (coords.size() != ambient + 1) {
                throw Error(ErrorKind::invalid_input, "point with " + std::to_string(coords.size()) + " coordinates in P^" + std::to_string(ambient));
            }
            if (field.is_prime()) {
                for (auto c : coords) {
                    if (c < 0 || static_cast<std::uint64_t>(c) >= field.prime()) {
                        throw Error(ErrorKind::invalid_input, "coordinate " + std::to_string(c) + " is not a canonical residue");
                    }
                }
            }
            points.emplace_back(coords, field);
        }
        std::vector<int> mult = j.contains("multiplicities") ? j.at("multiplicities").get<std::vector<int>>() : std::vector<int>(points.size(), 1);
        std::optional<std::uint64_t> seed;
        if (j.contains("seed") && !j.at("seed").is_null()) seed = j.at("seed").get<std::uint64_t>();
        const Provenance prov = j.contains("provenance") ? provenance_from_json(j.at("provenance")) : Provenance{};
        return FatPointScheme(Configuration(std::move(points), field, prov, seed), std::move(mult));
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::invalid_input, std::string("malformed configuration: ") + e.what());
    }
}

inline std::string scheme_to_text(const FatPointScheme& z) { return scheme_to_json(z).dump(2) + "\n"; }

inline FatPointScheme scheme_from_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::invalid_input, std::string("configuration is not valid JSON: ") + e.what());
    }
    return scheme_from_json(j);
}

inline void write_scheme_file(const std::string& path, const FatPointScheme& z) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::invalid_input, "cannot write " + path);
    out << scheme_to_text(z);
}

inline FatPointScheme read_scheme_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::invalid_input, "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return scheme_from_text(buf.str());
}

}  // namespace fatpoints
