#pragma once

#include <istream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gpoly/errors.hpp"
#include "gpoly/poly.hpp"
#include "gpoly/reconstruct.hpp"

namespace gpoly {

/// Insertion-ordered JSON so every emitted document is byte-reproducible.
using Json = nlohmann::ordered_json;

inline Json poly_to_json(const Poly& p) { return Json(coefficient_strings(p)); }

inline Poly poly_from_json(const Json& j) {
    if (!j.is_array()) {
        throw MalformedInput("polynomial must be an array of coefficient strings");
    }
    std::vector<std::string> coeffs;
    coeffs.reserve(j.size());
    for (const Json& c : j) {
        if (!c.is_string()) {
            throw MalformedInput("polynomial coefficients must be strings");
        }
        coeffs.push_back(c.get<std::string>());
    }
    try {
        return poly_from_strings(coeffs);
    } catch (const MalformedRational& e) {
        throw MalformedInput(e.what());
    }
}

inline Json deck_to_json(const DeckBundle& bundle) {
    Json j;
    j["kind"] = to_string(bundle.kind);
    j["n"] = bundle.n;
    j["m"] = bundle.m;
    Json edges = Json::array();
    for (const Poly& p : bundle.edge_polys) {
        edges.push_back(poly_to_json(p));
    }
    j["edge_polys"] = std::move(edges);
    if (bundle.pair_polys.has_value()) {
        Json pairs = Json::array();
        for (const Poly& p : *bundle.pair_polys) {
            pairs.push_back(poly_to_json(p));
        }
        j["pair_polys"] = std::move(pairs);
    }
    return j;
}

inline DeckBundle deck_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("n") || !j.contains("m") ||
        !j.contains("edge_polys")) {
        throw MalformedInput("deck file needs kind, n, m and edge_polys");
    }
    if (!j["kind"].is_string() || !j["n"].is_number_unsigned() || !j["m"].is_number_unsigned()) {
        throw MalformedInput("deck kind must be a string and n, m non-negative integers");
    }
    DeckBundle bundle;
    bundle.kind = sigma_kind_from_string(j["kind"].get<std::string>());
    bundle.n = j["n"].get<std::size_t>();
    bundle.m = j["m"].get<std::size_t>();
    if (!j["edge_polys"].is_array()) {
        throw MalformedInput("edge_polys must be an array");
    }
    for (const Json& p : j["edge_polys"]) {
        bundle.edge_polys.push_back(poly_from_json(p));
    }
    if (j.contains("pair_polys")) {
        if (!j["pair_polys"].is_array()) {
            throw MalformedInput("pair_polys must be an array");
        }
        bundle.pair_polys.emplace();
        for (const Json& p : j["pair_polys"]) {
            bundle.pair_polys->push_back(poly_from_json(p));
        }
    }
    validate(bundle);
    return bundle;
}

inline DeckBundle deck_from_stream(std::istream& in) {
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInput(std::string("deck file is not valid JSON: ") + e.what());
    }
    return deck_from_json(j);
}

inline Json report_to_json(const ReconstructionReport& report) {
    Json j;
    j["status"] = to_string(report.status);
    std::vector<std::string> coeffs;
    coeffs.reserve(report.coefficients.size());
    for (const Rat& c : report.coefficients) {
        coeffs.push_back(to_string(c));
    }
    j["coefficients"] = coeffs;
    j["free_indices"] = report.free_indices;
    Json residuals = Json::object();
    for (const auto& [index, value] : report.residuals) {
        residuals[std::to_string(index)] = to_string(value);
    }
    j["residuals"] = std::move(residuals);
    return j;
}

/// Symmetric-matrix JSON: an array of equal-length rows of rational strings.
inline RatMatrix matrix_from_json(const Json& j) {
    if (!j.is_array()) {
        throw MalformedInput("matrix file must be an array of rows");
    }
    RatMatrix m(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        const Json& row = j[i];
        if (!row.is_array() || row.size() != j.size()) {
            throw MalformedInput("matrix rows must all have length n");
        }
        for (std::size_t col = 0; col < row.size(); ++col) {
            if (!row[col].is_string()) {
                throw MalformedInput("matrix entries must be rational strings");
            }
            try {
                m(i, col) = parse_rat(row[col].get<std::string>());
            } catch (const MalformedRational& e) {
                throw MalformedInput(e.what());
            }
        }
    }
    return m;
}

inline RatMatrix matrix_from_stream(std::istream& in) {
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInput(std::string("matrix file is not valid JSON: ") + e.what());
    }
    return matrix_from_json(j);
}

}  // namespace gpoly
