#pragma once

/**
 * @file serialize.hpp
 * @brief JSON forms of compositions, polynomials, fillings, expansion
 *        tables and pairing reports.
 *
 * Coefficients that do not fit in 64 bits are emitted as decimal strings.
 */

#include <json.hpp>

#include <cstdint>
#include <limits>

#include "katom/composition.hpp"
#include "katom/expansions.hpp"
#include "katom/involution.hpp"
#include "katom/polynomial.hpp"
#include "katom/skyline.hpp"

namespace katom {

using json = nlohmann::ordered_json;

inline json to_json_value(const WeakComposition& a) { return json(a.entries()); }

inline json to_json_value(const Integer& c) {
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
        return json(static_cast<std::int64_t>(c));
    }
    return json(c.str());
}

/// [{"coeff": c, "beta": k, "x": [...]}, ...] in graded-lex order.
inline json to_json_value(const SparsePolynomial& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json term;
        term["coeff"] = to_json_value(c);
        term["beta"] = m.beta;
        term["x"] = m.x;
        terms.push_back(std::move(term));
    }
    return terms;
}

inline json to_json_value(const Komposition& b) { return json(b.to_string()); }

/// {"shape": [...], "rows": [[[entries]...]...]}, rows bottom first.
inline json to_json_value(const SkylineFilling& t) {
    json out;
    out["shape"] = to_json_value(t.shape());
    json rows = json::array();
    for (const auto& r : t.rows()) {
        json row = json::array();
        for (const auto& b : r) row.push_back(b);
        rows.push_back(std::move(row));
    }
    out["rows"] = std::move(rows);
    return out;
}

inline json to_json_value(const ExpansionTable& table) {
    json out;
    out["a"] = to_json_value(table.source);
    out["base"] = family_name(table.base);
    json terms = json::array();
    for (const auto& [b, term] : table.coefficients) {
        terms.push_back({{"b", b.entries()}, {"m", term.multiplicity}, {"k", term.beta_power}});
    }
    out["terms"] = std::move(terms);
    return out;
}

inline json to_json_value(const PairingReport& report) {
    json out;
    out["a"] = to_json_value(report.shape);
    out["family"] = family_name(report.family);
    json pairs = json::array();
    for (const auto& [t, u] : report.pairs) {
        pairs.push_back(json::array({to_json_value(t), to_json_value(u)}));
    }
    out["pairs"] = std::move(pairs);
    json fixed = json::array();
    for (const auto& t : report.fixed_points) fixed.push_back(to_json_value(t));
    out["fixed"] = std::move(fixed);
    return out;
}

/// Inverse of to_json_value for fillings.
inline SkylineFilling filling_from_json(const json& j) {
    auto shape = WeakComposition(j.at("shape").get<std::vector<int>>());
    auto rows = j.at("rows").get<std::vector<std::vector<Box>>>();
    return SkylineFilling(std::move(shape), std::move(rows));
}

}  // namespace katom
