#pragma once

// JSON wire formats for the library's domain types.
//
// Set functions:   {"d": 3, "entries": [{"set": [1,2], "value": "3/2"}, ...]}
// Coefficients:    {"d": 3, "y": <entries>}
// Matroids:        {"ground": 3, "bases": [[1,2],[1,3],[2,3]]}
//                  or {"graph": {"vertices": 3, "edges": [[1,2],[2,3],[1,3]]}}
// Symmetric maps:  {"d": 3, "values": ["1", "3/2"]}
//
// Omitted subsets default to 0. "set" lists are strictly increasing and
// 1-based. Values are decimal integers or "p/q" strings; floats are
// rejected so no rounding can sneak in.

#include "genperm/functionals.hpp"
#include "genperm/genperm.hpp"
#include "genperm/matroid.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace genperm {

using nlohmann::json;

namespace detail {

inline Rational value_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw std::invalid_argument(where + ": value must be an integer or a \"p/q\" string");
}

inline json value_to_json(const Rational& v) { return to_string(v); }

inline int ground_from_json(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
        throw std::invalid_argument(std::string("missing or non-integer \"") + key + "\" field");
    }
    const long long d = j[key].get<long long>();
    if (d < 1 || d > kMaxGroundSize) {
        throw std::invalid_argument(std::string("\"") + key + "\" must be between 1 and " +
                                    std::to_string(kMaxGroundSize));
    }
    return static_cast<int>(d);
}

inline Subset set_from_json(const json& j, int d) {
    if (!j.is_array()) throw std::invalid_argument("\"set\" must be an array of elements");
    std::vector<int> elements;
    int previous = 0;
    for (const json& e : j) {
        if (!e.is_number_integer()) throw std::invalid_argument("set elements must be integers");
        const long long v = e.get<long long>();
        if (v < 1 || v > d) {
            throw std::invalid_argument("set element " + std::to_string(v) +
                                        " outside the ground set");
        }
        if (v <= previous) throw std::invalid_argument("set elements must be strictly increasing");
        previous = static_cast<int>(v);
        elements.push_back(previous);
    }
    return Subset::of(elements, d);
}

inline json set_to_json(const Subset& s) { return json(s.elements()); }

inline SetFunction entries_from_json(const json& entries, int d) {
    if (!entries.is_array()) throw std::invalid_argument("entries must be an array");
    SetFunction f(d);
    std::vector<bool> seen(f.table_size(), false);
    for (const json& entry : entries) {
        if (!entry.is_object() || !entry.contains("set") || !entry.contains("value")) {
            throw std::invalid_argument("each entry needs a \"set\" and a \"value\"");
        }
        const Subset s = set_from_json(entry["set"], d);
        if (seen[s.bits()]) {
            throw std::invalid_argument("duplicate entry for set " + to_string(s));
        }
        seen[s.bits()] = true;
        f.set(s, value_from_json(entry["value"], "entry for " + to_string(s)));
    }
    return f;
}

inline json entries_to_json(const SetFunction& f) {
    json entries = json::array();
    for (std::uint32_t m = 1; m < f.table_size(); ++m) {
        if (f.at_mask(m) == 0) continue;
        entries.push_back({{"set", set_to_json(Subset(m, f.ground_size()))},
                           {"value", value_to_json(f.at_mask(m))}});
    }
    return entries;
}

}  // namespace detail

inline SetFunction set_function_from_json(const json& j) {
    const int d = detail::ground_from_json(j, "d");
    if (!j.contains("entries")) throw std::invalid_argument("missing \"entries\" field");
    return detail::entries_from_json(j["entries"], d);
}

inline json set_function_to_json(const SetFunction& f) {
    return {{"d", f.ground_size()}, {"entries", detail::entries_to_json(f)}};
}

inline GenPermRep rep_from_json(const json& j) {
    const int d = detail::ground_from_json(j, "d");
    if (!j.contains("y")) throw std::invalid_argument("missing \"y\" field");
    return GenPermRep{detail::entries_from_json(j["y"], d)};
}

inline json rep_to_json(const GenPermRep& rep) {
    return {{"d", rep.ground_size()}, {"y", detail::entries_to_json(rep.y())}};
}

inline SymmetricFunctional symmetric_functional_from_json(const json& j) {
    const int d = detail::ground_from_json(j, "d");
    if (d < 2) throw std::invalid_argument("symmetric functionals need d >= 2");
    if (!j.contains("values") || !j["values"].is_array() ||
        j["values"].size() != static_cast<std::size_t>(d - 1)) {
        throw std::invalid_argument("\"values\" must list exactly d-1 entries");
    }
    SymmetricFunctional phi{d, {}};
    for (const json& v : j["values"]) {
        phi.values.push_back(detail::value_from_json(v, "symmetric functional value"));
    }
    return phi;
}

inline json symmetric_functional_to_json(const SymmetricFunctional& phi) {
    json values = json::array();
    for (const Rational& v : phi.values) values.push_back(detail::value_to_json(v));
    return {{"d", phi.d}, {"values", values}};
}

inline Matroid matroid_from_json(const json& j) {
    if (j.contains("graph")) {
        const json& g = j["graph"];
        if (!g.contains("vertices") || !g["vertices"].is_number_integer()) {
            throw std::invalid_argument("graph needs an integer \"vertices\" field");
        }
        if (!g.contains("edges") || !g["edges"].is_array()) {
            throw std::invalid_argument("graph needs an \"edges\" array");
        }
        const int vertices = static_cast<int>(g["vertices"].get<long long>());
        std::vector<std::pair<int, int>> edges;
        for (const json& e : g["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer()) {
                throw std::invalid_argument("each edge must be a pair of vertex numbers");
            }
            edges.emplace_back(static_cast<int>(e[0].get<long long>()),
                               static_cast<int>(e[1].get<long long>()));
        }
        return graphic_matroid(vertices, edges);
    }
    const int m = detail::ground_from_json(j, "ground");
    if (!j.contains("bases") || !j["bases"].is_array() || j["bases"].empty()) {
        throw std::invalid_argument("matroid needs a nonempty \"bases\" array");
    }
    std::vector<Subset> bases;
    for (const json& b : j["bases"]) bases.push_back(detail::set_from_json(b, m));
    return Matroid(m, std::move(bases));
}

inline json matroid_to_json(const Matroid& m) {
    json bases = json::array();
    for (const Subset& b : m.bases()) bases.push_back(detail::set_to_json(b));
    return {{"ground", m.ground_size()}, {"bases", bases}};
}

inline json lattice_point_to_json(const LatticePoint& p) {
    json out = json::array();
    for (const Integer& c : p.coords) {
        if (c.fits_slong_p()) {
            out.push_back(c.get_si());
        } else {
            out.push_back(to_string(c));
        }
    }
    return out;
}

inline json point_to_json(const Point& p) {
    json out = json::array();
    for (const Rational& c : p) {
        if (is_integer(c) && c.get_num().fits_slong_p()) {
            out.push_back(c.get_num().get_si());
        } else {
            out.push_back(to_string(c));
        }
    }
    return out;
}

inline json integer_to_json(const Integer& n) {
    if (n.fits_slong_p()) return json(n.get_si());
    return json(to_string(n));
}

}  // namespace genperm
