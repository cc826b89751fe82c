#pragma once

/**
 * @file io.hpp
 * @brief JSON serialization for series, combinations, trees, and reports.
 */

#include <json.hpp>

#include "tsmzv/finite.hpp"
#include "tsmzv/mt.hpp"
#include "tsmzv/numeric.hpp"
#include "tsmzv/regularize.hpp"
#include "tsmzv/tree.hpp"

namespace tsmzv {

using json = nlohmann::json;

inline json to_json(const Series& s) {
    json coeffs = json::array();
    for (const auto& c : s.c) coeffs.push_back(to_string(c));
    return json{{"order", s.order}, {"coeffs", coeffs}};
}

inline Series series_from_json(const json& j) {
    Series s(j.at("order").get<int>());
    const auto& coeffs = j.at("coeffs");
    if (coeffs.size() != static_cast<size_t>(s.order))
        throw ArgumentError("series: coeffs length must equal order");
    for (size_t i = 0; i < coeffs.size(); ++i)
        s.c[i] = parse_rational(coeffs[i].get<std::string>());
    return s;
}

/// Words keyed by their letter strings.
inline json to_json(const LinComb& lc) {
    json terms = json::object();
    for (const auto& [w, c] : lc.terms()) terms[w.letters] = to_string(c);
    return json{{"terms", terms}};
}

/// z-basis rendering; requires H1.
inline json to_zbasis_json(const LinComb& lc) {
    json terms = json::object();
    for (const auto& [w, c] : lc.terms()) terms[to_string(index_from_word(w))] = to_string(c);
    return json{{"terms", terms}};
}

inline json to_json(const SymbolCombo& c) {
    json terms = json::object();
    for (const auto& [k, q] : c.terms()) terms[to_string(k)] = to_string(q);
    return terms;
}

inline json to_json(const RegPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coeff) arr.push_back(to_json(c));
    return json{{"coeffs_by_T_degree", arr}};
}

inline json to_json(const SymbolicSeries& s) {
    json arr = json::array();
    for (const auto& c : s.c) arr.push_back(to_json(c));
    return json{{"order", s.order}, {"coeffs", arr}};
}

inline json to_json(const ColoredTree& X, const EdgeIndex& k) {
    json vs = json::array(), es = json::array(), bl = json::array();
    for (const auto& v : X.vertices) vs.push_back(v);
    for (const auto& e : X.edges)
        es.push_back(json{{"u", e.a}, {"v", e.b}, {"k", k.at(e)}});
    for (const auto& v : X.black) bl.push_back(v);
    return json{{"vertices", vs}, {"edges", es}, {"root", X.root}, {"black", bl}};
}

inline std::pair<ColoredTree, EdgeIndex> tree_from_json(const json& j) {
    ColoredTree X;
    EdgeIndex k;
    for (const auto& v : j.at("vertices")) {
        std::string id = v.get<std::string>();
        if (!X.vertices.insert(id).second)
            throw ArgumentError("tree: duplicate vertex id '" + id + "'");
    }
    for (const auto& e : j.at("edges")) {
        TreeEdge edge(e.at("u").get<std::string>(), e.at("v").get<std::string>());
        if (!X.edges.insert(edge).second) throw ArgumentError("tree: duplicate edge");
        int label = e.at("k").get<int>();
        if (label < 0) throw ArgumentError("edge index: negative label");
        k.emplace(edge, label);
    }
    X.root = j.at("root").get<std::string>();
    for (const auto& v : j.at("black")) X.black.insert(v.get<std::string>());
    X.validate();
    validate_index(X, k);
    return {std::move(X), std::move(k)};
}

inline json to_json(const LimitReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back(json{{"coefficient_index", row.coefficient_index},
                            {"M", row.M},
                            {"truncated", row.truncated},
                            {"limit", row.limit},
                            {"abs_diff", row.abs_diff}});
    return json{{"index", to_string(r.k)},
                {"bullet", to_string(r.bullet)},
                {"tol", r.tol},
                {"rows", rows},
                {"pass", r.pass}};
}

inline json to_json(const IndepRow& row) {
    return json{{"coefficient_index", row.coefficient_index},
                {"value_over_pi2", row.value_over_pi2},
                {"recovered", row.recovered},
                {"num", row.num},
                {"den", row.den},
                {"err", row.err}};
}

inline json to_json(const IndepReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) rows.push_back(to_json(row));
    return json{{"index", to_string(r.k)}, {"tol", r.tol}, {"rows", rows}, {"pass", r.pass}};
}

inline json to_json(const ModValue& m) {
    json j;
    j["p"] = m.p;
    j["n"] = m.n;
    j["residue"] = m.r;
    return j;
}

} // namespace tsmzv
