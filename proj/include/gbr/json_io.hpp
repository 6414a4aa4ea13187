#pragma once

#include <string>

#include <json.hpp>

#include "gbr/formal_sum.hpp"
#include "gbr/koperator.hpp"
#include "gbr/parse.hpp"
#include "gbr/relations.hpp"
#include "gbr/rewrite.hpp"
#include "gbr/word.hpp"

namespace gbr {

using nlohmann::json;

inline json word_to_json(const Word& w) {
    json steps = json::array();
    for (const Generator& g : w.steps()) {
        json step{{"kind", std::string(1, kind_letter(g.kind))},
                  {"src", std::string(to_string(g.source))},
                  {"tgt", std::string(to_string(g.target))}};
        if (g.position != 0) step["pos"] = g.position;
        steps.push_back(std::move(step));
    }
    return json{{"source", std::string(to_string(w.source()))}, {"steps", std::move(steps)}};
}

// Polynomials keep their exponents as decimal string keys so the object form
// survives strict JSON tooling.
inline json poly_to_json(const ShiftPoly& p) {
    json out = json::object();
    for (const auto& [e, c] : p.coefficients()) out[std::to_string(e)] = c;
    return out;
}

inline json sum_to_json(const FormalSum& s) {
    json terms = json::array();
    for (const auto& [atom, poly] : s.terms())
        terms.push_back(json{{"atom", word_to_json(atom)}, {"poly", poly_to_json(poly)}});
    return json{{"source", std::string(to_string(s.source()))},
                {"target", std::string(to_string(s.target()))},
                {"terms", std::move(terms)}};
}

inline json relation_pack_json() {
    json out = json::array();
    for (const Relation& r : relation_closure())
        out.push_back(json{{"name", r.name},
                           {"lhs", word_to_json(r.lhs)},
                           {"rhs", word_to_json(r.rhs)},
                           {"provenance", r.provenance}});
    return out;
}

inline json matrix_to_json(const Mat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json witness_to_json(const std::vector<WitnessStep>& steps) {
    json out = json::array();
    for (const WitnessStep& s : steps)
        out.push_back(json{{"relation", relation_closure()[s.relation].name},
                           {"position", s.position},
                           {"direction", s.forward ? "forward" : "backward"}});
    return out;
}

}  // namespace gbr
