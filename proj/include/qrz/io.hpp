#pragma once

// JSON views of library values. Machine output uses nlohmann::json, whose
// object keys are ordered, so serialized output is deterministic.

#include <json.hpp>

#include "qrz/lincode.hpp"
#include "qrz/padic.hpp"
#include "qrz/qr.hpp"

namespace qrz {

inline constexpr int schema_version = 1;

using nlohmann::json;

inline json to_json(const ZPoly& f) { return json(f.coeffs()); }

inline json to_json(const poly::Poly& f) { return json(f); }

inline json to_json(const LinearCode& c) {
    return json{{"n", c.length()}, {"m", c.m()}, {"rows", c.rows()}};
}

inline LinearCode code_from_json(const json& j) {
    const std::size_t n = j.at("n").get<std::size_t>();
    const Modulus mod(j.at("m").get<unsigned>());
    return canonical_form(j.at("rows").get<std::vector<Row>>(), n, mod);
}

inline json to_json(const WeightReport& w) {
    return json{{"min_weight", w.min_weight},
                {"min_weight_count", w.min_weight_count},
                {"min_odd_like_count", w.min_odd_like_count},
                {"all_min_odd_like", w.all_min_odd_like},
                {"enumerated", w.enumerated},
                {"words_examined", w.words_examined}};
}

inline json to_json(const PadicExpansion& e) { return json(e.digits); }

inline json to_json(const IdempotentCoeffs& c) {
    return json{{"alpha", c.alpha()},
                {"beta", c.beta()},
                {"gamma", c.gamma()},
                {"beta_plus_gamma", c.beta_plus_gamma()},
                {"trace_relation", c.satisfies_trace_relation()}};
}

inline json to_json(const FamilyParams& f) {
    return json{{"p", f.p}, {"m", f.m}, {"k", f.k}, {"sign", f.sign}};
}

inline json to_json(const IdentityReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name},
                          {"formula", c.formula},
                          {"passed", c.passed},
                          {"erratum", c.erratum},
                          {"expected", to_json(c.expected)},
                          {"actual", to_json(c.actual)}});
    return json{{"p", r.p}, {"m", r.m}, {"integer_k", r.integer_k}, {"checks", checks}, {"all_passed", r.all_passed()}};
}

inline json to_json(const QrFamily& f, bool with_matrices) {
    json j{{"params", to_json(f.params)},
           {"case", std::string(to_string(f.case_tag))},
           {"base", to_json(f.base)},
           {"hensel_identified", f.hensel_identified},
           {"log2_sizes",
            {{"q", f.q.log2_size()},
             {"qprime", f.q_prime.log2_size()},
             {"n", f.n.log2_size()},
             {"nprime", f.n_prime.log2_size()}}},
           {"idempotents",
            {{"q", to_json(f.q_idem)},
             {"qprime", to_json(f.q_prime_idem)},
             {"n", to_json(f.n_idem)},
             {"nprime", to_json(f.n_prime_idem)}}}};
    if (with_matrices)
        j["codes"] = {{"q", to_json(f.q)},
                      {"qprime", to_json(f.q_prime)},
                      {"n", to_json(f.n)},
                      {"nprime", to_json(f.n_prime)}};
    return j;
}

inline json to_json(const ClauseCheck& c) {
    return json{{"id", c.id}, {"statement", c.statement}, {"passed", c.passed}};
}

}  // namespace qrz
