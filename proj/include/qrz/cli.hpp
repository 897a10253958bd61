#pragma once

// Command-line front end. Every subcommand prints one JSON document (or a
// CSV table for weight/verify with --format csv) to `out`.
//
// Exit codes: 0 ok, 1 a verification failed, 2 usage/config/parameter error,
// 3 budget exceeded where exhaustive enumeration was required.

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "qrz/binary_weight.hpp"
#include "qrz/config.hpp"
#include "qrz/io.hpp"
#include "qrz/verify.hpp"

namespace qrz::cli {

namespace detail {

inline json header(const std::string& command) {
    return json{{"schema_version", schema_version}, {"command", command}};
}

inline void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

inline json partition_json(u64 p) {
    const QuadPartition part(p);
    json j = header("partition");
    j["p"] = p;
    j["k"] = integer_k(p);
    j["Q"] = part.residues();
    j["N"] = part.nonresidues();
    return j;
}

inline json identities_json(u64 p, unsigned m) {
    json j = header("identities");
    j["report"] = to_json(product_identities_report(p, m));
    return j;
}

inline json idempotents_json(u64 p, unsigned m) {
    const auto sols = solve_idempotent_system(p, m);
    json list = json::array();
    for (const auto& s : sols) list.push_back(to_json(s));
    json j = header("idempotents");
    j["p"] = p;
    j["m"] = m;
    j["method"] = m <= exhaustive_idempotent_limit ? "exhaustive" : "lifted";
    j["count"] = sols.size();
    j["solutions"] = list;
    return j;
}

inline json family_json(u64 p, unsigned m, bool matrices) {
    const QrFamily f = build_family(p, m);
    json j = header("family");
    j.update(to_json(f, matrices));
    json stated = json::array(), structural = json::array();
    for (const auto& c : stated_family_clauses(f)) stated.push_back(to_json(c));
    for (const auto& c : structural_family_clauses(f)) structural.push_back(to_json(c));
    j["clauses"] = {{"stated", stated}, {"structural", structural}};
    return j;
}

inline json padic_json(u64 p, unsigned m) {
    json j = header("padic");
    j["prime"] = p;
    j["m"] = m;
    json values;
    for (PadicTarget t : {PadicTarget::p, PadicTarget::neg_p, PadicTarget::inv_p, PadicTarget::neg_inv_p}) {
        const PadicExpansion e = expand(t, p, m);
        const std::string key(to_string(t));
        j[key] = to_json(e);
        values[key] = e.value;
    }
    j["values"] = values;
    j["inverse_equals_self"] = inverse_equals_self(p, m);
    return j;
}

inline json lift_json(u64 p, unsigned m) {
    const FactorSet f = lifted_qr_factors(p, m);
    json j = header("lift");
    j["p"] = p;
    j["m"] = m;
    j["f_unit"] = to_json(f.f_unit);
    j["f_q"] = to_json(f.f_q);
    j["f_n"] = to_json(f.f_n);
    j["product_is_xp_minus_1"] = f.product_is_xp_minus_1();
    return j;
}

inline LinearCode select_code(u64 p, unsigned m, const std::string& which) {
    if (which == "lift") return code_from_polynomial(lifted_qr_factors(p, m).q_poly());
    const QrFamily f = build_family(p, m);
    if (which == "q") return f.q;
    if (which == "qprime") return f.q_prime;
    if (which == "n") return f.n;
    return f.n_prime;
}

struct WeightArgs {
    u64 p = 0;
    unsigned m = 0;
    std::string code = "lift";
    u64 budget = default_weight_budget;
    bool exhaustive = false;
    std::string format = "json";
};

inline void weight_cmd(const WeightArgs& a, std::ostream& out) {
    const LinearCode c = select_code(a.p, a.m, a.code);
    const WeightReport w = min_weight(c, a.budget, a.exhaustive);
    if (a.format == "csv") {
        out << "p,m,code,log2_size,min_weight,exhaustive\n"
            << a.p << ',' << a.m << ',' << a.code << ',' << c.log2_size() << ',' << w.min_weight << ','
            << (w.enumerated ? "true" : "false") << '\n';
        return;
    }
    json j = header("weight");
    j["p"] = a.p;
    j["m"] = a.m;
    j["code"] = a.code;
    j["log2_size"] = c.log2_size();
    j["report"] = to_json(w);
    if (a.code == "lift" && a.m >= 1) {
        try {
            j["binary_min_weight"] =
                binary_cyclic_min_weight(binary_qr_factors(a.p).f_q, static_cast<unsigned>(a.p), a.budget);
        } catch (const error&) {
            j["binary_min_weight"] = nullptr;
        }
    }
    emit(out, j);
}

inline int verify_cmd(const std::string& path, std::ostream& out) {
    const SweepConfig cfg = load_sweep_config(path);
    const VerifyOutcome v = run_verify(cfg);
    const std::string text = cfg.format == "csv" ? verify_csv(v.report) : v.report.dump(2) + "\n";
    if (cfg.output == "-") {
        out << text;
    } else {
        std::ofstream f(cfg.output);
        if (!f) throw error(errc::parse_error, "cannot write output " + cfg.output);
        f << text;
    }
    return v.exit_code;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quadratic residue codes over Z_{2^m}", "qrz"};
    app.require_subcommand(1);

    u64 p = 0;
    unsigned m = 0;
    auto add_pm = [&](CLI::App* sub, bool with_m) {
        sub->add_option("p", p, "odd prime, p = +-1 mod 8")->required();
        if (with_m) sub->add_option("m", m, "exponent of the modulus 2^m")->required()->check(CLI::Range(1u, 62u));
    };

    auto* partition = app.add_subcommand("partition", "residues and nonresidues mod p");
    add_pm(partition, false);
    auto* identities = app.add_subcommand("identities", "closed forms of e1^2, e2^2, e1e2, h^2");
    add_pm(identities, true);
    auto* idempotents = app.add_subcommand("idempotents", "all idempotents alpha + beta e1 + gamma e2");
    add_pm(idempotents, true);
    bool matrices = false;
    auto* family = app.add_subcommand("family", "the codes Q, Q', N, N'");
    add_pm(family, true);
    family->add_flag("--matrices", matrices, "include generator matrices");
    std::string config;
    auto* verify = app.add_subcommand("verify", "run the verification sweep");
    verify->add_option("--config", config, "sweep configuration file")->required();
    detail::WeightArgs wa;
    auto* weight = app.add_subcommand("weight", "minimum Hamming weight");
    add_pm(weight, true);
    weight->add_option("--code", wa.code)->check(CLI::IsMember({"q", "qprime", "n", "nprime", "lift"}));
    weight->add_option("--budget", wa.budget, "enumeration cap in words");
    weight->add_flag("--exhaustive", wa.exhaustive, "fail with exit 3 instead of sampling past the budget");
    weight->add_option("--format", wa.format)->check(CLI::IsMember({"json", "csv"}));
    auto* padic = app.add_subcommand("padic", "2-adic digits of p, -p, 1/p, -1/p");
    add_pm(padic, true);
    auto* lift = app.add_subcommand("lift", "Hensel-lifted factors of x^p - 1");
    add_pm(lift, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*partition) detail::emit(out, detail::partition_json(p));
        else if (*identities) detail::emit(out, detail::identities_json(p, m));
        else if (*idempotents) detail::emit(out, detail::idempotents_json(p, m));
        else if (*family) detail::emit(out, detail::family_json(p, m, matrices));
        else if (*verify) return detail::verify_cmd(config, out);
        else if (*weight) {
            wa.p = p;
            wa.m = m;
            detail::weight_cmd(wa, out);
        } else if (*padic) detail::emit(out, detail::padic_json(p, m));
        else if (*lift) detail::emit(out, detail::lift_json(p, m));
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == errc::budget_exceeded ? exit_budget : exit_usage;
    }
    return exit_ok;
}

}  // namespace qrz::cli
