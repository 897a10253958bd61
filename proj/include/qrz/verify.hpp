#pragma once

// Verification sweep over a grid of (p, m). Results fall in three
// groups:
//   checks   must hold; any failure fails the run
//   errata   literal closed forms that the computation contradicts; they
//            are expected and compared against a checked-in list
//   findings structured observations (vacuous cases, Hensel identification)

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qrz/binary_weight.hpp"
#include "qrz/config.hpp"
#include "qrz/io.hpp"
#include "qrz/lincode.hpp"
#include "qrz/modring.hpp"
#include "qrz/padic.hpp"
#include "qrz/polyring.hpp"
#include "qrz/qr.hpp"

namespace qrz {

enum exit_code : int { exit_ok = 0, exit_failed = 1, exit_usage = 2, exit_budget = 3 };

struct Erratum {
    std::string id;
    u64 p = 0;
    unsigned m = 0;  // 0 when the entry does not depend on m
    std::string qualifier;  // e.g. clause id
    std::string detail;

    /// Stable identifier used in the expectation file.
    std::string key() const {
        std::string k = id + " p=" + std::to_string(p);
        if (m) k += " m=" + std::to_string(m);
        if (!qualifier.empty()) k += " " + qualifier;
        return k;
    }
};

struct CheckResult {
    std::string id;
    u64 p = 0;
    unsigned m = 0;
    bool passed = false;
    std::string detail;
};

struct VerifyOutcome {
    json report;
    int exit_code = exit_ok;
};

/// Reads an expectation file: one erratum key per line, '#' comments.
inline std::set<std::string> load_errata_expectation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::parse_error, "cannot open errata expectation " + path);
    std::set<std::string> keys;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = detail::trim_ws(line);
        if (!line.empty()) keys.insert(line);
    }
    return keys;
}

/// Cases C11 and C22 need p^2 = -1 mod 2^m. Scans every
/// pair and reports how many lie in the family range and whether any of
/// them admits either case.
inline json vacuity_finding(const std::vector<u64>& primes, const std::vector<unsigned>& ms) {
    u64 pairs = 0, in_range = 0, constructible = 0;
    json witnesses = json::array();
    for (u64 p : primes)
        for (unsigned m : ms) {
            ++pairs;
            try {
                family_params(p, m);
            } catch (const error&) {
                continue;
            }
            ++in_range;
            for (FamilyCase c : {FamilyCase::c11, FamilyCase::c22})
                if (!case_vacuous(c, p, m)) {
                    ++constructible;
                    witnesses.push_back({{"p", p}, {"m", m}, {"case", std::string(to_string(c))}});
                }
        }
    return json{{"id", "cases_c11_c22_vacuous"},
                {"statement", "p^2 = -1 mod 2^m has no odd solution for m >= 3"},
                {"pairs_examined", pairs},
                {"pairs_in_family_range", in_range},
                {"constructible", constructible},
                {"witnesses", witnesses},
                {"vacuous", constructible == 0}};
}

namespace detail {

class Sweep {
public:
    explicit Sweep(const SweepConfig& cfg) : cfg_(cfg) {}

    VerifyOutcome run() {
        std::vector<u64> primes = cfg_.p_list;
        std::sort(primes.begin(), primes.end());
        primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
        std::vector<unsigned> ms = cfg_.m_list;
        std::sort(ms.begin(), ms.end());
        ms.erase(std::unique(ms.begin(), ms.end()), ms.end());

        for (u64 p : primes) residue_sums(p);
        for (u64 p : primes)
            for (unsigned m : ms) {
                identities(p, m);
                idempotents(p, m);
                padic(p, m);
                hensel(p, m);
                family(p, m);
                weights(p, m);
            }
        findings_.push_back(vacuity_finding(primes, ms));
        return finish();
    }

private:
    void check(std::string id, u64 p, unsigned m, bool ok, std::string detail = {}) {
        checks_.push_back({std::move(id), p, m, ok, std::move(detail)});
    }

    void erratum(std::string id, u64 p, unsigned m, std::string qualifier, std::string detail) {
        errata_.push_back({std::move(id), p, m, std::move(qualifier), std::move(detail)});
    }

    void residue_sums(u64 p) {
        const QuadPartition part(p);
        const auto& Q = part.residues();
        const auto& N = part.nonresidues();
        const u64 half = (p - 1) / 2;
        const u64 k = integer_k(p);
        const u64 qq = count_zero_sums(Q, Q, p), nn = count_zero_sums(N, N, p), qn = count_zero_sums(Q, N, p);
        if (p % 8 == 7) {
            check("zero_sums", p, 0, qq == 0 && nn == 0 && qn == half,
                  "QQ=" + std::to_string(qq) + " NN=" + std::to_string(nn) + " QN=" + std::to_string(qn));
        } else {
            check("zero_sums", p, 0, qq == half && nn == half && qn == 0,
                  "QQ=" + std::to_string(qq) + " NN=" + std::to_string(nn) + " QN=" + std::to_string(qn));
            if (nn != 0)
                erratum("nonresidue_zero_sums", p, 0, "",
                        "i + j = 0 has " + std::to_string(nn) + " solutions with i, j in N");
        }
        const ClassCounts want_q = p % 8 == 7 ? ClassCounts{2 * k - 1, 2 * k, 0} : ClassCounts{2 * k - 1, 2 * k, 1};
        const ClassCounts want_n = p % 8 == 7 ? ClassCounts{2 * k - 1, 2 * k - 1, 1} : ClassCounts{2 * k, 2 * k, 0};
        bool ok = true;
        for (u64 i : Q) ok = ok && residue_class_counts(i, Q, part) == want_q && residue_class_counts(i, N, part) == want_n;
        check("residue_class_counts", p, 0, ok);
    }

    void identities(u64 p, unsigned m) {
        const IdentityReport rep = product_identities_report(p, m);
        for (const auto& c : rep.checks) {
            if (c.erratum) {
                if (!c.passed) erratum("e1e2_odd_form", p, m, "", c.name + " = " + c.formula + " fails");
                continue;
            }
            check("identity_" + c.name, p, m, c.passed, c.formula);
        }
    }

    void idempotents(u64 p, unsigned m) {
        const Modulus mod(m);
        const auto sols = solve_idempotent_system(p, m);
        check("idempotents_nonempty", p, m, !sols.empty(), std::to_string(sols.size()) + " solutions");
        if (m <= exhaustive_idempotent_limit)
            check("idempotents_exhaustive_eq_lifted", p, m, sols == solve_idempotent_system_lifted(p, m));

        const u64 inv = mod.inverse(mod.reduce(p));
        const std::set<std::array<u64, 3>> set = [&] {
            std::set<std::array<u64, 3>> s;
            for (const auto& c : sols) s.insert({c.alpha(), c.beta(), c.gamma()});
            return s;
        }();
        bool trace = true, inv_sum = true, swap = true, system = true, all_pm_p = true;
        std::set<u64> sums;
        for (const auto& c : sols) {
            const u64 s = c.beta_plus_gamma();
            sums.insert(s);
            trace = trace && c.satisfies_trace_relation();
            inv_sum = inv_sum && (s == inv || s == mod.neg(inv));
            all_pm_p = all_pm_p && (s == mod.reduce(p) || s == mod.neg(p));
            swap = swap && set.count({c.alpha(), c.gamma(), c.beta()});
            system = system && coefficient_system_holds(p, mod, c.alpha(), c.beta(), c.gamma());
        }
        std::string sum_list;
        for (u64 s : sums) sum_list += (sum_list.empty() ? "" : ",") + std::to_string(s);
        check("trace_relation", p, m, trace, "2 alpha - (beta + gamma) = 1");
        check("sum_is_pm_inverse", p, m, inv_sum, "beta + gamma in {" + sum_list + "}");
        check("swap_closure", p, m, swap);
        check("coefficient_system", p, m, system);
        check("sum_pm_p_iff_square_one", p, m, all_pm_p == inverse_equals_self(p, m));

        std::optional<FamilyParams> fp;
        try {
            fp = family_params(p, m);
        } catch (const error&) {
        }
        if (!sols.empty() && !all_pm_p)
            erratum("sum_not_pm_p", p, m, "",
                    "beta + gamma in {" + sum_list + "}, +-p = {" + std::to_string(mod.reduce(p)) + "," +
                        std::to_string(mod.neg(p)) + "}" + (fp ? "" : " (outside family range)"));
        if (!fp) return;

        bool shifted_ok = true;
        u64 shifted = 0;
        for (const auto& c : sols) {
            const u64 s = c.beta_plus_gamma();
            int dir = 0;
            if (s == fp->shift()) dir = -1;
            if (s == mod.neg(fp->shift())) dir = +1;
            if (dir == 0) continue;
            const ZPoly e = shift_by_h(c.polynomial(), dir, *fp);
            const auto abc = decode_coeffs(e);
            ++shifted;
            shifted_ok = shifted_ok && is_idempotent(e) && abc &&
                         ((*abc)[1] == (*abc)[2] || set.count(*abc));
        }
        check("shift_by_h_closure", p, m, shifted_ok, std::to_string(shifted) + " shifted");
    }

    void padic(u64 p, unsigned m) {
        std::optional<FamilyParams> fp;
        try {
            fp = family_params(p, m);
        } catch (const error&) {
            return;
        }
        const Modulus mod(m);
        bool oracle = true;
        for (PadicTarget t : {PadicTarget::p, PadicTarget::neg_p, PadicTarget::inv_p, PadicTarget::neg_inv_p})
            oracle = oracle && expand(t, p, m).value == direct_residue(t, p, m);
        check("padic_oracle", p, m, oracle);
        const auto ep = expand(PadicTarget::p, p, m), ei = expand(PadicTarget::inv_p, p, m);
        const auto en = expand(PadicTarget::neg_p, p, m), eni = expand(PadicTarget::neg_inv_p, p, m);
        check("padic_inverse_product", p, m, mod.mul(ep.value, ei.value) == 1);
        // The +(8k-1) side carries digits 1,1,1; its negatives carry 1,0,0.
        const DigitTemplate pos = fp->sign > 0 ? DigitTemplate::low111 : DigitTemplate::low100;
        const DigitTemplate neg = fp->sign > 0 ? DigitTemplate::low100 : DigitTemplate::low111;
        const bool templates = matches_template(ep, pos) && matches_template(ei, pos) && matches_template(en, neg) &&
                               matches_template(eni, neg);
        check("padic_templates", p, m, templates);
        if (templates && !inverse_equals_self(p, m))
            erratum("padic_inverse_not_self", p, m, "",
                    "p = " + std::to_string(ep.value) + " but 1/p = " + std::to_string(ei.value));
    }

    void hensel(u64 p, unsigned m) {
        const FactorSet lift = lifted_qr_factors(p, m);
        const FactorSet bin = binary_qr_factors(p);
        check("hensel_product", p, m, lift.product_is_xp_minus_1());
        bool tower = lift.reduced(1) == bin;
        for (unsigned j = 2; j < m; ++j) tower = tower && lift.reduced(j) == lifted_qr_factors(p, j);
        check("hensel_tower", p, m, tower);
    }

    void family(u64 p, unsigned m) {
        std::optional<QrFamily> fam;
        try {
            fam = build_family(p, m);
        } catch (const error& e) {
            if (e.code() == errc::no_case_applies) {
                const Modulus mod(m);
                erratum("no_family_case", p, m, "",
                        "p in family range but p^2 = " + std::to_string(mod.mul(p, p)) + " mod 2^" +
                            std::to_string(m) + " is not +-1");
            } else if (e.code() != errc::out_of_family_range && e.code() != errc::no_valid_k) {
                check("family_build", p, m, false, e.what());
            }
            return;
        }
        const std::string tag(to_string(fam->case_tag));
        check("family_case_not_vacuous", p, m,
              fam->case_tag != FamilyCase::c11 && fam->case_tag != FamilyCase::c22, tag);
        check("family_idempotents", p, m,
              is_idempotent(fam->q_idem) && is_idempotent(fam->q_prime_idem) && is_idempotent(fam->n_idem) &&
                  is_idempotent(fam->n_prime_idem));
        for (const auto& c : structural_family_clauses(*fam))
            check("family_" + c.id, p, m, c.passed, tag + ": " + c.statement);
        for (const auto& c : stated_family_clauses(*fam))
            if (!c.passed) erratum("family_literal_clause", p, m, tag + " " + c.id, c.statement);
        findings_.push_back({{"id", "hensel_identification"},
                             {"p", p},
                             {"m", m},
                             {"case", tag},
                             {"statement", "the (p+1)/2-type Q code contains the ideal of the lifted f_Q"},
                             {"holds", fam->hensel_identified}});
        families_.insert_or_assign({p, m}, std::move(*fam));
    }

    // Skipped silently past budget unless exhaustive enumeration is required.
    bool fits(const LinearCode& c, u64 p, unsigned m, const std::string& what) {
        const unsigned l = c.log2_size();
        if (l < 63 && (u64{1} << l) <= cfg_.budget) return true;
        if (cfg_.require_exhaustive) {
            budget_hit_ = true;
            check(what, p, m, false, "2^" + std::to_string(l) + " words exceed budget");
        } else {
            skipped_.push_back({{"check", what}, {"p", p}, {"m", m}, {"log2_size", l}});
        }
        return false;
    }

    void weights(u64 p, unsigned m) {
        const LinearCode lift = code_from_polynomial(lifted_qr_factors(p, m).q_poly());
        if (fits(lift, p, m, "weight_lift_eq_binary")) {
            const WeightReport w = min_weight(lift, cfg_.budget, true);
            const unsigned bin = binary_cyclic_min_weight(binary_qr_factors(p).f_q, static_cast<unsigned>(p), cfg_.budget);
            check("weight_lift_eq_binary", p, m, w.min_weight == bin,
                  "lift " + std::to_string(w.min_weight) + ", binary " + std::to_string(bin));
        }
        auto it = families_.find({p, m});
        if (it == families_.end()) return;
        const QrFamily& f = it->second;
        const LinearCode& big = f.q.log2_size() > f.q_prime.log2_size() ? f.q : f.q_prime;
        if (fits(big, p, m, "weight_min_odd_like")) {
            const WeightReport w = min_weight_parity(big, cfg_.budget);
            check("weight_min_odd_like", p, m, w.all_min_odd_like,
                  std::to_string(w.min_odd_like_count) + "/" + std::to_string(w.min_weight_count) +
                      " minimum-weight words odd-like");
        }
    }

    VerifyOutcome finish() {
        json checks = json::array();
        u64 failed = 0;
        for (const auto& c : checks_) {
            failed += !c.passed;
            json j{{"id", c.id}, {"p", c.p}, {"passed", c.passed}};
            if (c.m) j["m"] = c.m;
            if (!c.detail.empty()) j["detail"] = c.detail;
            checks.push_back(std::move(j));
        }
        json errata = json::array();
        std::set<std::string> keys;
        for (const auto& e : errata_) {
            keys.insert(e.key());
            json j{{"id", e.id}, {"key", e.key()}, {"p", e.p}, {"detail", e.detail}};
            if (e.m) j["m"] = e.m;
            errata.push_back(std::move(j));
        }
        json expectation = nullptr;
        bool errata_ok = true;
        if (!cfg_.errata_expectation.empty()) {
            const auto want = load_errata_expectation(cfg_.errata_expectation);
            json missing = json::array(), unexpected = json::array();
            for (const auto& k : want)
                if (!keys.count(k)) missing.push_back(k);
            for (const auto& k : keys)
                if (!want.count(k)) unexpected.push_back(k);
            errata_ok = missing.empty() && unexpected.empty();
            expectation = {{"file", cfg_.errata_expectation},
                           {"matched", errata_ok},
                           {"missing", missing},
                           {"unexpected", unexpected}};
        }
        int code = exit_ok;
        if (failed || !errata_ok) code = exit_failed;
        if (budget_hit_) code = exit_budget;

        json config{{"p_list", cfg_.p_list},
                    {"m_list", cfg_.m_list},
                    {"budget", cfg_.budget},
                    {"require_exhaustive", cfg_.require_exhaustive}};
        json report{{"schema_version", schema_version},
                    {"command", "verify"},
                    {"config", config},
                    {"checks", checks},
                    {"errata", errata},
                    {"errata_expectation", expectation},
                    {"findings", findings_},
                    {"skipped", skipped_},
                    {"summary",
                     {{"checks", checks_.size()},
                      {"failed", failed},
                      {"errata", errata_.size()},
                      {"errata_matched", errata_ok},
                      {"exit_code", code}}}};
        return {std::move(report), code};
    }

    const SweepConfig& cfg_;
    std::vector<CheckResult> checks_;
    std::vector<Erratum> errata_;
    json findings_ = json::array();
    json skipped_ = json::array();
    std::map<std::pair<u64, unsigned>, QrFamily> families_;
    bool budget_hit_ = false;
};

}  // namespace detail

inline VerifyOutcome run_verify(const SweepConfig& cfg) { return detail::Sweep(cfg).run(); }

/// One line per check and erratum: kind,id,p,m,passed.
inline std::string verify_csv(const json& report) {
    std::ostringstream out;
    out << "kind,id,p,m,passed\n";
    for (const auto& c : report.at("checks"))
        out << "check," << c.at("id").get<std::string>() << ',' << c.at("p") << ',' << c.value("m", 0u) << ','
            << (c.at("passed").get<bool>() ? "true" : "false") << '\n';
    for (const auto& e : report.at("errata"))
        out << "erratum," << e.at("id").get<std::string>() << ',' << e.at("p") << ',' << e.value("m", 0u)
            << ",expected\n";
    return out.str();
}

}  // namespace qrz
