#pragma once

// Quadratic residue codes of prime length p over Z_{2^m} built from
// idempotents alpha + beta*e1 + gamma*e2.

#include <algorithm>
#include <array>
#include <future>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "qrz/lincode.hpp"
#include "qrz/modring.hpp"
#include "qrz/polyring.hpp"

namespace qrz {

/// e1 (support Q), e2 (support N) and the all-ones h = 1 + e1 + e2.
struct BasisVectors {
    ZPoly e1;
    ZPoly e2;
    ZPoly h;
};

inline BasisVectors basis_vectors(u64 p, unsigned m) {
    const QuadPartition part(p);
    const Modulus mod(m);
    ZPoly e1 = support_poly(part.residues(), p, mod);
    ZPoly e2 = support_poly(part.nonresidues(), p, mod);
    ZPoly h = ZPoly::constant(p, mod, 1) + e1 + e2;
    return {std::move(e1), std::move(e2), std::move(h)};
}

/// alpha + beta*e1 + gamma*e2 as a ring element.
inline ZPoly combine(const BasisVectors& b, u64 alpha, u64 beta, u64 gamma) {
    const Modulus& mod = b.e1.modulus();
    return ZPoly::constant(b.e1.size(), mod, alpha) + beta * b.e1 + gamma * b.e2;
}

// ---------------------------------------------------------------------------
// Product identities for e1^2, e2^2, e1*e2 and h^2.

struct IdentityCheck {
    std::string name;
    std::string formula;
    ZPoly expected;
    ZPoly actual;
    bool passed = false;
    /// A known-false alternative closed form; reported but excluded from
    /// all_passed().
    bool erratum = false;
};

struct IdentityReport {
    u64 p = 0;
    unsigned m = 0;
    u64 integer_k = 0;
    std::vector<IdentityCheck> checks;

    bool all_passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.erratum || c.passed; });
    }
};

/// Convolution products of the basis vectors compared with their closed
/// forms. For p = 8k - 1:
///   e1^2 = (2k-1)e1 + 2k e2,  e2^2 = (2k-1)e2 + 2k e1,  e1e2 = (2k-1)(1+e1+e2) + 2k.
/// For p = 8k + 1:
///   e1^2 = (2k-1)e1 + 2k e2 + 4k,  e2^2 = (2k-1)e2 + 2k e1 + 4k,  e1e2 = 2k(e1+e2).
/// The last coefficient is forced by counting: e1e2 has |Q||N| = 16k^2 terms
/// and no constant, so each of the 8k nonzero positions receives 2k. The
/// form (2k-1)(e1+e2) is kept as an erratum entry.
inline IdentityReport product_identities_report(u64 p, unsigned m) {
    const BasisVectors b = basis_vectors(p, m);
    const Modulus mod(m);
    const u64 k = integer_k(p);
    const std::size_t n = p;
    auto c = [&](u64 v) { return ZPoly::constant(n, mod, v); };

    const ZPoly e11 = ring_mul(b.e1, b.e1);
    const ZPoly e22 = ring_mul(b.e2, b.e2);
    const ZPoly e12 = ring_mul(b.e1, b.e2);
    const ZPoly hh = ring_mul(b.h, b.h);

    IdentityReport rep{p, m, k, {}};
    auto add = [&](std::string name, std::string formula, ZPoly expected, const ZPoly& actual, bool erratum = false) {
        const bool ok = expected == actual;
        rep.checks.push_back({std::move(name), std::move(formula), std::move(expected), actual, ok, erratum});
    };
    if (p % 8 == 7) {
        add("e1_squared", "(2k-1)e1 + 2k e2", (2 * k - 1) * b.e1 + (2 * k) * b.e2, e11);
        add("e2_squared", "(2k-1)e2 + 2k e1", (2 * k - 1) * b.e2 + (2 * k) * b.e1, e22);
        add("e1_e2", "(2k-1)(1+e1+e2) + 2k", (2 * k - 1) * b.h + c(2 * k), e12);
    } else {
        add("e1_squared", "(2k-1)e1 + 2k e2 + 4k", (2 * k - 1) * b.e1 + (2 * k) * b.e2 + c(4 * k), e11);
        add("e2_squared", "(2k-1)e2 + 2k e1 + 4k", (2 * k - 1) * b.e2 + (2 * k) * b.e1 + c(4 * k), e22);
        add("e1_e2", "2k(e1+e2)", (2 * k) * (b.e1 + b.e2), e12);
        add("e1_e2_odd_form", "(2k-1)(e1+e2)", (2 * k - 1) * (b.e1 + b.e2), e12, true);
    }
    add("h_squared", "p h", p * b.h, hh);
    return rep;
}

// ---------------------------------------------------------------------------
// Idempotent coefficient triples.

/// (alpha, beta, gamma) with alpha + beta*e1 + gamma*e2 idempotent in R_p and
/// beta != gamma.
class IdempotentCoeffs {
public:
    static IdempotentCoeffs make(u64 p, unsigned m, u64 alpha, u64 beta, u64 gamma) {
        const Modulus mod(m);
        IdempotentCoeffs c(p, m, mod.reduce(alpha), mod.reduce(beta), mod.reduce(gamma));
        if (c.beta_ == c.gamma_) throw error(errc::degenerate_coefficients, "beta == gamma");
        if (!is_idempotent(c.polynomial())) throw error(errc::degenerate_coefficients, "not an idempotent");
        return c;
    }

    u64 p() const noexcept { return p_; }
    unsigned m() const noexcept { return m_; }
    u64 alpha() const noexcept { return alpha_; }
    u64 beta() const noexcept { return beta_; }
    u64 gamma() const noexcept { return gamma_; }
    u64 beta_plus_gamma() const { return Modulus(m_).add(beta_, gamma_); }

    ZPoly polynomial() const { return combine(basis_vectors(p_, m_), alpha_, beta_, gamma_); }

    /// 2 alpha - (beta + gamma) = 1 mod 2^m.
    bool satisfies_trace_relation() const {
        const Modulus mod(m_);
        return mod.sub(mod.mul(2, alpha_), beta_plus_gamma()) == 1;
    }

    auto tie() const { return std::tie(alpha_, beta_, gamma_); }
    friend bool operator==(const IdempotentCoeffs& a, const IdempotentCoeffs& b) {
        return a.p_ == b.p_ && a.m_ == b.m_ && a.tie() == b.tie();
    }
    friend bool operator<(const IdempotentCoeffs& a, const IdempotentCoeffs& b) { return a.tie() < b.tie(); }

private:
    IdempotentCoeffs(u64 p, unsigned m, u64 a, u64 b, u64 g) : p_(p), m_(m), alpha_(a), beta_(b), gamma_(g) {}

    u64 p_;
    unsigned m_;
    u64 alpha_, beta_, gamma_;
};

/// The coefficient-level idempotency system, from the closed-form products:
/// p = 8k - 1:
///   a^2 + 2bc(4k-1) = a
///   b^2(2k-1) + 2k c^2 + 2ab + 2bc(2k-1) = b     (and b <-> c)
/// p = 8k + 1:
///   a^2 + 4k b^2 + 4k c^2 = a
///   b^2(2k-1) + 2k c^2 + 2ab + 2bc*2k = b          (and b <-> c)
inline bool coefficient_system_holds(u64 p, const Modulus& mod, u64 a, u64 b, u64 c) {
    const u64 k = integer_k(p);
    auto eq = [&](u64 lhs, u64 rhs) { return mod.reduce(lhs) == mod.reduce(rhs); };
    if (p % 8 == 7) {
        return eq(a * a + 2 * b * c * (4 * k - 1), a) &&
               eq(b * b * (2 * k - 1) + 2 * k * c * c + 2 * a * b + 2 * b * c * (2 * k - 1), b) &&
               eq(c * c * (2 * k - 1) + 2 * k * b * b + 2 * a * c + 2 * b * c * (2 * k - 1), c);
    }
    return eq(a * a + 4 * k * b * b + 4 * k * c * c, a) &&
           eq(b * b * (2 * k - 1) + 2 * k * c * c + 2 * a * b + 2 * b * c * 2 * k, b) &&
           eq(c * c * (2 * k - 1) + 2 * k * b * b + 2 * a * c + 2 * b * c * 2 * k, c);
}

/// Largest m solved by the exhaustive scan in solve_idempotent_system.
inline constexpr unsigned exhaustive_idempotent_limit = 6;

/// Scans all (alpha, beta, gamma) in Z_{2^m}^3. The square of a candidate is
/// assembled from the convolution products e1^2, e2^2, e1e2 (bilinearity),
/// and every hit is confirmed by a direct ring_mul. Alpha values are split
/// across workers; the result is sorted.
inline std::vector<IdempotentCoeffs> solve_idempotent_system_exhaustive(u64 p, unsigned m) {
    const BasisVectors b = basis_vectors(p, m);
    const Modulus mod(m);
    const ZPoly e11 = ring_mul(b.e1, b.e1), e22 = ring_mul(b.e2, b.e2), e12 = ring_mul(b.e1, b.e2);
    const u64 q = mod.value();

    auto scan = [&](u64 a_begin, u64 a_step) {
        std::vector<IdempotentCoeffs> found;
        std::vector<u64> sq(p), lin(p);
        for (u64 a = a_begin; a < q; a += a_step)
            for (u64 be = 0; be < q; ++be)
                for (u64 ga = 0; ga < q; ++ga) {
                    if (be == ga) continue;
                    bool ok = true;
                    for (std::size_t i = 0; i < p && ok; ++i) {
                        const u64 x = (i == 0 ? a : 0) + be * b.e1[i] + ga * b.e2[i];
                        const u64 s = (i == 0 ? a * a : 0) + 2 * a * be * b.e1[i] + 2 * a * ga * b.e2[i] +
                                      be * be * e11[i] + ga * ga * e22[i] + 2 * be * ga * e12[i];
                        ok = mod.reduce(s) == mod.reduce(x);
                    }
                    if (ok) found.push_back(IdempotentCoeffs::make(p, m, a, be, ga));
                }
        return found;
    };
    const u64 workers = std::clamp<u64>(std::thread::hardware_concurrency(), 1, q);
    std::vector<std::future<std::vector<IdempotentCoeffs>>> jobs;
    for (u64 w = 0; w < workers; ++w) jobs.push_back(std::async(std::launch::async, scan, w, workers));
    std::vector<IdempotentCoeffs> all;
    for (auto& j : jobs) {
        auto part = j.get();
        all.insert(all.end(), part.begin(), part.end());
    }
    std::sort(all.begin(), all.end());
    return all;
}

/// Solves the coefficient system mod 2 and extends every solution one binary
/// digit per coordinate per step. Final triples are confirmed by ring_mul.
inline std::vector<IdempotentCoeffs> solve_idempotent_system_lifted(u64 p, unsigned m) {
    require_qr_prime(p);
    std::vector<std::array<u64, 3>> sols;
    const Modulus two(1);
    for (u64 a = 0; a < 2; ++a)
        for (u64 b = 0; b < 2; ++b)
            for (u64 c = 0; c < 2; ++c)
                if (coefficient_system_holds(p, two, a, b, c)) sols.push_back({a, b, c});
    for (unsigned j = 1; j < m; ++j) {
        const Modulus next(j + 1);
        const u64 bit = u64{1} << j;
        std::vector<std::array<u64, 3>> lifted;
        for (const auto& s : sols)
            for (u64 d = 0; d < 8; ++d) {
                const u64 a = s[0] + ((d & 1) ? bit : 0);
                const u64 b = s[1] + ((d & 2) ? bit : 0);
                const u64 c = s[2] + ((d & 4) ? bit : 0);
                if (coefficient_system_holds(p, next, a, b, c)) lifted.push_back({a, b, c});
            }
        sols = std::move(lifted);
    }
    std::vector<IdempotentCoeffs> out;
    for (const auto& s : sols)
        if (s[1] != s[2]) out.push_back(IdempotentCoeffs::make(p, m, s[0], s[1], s[2]));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<IdempotentCoeffs> solve_idempotent_system(u64 p, unsigned m) {
    require_qr_prime(p);
    return m <= exhaustive_idempotent_limit ? solve_idempotent_system_exhaustive(p, m)
                                            : solve_idempotent_system_lifted(p, m);
}

inline IdempotentCoeffs swap_conjugate(const IdempotentCoeffs& c) {
    return IdempotentCoeffs::make(c.p(), c.m(), c.alpha(), c.gamma(), c.beta());
}

/// Reads (alpha, beta, gamma) back from a ring element, if it lies in the
/// span of 1, e1, e2.
inline std::optional<std::array<u64, 3>> decode_coeffs(const ZPoly& f) {
    const u64 p = f.size();
    const QuadPartition part(p);
    const Modulus& mod = f.modulus();
    const u64 a = f[0];
    const u64 b = f[part.residues().front()];
    const u64 c = f[part.nonresidues().front()];
    if (!(combine(basis_vectors(p, mod.exponent()), a, b, c) == f)) return std::nullopt;
    return std::array<u64, 3>{a, b, c};
}

/// e + direction * (8k-1) * h. direction -1 needs beta + gamma = 8k-1 and
/// direction +1 needs beta + gamma = -(8k-1) (mod 2^m).
inline ZPoly shift_by_h(const ZPoly& e, int direction, const FamilyParams& params) {
    const Modulus& mod = e.modulus();
    const auto coeffs = decode_coeffs(e);
    if (!coeffs) throw error(errc::degenerate_coefficients, "element is not alpha + beta e1 + gamma e2");
    const u64 s = mod.add((*coeffs)[1], (*coeffs)[2]);
    const u64 shift = params.shift();
    const u64 required = direction < 0 ? shift : mod.neg(shift);
    if (s != required)
        throw error(errc::precondition_sign_mismatch,
                    "beta + gamma = " + std::to_string(s) + " but shift direction needs " + std::to_string(required));
    const ZPoly h = basis_vectors(e.size(), mod.exponent()).h;
    return e + (direction < 0 ? mod.neg(shift) : shift) * h;
}

// ---------------------------------------------------------------------------
// The four-code family.

enum class FamilyCase { c11, c12, c21, c22 };

constexpr std::string_view to_string(FamilyCase c) {
    switch (c) {
        case FamilyCase::c11: return "C11";
        case FamilyCase::c12: return "C12";
        case FamilyCase::c21: return "C21";
        case FamilyCase::c22: return "C22";
    }
    return "?";
}

/// Side conditions of each case: sign of p relative to 8k-1, the required
/// beta + gamma (as +-p), and the required p^2 (as +-1), all mod 2^m.
struct CaseRule {
    FamilyCase tag;
    int p_sign;
    int sum_sign;
    int square_sign;
    int q_shift;  // direction applied to the unprimed codes (0 = none)
    int qp_shift;  // direction applied to the primed codes
};

inline constexpr std::array<CaseRule, 4> case_rules{{
    {FamilyCase::c11, +1, +1, -1, -1, 0},
    {FamilyCase::c12, +1, -1, +1, 0, +1},
    {FamilyCase::c21, -1, -1, +1, 0, -1},
    {FamilyCase::c22, -1, +1, -1, +1, 0},
}};

inline bool case_side_conditions(const CaseRule& r, const FamilyParams& fp) {
    const Modulus mod(fp.m);
    const u64 sq = mod.mul(fp.p, fp.p);
    return r.p_sign == fp.sign && sq == (r.square_sign > 0 ? 1 : mod.neg(1));
}

inline u64 required_sum(const CaseRule& r, const FamilyParams& fp) {
    const Modulus mod(fp.m);
    return r.sum_sign > 0 ? mod.reduce(fp.p) : mod.neg(fp.p);
}

struct QrFamily {
    FamilyParams params;
    FamilyCase case_tag = FamilyCase::c11;
    IdempotentCoeffs base;
    ZPoly q_idem, q_prime_idem, n_idem, n_prime_idem;
    LinearCode q, q_prime, n, n_prime;
    /// The (p+1)/2-type code among Q, Q' contains the ideal of the
    /// Hensel-lifted f_Q.
    bool hensel_identified = false;

    /// 8k-1 mod 2^m times h.
    ZPoly shift_h() const {
        return params.shift() * basis_vectors(params.p, params.m).h;
    }
};

namespace detail {

inline std::array<ZPoly, 4> family_idempotents(const IdempotentCoeffs& c, const CaseRule& rule,
                                               const FamilyParams& fp) {
    const ZPoly e = c.polynomial();
    const ZPoly e_swap = swap_conjugate(c).polynomial();
    auto apply = [&](const ZPoly& f, int dir) { return dir == 0 ? f : shift_by_h(f, dir, fp); };
    return {apply(e, rule.q_shift), apply(e, rule.qp_shift), apply(e_swap, rule.q_shift),
            apply(e_swap, rule.qp_shift)};
}

}  // namespace detail

/// Builds Q, Q', N, N'. Exactly one case must have satisfiable side
/// conditions. Among the idempotents meeting them, the lexicographically
/// smallest whose (p+1)/2-type code contains the ideal of the lifted f_Q is
/// used for the Q side; its swap conjugate gives the N side.
inline QrFamily build_family(u64 p, unsigned m) {
    const FamilyParams fp = family_params(p, m);
    const auto sols = solve_idempotent_system(p, m);

    std::vector<const CaseRule*> applicable;
    for (const auto& r : case_rules) {
        if (!case_side_conditions(r, fp)) continue;
        const u64 want = required_sum(r, fp);
        if (std::any_of(sols.begin(), sols.end(), [&](const auto& s) { return s.beta_plus_gamma() == want; }))
            applicable.push_back(&r);
    }
    if (applicable.empty())
        throw error(errc::no_case_applies, "no case side conditions hold for p=" + std::to_string(p) +
                                               ", m=" + std::to_string(m));
    if (applicable.size() > 1) throw error(errc::ambiguous_case, "more than one case applies");
    const CaseRule& rule = *applicable.front();
    const u64 want = required_sum(rule, fp);

    const LinearCode lift_code = code_from_polynomial(lifted_qr_factors(p, m).q_poly());
    std::optional<QrFamily> fallback;
    for (const auto& s : sols) {
        if (s.beta_plus_gamma() != want) continue;
        auto idem = detail::family_idempotents(s, rule, fp);
        QrFamily fam{fp,
                     rule.tag,
                     s,
                     idem[0],
                     idem[1],
                     idem[2],
                     idem[3],
                     code_from_polynomial(idem[0]),
                     code_from_polynomial(idem[1]),
                     code_from_polynomial(idem[2]),
                     code_from_polynomial(idem[3]),
                     false};
        const LinearCode& larger = fam.q.log2_size() >= fam.q_prime.log2_size() ? fam.q : fam.q_prime;
        fam.hensel_identified = larger.contains(lift_code);
        if (fam.hensel_identified) return fam;
        if (!fallback) fallback = std::move(fam);
    }
    return *fallback;
}

/// True when some case other than the one chosen could never be
/// constructed for these parameters because its p^2 = +-1 condition fails.
inline bool case_vacuous(FamilyCase tag, u64 p, unsigned m) {
    const Modulus mod(m);
    const u64 sq = mod.mul(p, p);
    for (const auto& r : case_rules)
        if (r.tag == tag) return sq != (r.square_sign > 0 ? 1 : mod.neg(1));
    return true;
}

// ---------------------------------------------------------------------------
// Clause checks for built families.

struct ClauseCheck {
    std::string id;
    std::string statement;
    bool passed = false;
};

/// The literal family statement for the built case, clause by clause. Cases
/// C11/C21 share one statement shape and C12/C22 the other.
inline std::vector<ClauseCheck> stated_family_clauses(const QrFamily& f) {
    const u64 p = f.params.p;
    const unsigned m = f.params.m;
    const Modulus mod(m);
    const LinearCode shift_ideal = code_from_polynomial(f.shift_h());
    const LinearCode full = full_code(p, mod);
    const unsigned big = m * static_cast<unsigned>((p + 1) / 2);
    const unsigned small = m * static_cast<unsigned>((p - 1) / 2);
    const bool unprimed_big = f.case_tag == FamilyCase::c11 || f.case_tag == FamilyCase::c21;
    const LinearCode& b_q = unprimed_big ? f.q : f.q_prime;
    const LinearCode& b_n = unprimed_big ? f.n : f.n_prime;
    const LinearCode& s_q = unprimed_big ? f.q_prime : f.q;
    const LinearCode& s_n = unprimed_big ? f.n_prime : f.n;
    const std::string B = unprimed_big ? "Q" : "Q'", BN = unprimed_big ? "N" : "N'";
    const std::string S = unprimed_big ? "Q'" : "Q", SN = unprimed_big ? "N'" : "N";

    std::vector<ClauseCheck> out;
    out.push_back({"equivalence", "Q ~ N and Q' ~ N' under some mu_u",
                   equivalent_under_mu(f.q, f.n).has_value() && equivalent_under_mu(f.q_prime, f.n_prime).has_value()});
    out.push_back({"big_intersection", B + " cap " + BN + " = ((8k-1)h)", intersect(b_q, b_n) == shift_ideal});
    out.push_back({"big_sum", B + " + " + BN + " = R_p", sum_codes(b_q, b_n) == full});
    out.push_back({"big_size", "log2|" + B + "| = log2|" + BN + "| = " + std::to_string(big),
                   b_q.log2_size() == big && b_n.log2_size() == big});
    out.push_back({"big_is_small_plus_h", B + " = " + S + " + ((8k-1)h) and " + BN + " = " + SN + " + ((8k-1)h)",
                   sum_codes(s_q, shift_ideal) == b_q && sum_codes(s_n, shift_ideal) == b_n});
    out.push_back({"small_size", "log2|" + S + "| = log2|" + SN + "| = " + std::to_string(small),
                   s_q.log2_size() == small && s_n.log2_size() == small});
    out.push_back({"small_self_orthogonal", S + " and " + SN + " are self-orthogonal", is_self_orthogonal(s_q) && is_self_orthogonal(s_n)});
    out.push_back({"big_dual_is_small", B + "^perp = " + S + " and " + BN + "^perp = " + SN, dual(b_q) == s_q && dual(b_n) == s_n});
    return out;
}

/// Statements forced by the idempotent structure for any built family: the
/// code of size 2^(m(p+1)/2) plays the role of the larger code whichever of
/// Q, Q' it is, and for p = 1 mod 8 (where -1 is a residue) duality pairs Q
/// with N instead of with itself.
inline std::vector<ClauseCheck> structural_family_clauses(const QrFamily& f) {
    const u64 p = f.params.p;
    const unsigned m = f.params.m;
    const Modulus mod(m);
    const LinearCode shift_ideal = code_from_polynomial(f.shift_h());
    const LinearCode full = full_code(p, mod);
    const unsigned big = m * static_cast<unsigned>((p + 1) / 2);
    const unsigned small = m * static_cast<unsigned>((p - 1) / 2);
    const bool q_big = f.q.log2_size() > f.q_prime.log2_size();
    const LinearCode& b_q = q_big ? f.q : f.q_prime;
    const LinearCode& b_n = q_big ? f.n : f.n_prime;
    const LinearCode& s_q = q_big ? f.q_prime : f.q;
    const LinearCode& s_n = q_big ? f.n_prime : f.n;

    std::vector<ClauseCheck> out;
    out.push_back({"equivalence", "Q ~ N and Q' ~ N'",
                   equivalent_under_mu(f.q, f.n).has_value() && equivalent_under_mu(f.q_prime, f.n_prime).has_value()});
    out.push_back({"big_intersection", "larger Q-code cap larger N-code = ((8k-1)h)", intersect(b_q, b_n) == shift_ideal});
    out.push_back({"big_sum", "larger Q-code + larger N-code = R_p", sum_codes(b_q, b_n) == full});
    out.push_back({"small_intersection", "smaller Q-code cap smaller N-code = 0", intersect(s_q, s_n).is_zero()});
    out.push_back({"sizes", "sizes are 2^(m(p+1)/2) and 2^(m(p-1)/2)",
                   b_q.log2_size() == big && b_n.log2_size() == big && s_q.log2_size() == small &&
                       s_n.log2_size() == small});
    out.push_back({"shift_sum", "larger = smaller + ((8k-1)h) on both sides",
                   sum_codes(s_q, shift_ideal) == b_q && sum_codes(s_n, shift_ideal) == b_n});
    if (p % 8 == 7) {
        out.push_back({"self_orthogonal", "smaller Q-code and N-code are self-orthogonal",
                       is_self_orthogonal(s_q) && is_self_orthogonal(s_n)});
        out.push_back({"duality", "dual(larger Q) = smaller Q, dual(larger N) = smaller N",
                       dual(b_q) == s_q && dual(b_n) == s_n});
    } else {
        out.push_back({"cross_orthogonal", "smaller Q-code is orthogonal to smaller N-code",
                       dual(s_n).contains(s_q)});
        out.push_back({"duality", "dual(larger Q) = smaller N, dual(larger N) = smaller Q",
                       dual(b_q) == s_n && dual(b_n) == s_q});
    }
    return out;
}

}  // namespace qrz
