#pragma once

// 2-adic digit expansions of p, -p, 1/p and -1/p modulo 2^m.

#include <string_view>
#include <vector>

#include "qrz/modring.hpp"

namespace qrz {

enum class PadicTarget { p, neg_p, inv_p, neg_inv_p };

constexpr std::string_view to_string(PadicTarget t) {
    switch (t) {
        case PadicTarget::p: return "p";
        case PadicTarget::neg_p: return "neg_p";
        case PadicTarget::inv_p: return "inv_p";
        case PadicTarget::neg_inv_p: return "neg_inv_p";
    }
    return "?";
}

/// Low-digit shapes: 1,1,1,* (residues = 7 mod 8) and 1,0,0,* (= 1 mod 8).
enum class DigitTemplate { low111, low100 };

struct PadicExpansion {
    unsigned m = 0;
    std::vector<u64> digits;  // digits[i] multiplies 2^i
    u64 value = 0;

    friend bool operator==(const PadicExpansion&, const PadicExpansion&) = default;
};

namespace detail {

/// The congruence a*x + b = 0 defining each target.
struct LinearCongruence {
    u64 a;
    u64 b;
};

inline LinearCongruence congruence_for(PadicTarget t, u64 p, const Modulus& mod) {
    switch (t) {
        case PadicTarget::p: return {1, mod.neg(p)};
        case PadicTarget::neg_p: return {1, mod.reduce(p)};
        case PadicTarget::inv_p: return {mod.reduce(p), mod.neg(1)};
        case PadicTarget::neg_inv_p: return {mod.reduce(p), 1};
    }
    return {1, 0};
}

}  // namespace detail

/// Solves the target's congruence mod 2, then fixes one binary digit per
/// step so that the partial sum solves it mod 2^(i+1). The derivative a is
/// odd, so exactly one digit works at each step.
inline PadicExpansion expand(PadicTarget target, u64 p, unsigned m) {
    if (p % 2 == 0) throw error(errc::not_a_unit, "p must be odd");
    const Modulus mod(m);
    const auto [a, b] = detail::congruence_for(target, p, mod);
    PadicExpansion e{m, std::vector<u64>(m, 0), 0};
    u64 x = 0;
    for (unsigned i = 0; i < m; ++i) {
        const u64 step_mask = (i + 1 == 64) ? ~u64{0} : ((u64{1} << (i + 1)) - 1);
        const u64 candidate = x | (u64{1} << i);
        if (((a * x + b) & step_mask) == 0) {
            e.digits[i] = 0;
        } else if (((a * candidate + b) & step_mask) == 0) {
            e.digits[i] = 1;
            x = candidate;
        } else {
            throw error(errc::not_a_unit, "congruence has no 2-adic digit at position " + std::to_string(i));
        }
    }
    e.value = x;
    return e;
}

/// Closed-form residue of each target; the independent route for `expand`.
inline u64 direct_residue(PadicTarget target, u64 p, unsigned m) {
    const Modulus mod(m);
    switch (target) {
        case PadicTarget::p: return mod.reduce(p);
        case PadicTarget::neg_p: return mod.neg(p);
        case PadicTarget::inv_p: return mod.inverse(mod.reduce(p));
        case PadicTarget::neg_inv_p: return mod.neg(mod.inverse(mod.reduce(p)));
    }
    return 0;
}

inline bool matches_template(const PadicExpansion& e, DigitTemplate t) {
    if (e.m < 4) throw error(errc::template_needs_m4, "digit templates need m >= 4");
    const auto& d = e.digits;
    if (t == DigitTemplate::low111) return d[0] == 1 && d[1] == 1 && d[2] == 1;
    return d[0] == 1 && d[1] == 0 && d[2] == 0;
}

/// True exactly when p = 1/p mod 2^m, i.e. p^2 = 1 mod 2^m. Matching low
/// templates alone does not imply this.
inline bool inverse_equals_self(u64 p, unsigned m) {
    const Modulus mod(m);
    return mod.mul(p, p) == 1;
}

}  // namespace qrz
