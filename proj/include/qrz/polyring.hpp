#pragma once

// The cyclic ring R_n = Z_{2^m}[x]/(x^n - 1), plain polynomial helpers over
// Z_{2^m}, the binary factorization of x^p - 1 and its Hensel lift.

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qrz/modring.hpp"

namespace qrz {

/// An element of R_n stored densely; coefficient of x^i at index i.
class ZPoly {
public:
    ZPoly(std::size_t n, Modulus mod) : mod_(mod), c_(n, 0) {
        if (n == 0) throw error(errc::shape_mismatch, "ring length must be positive");
    }

    ZPoly(std::vector<u64> coeffs, Modulus mod) : mod_(mod), c_(std::move(coeffs)) {
        if (c_.empty()) throw error(errc::shape_mismatch, "ring length must be positive");
        for (auto& x : c_) x = mod_.reduce(x);
    }

    static ZPoly constant(std::size_t n, Modulus mod, u64 value) {
        ZPoly f(n, mod);
        f.c_[0] = mod.reduce(value);
        return f;
    }

    static ZPoly monomial(std::size_t n, Modulus mod, std::size_t exponent, u64 coeff = 1) {
        ZPoly f(n, mod);
        f.c_[exponent % n] = mod.reduce(coeff);
        return f;
    }

    /// Parses "3,1,2,1" (constant term first). Missing high coefficients are
    /// zero; the length is n.
    static ZPoly parse(std::string_view text, std::size_t n, Modulus mod) {
        std::vector<u64> c;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto next = text.find(',', pos);
            if (next == std::string_view::npos) next = text.size();
            auto tok = text.substr(pos, next - pos);
            while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
            while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
            u64 v = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
                throw error(errc::parse_error, "bad coefficient '" + std::string(tok) + "'");
            c.push_back(v);
            pos = next + 1;
        }
        if (c.size() > n) throw error(errc::shape_mismatch, "more coefficients than ring length");
        c.resize(n, 0);
        return ZPoly(std::move(c), mod);
    }

    std::size_t size() const noexcept { return c_.size(); }
    const Modulus& modulus() const noexcept { return mod_; }
    const std::vector<u64>& coeffs() const noexcept { return c_; }
    u64 operator[](std::size_t i) const { return c_[i]; }
    void set(std::size_t i, u64 v) { c_[i] = mod_.reduce(v); }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](u64 x) { return x == 0; });
    }

    ZPoly& operator+=(const ZPoly& o) {
        check_shape(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = mod_.add(c_[i], o.c_[i]);
        return *this;
    }
    ZPoly& operator-=(const ZPoly& o) {
        check_shape(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = mod_.sub(c_[i], o.c_[i]);
        return *this;
    }
    ZPoly& operator*=(u64 s) {
        for (auto& x : c_) x = mod_.mul(x, s);
        return *this;
    }
    friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
    friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
    friend ZPoly operator*(u64 s, ZPoly a) { return a *= s; }
    friend ZPoly operator-(ZPoly a) {
        for (auto& x : a.c_) x = a.mod_.neg(x);
        return a;
    }
    friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.mod_ == b.mod_ && a.c_ == b.c_; }

    /// Image under Z_{2^m} -> Z_{2^j}.
    ZPoly reduced(unsigned j) const {
        const Modulus target(j);
        if (j > mod_.exponent()) throw error(errc::bad_modulus, "cannot reduce to a larger modulus");
        return ZPoly(c_, target);
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(c_[i]);
        }
        return s;
    }

    void check_shape(const ZPoly& o) const {
        if (o.size() != size() || !(o.mod_ == mod_))
            throw error(errc::shape_mismatch, "ring elements differ in length or modulus");
    }

private:
    Modulus mod_;
    std::vector<u64> c_;
};

/// Cyclic convolution: c_t = sum over i + j = t (mod n) of a_i b_j.
inline ZPoly ring_mul(const ZPoly& a, const ZPoly& b) {
    a.check_shape(b);
    const std::size_t n = a.size();
    std::vector<u64> c(n, 0);
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        std::size_t t = i;
        for (std::size_t j = 0; j < n; ++j) {
            c[t] += x[i] * y[j];
            if (++t == n) t = 0;
        }
    }
    return ZPoly(std::move(c), a.modulus());
}

inline bool is_idempotent(const ZPoly& f) { return ring_mul(f, f) == f; }

/// Coordinate permutation i -> a*i mod n; mu_map(f, n-1) is f(x^{-1}).
inline ZPoly mu_map(const ZPoly& f, u64 a) {
    const std::size_t n = f.size();
    if (gcd(a % n, n) != 1 && n > 1) throw error(errc::not_a_unit, std::to_string(a) + " is not a unit mod n");
    ZPoly out(n, f.modulus());
    for (std::size_t i = 0; i < n; ++i) out.set((a % n) * i % n, f[i]);
    return out;
}

/// x^s * f, the cyclic shift by s places.
inline ZPoly cyclic_shift(const ZPoly& f, std::size_t s) {
    const std::size_t n = f.size();
    ZPoly out(n, f.modulus());
    for (std::size_t i = 0; i < n; ++i) out.set((i + s) % n, f[i]);
    return out;
}

// ---------------------------------------------------------------------------
// Plain (non-cyclic) polynomials over Z_{2^m}, low degree first, kept trimmed.

namespace poly {

using Poly = std::vector<u64>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly normalized(Poly a, const Modulus& mod) {
    for (auto& x : a) x = mod.reduce(x);
    trim(a);
    return a;
}

inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline Poly add(const Poly& a, const Poly& b, const Modulus& mod) {
    Poly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    return normalized(std::move(c), mod);
}

inline Poly sub(const Poly& a, const Poly& b, const Modulus& mod) {
    Poly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    return normalized(std::move(c), mod);
}

inline Poly mul(const Poly& a, const Poly& b, const Modulus& mod) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return normalized(std::move(c), mod);
}

/// Division by a polynomial whose leading coefficient is a unit.
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, const Modulus& mod) {
    if (b.empty()) throw error(errc::not_a_unit, "division by zero polynomial");
    const u64 inv = mod.inverse(b.back());
    Poly r = normalized(a, mod);
    if (r.size() < b.size()) return {{}, r};
    Poly q(r.size() - b.size() + 1, 0);
    for (int i = degree(r); i >= degree(b); --i) {
        const u64 coef = mod.mul(r[i], inv);
        if (coef == 0) continue;
        const std::size_t shift = static_cast<std::size_t>(i - degree(b));
        q[shift] = coef;
        for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = mod.sub(r[shift + j], mod.mul(coef, b[j]));
    }
    trim(r);
    trim(q);
    return {q, r};
}

/// Extended Euclid over GF(2): returns (g, s, t) with s*a + t*b = g.
struct Bezout {
    Poly gcd, s, t;
};

inline Bezout ext_gcd_gf2(const Poly& a, const Poly& b) {
    const Modulus two(1);
    Poly r0 = normalized(a, two), r1 = normalized(b, two);
    Poly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1, two);
        r0 = std::exchange(r1, r);
        s0 = std::exchange(s1, sub(s0, mul(q, s1, two), two));
        t0 = std::exchange(t1, sub(t0, mul(q, t1, two), two));
    }
    return {r0, s0, t0};
}

inline Poly from_ring(const ZPoly& f) { return normalized(f.coeffs(), f.modulus()); }

inline ZPoly to_ring(const Poly& a, std::size_t n, const Modulus& mod) {
    std::vector<u64> c(n, 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i % n] += a[i];
    return ZPoly(std::move(c), mod);
}

/// x^n - 1 over Z_{2^m}.
inline Poly x_pow_minus_one(std::size_t n, const Modulus& mod) {
    Poly f(n + 1, 0);
    f[0] = mod.neg(1);
    f[n] = 1;
    return f;
}

/// Orders polynomials as binary integers with x^i at bit i (higher degree
/// compares first).
inline bool less_as_integer(const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

}  // namespace poly

// ---------------------------------------------------------------------------

/// Cyclotomic cosets of 2 modulo n, each sorted, ordered by representative.
inline std::vector<std::vector<u64>> cyclotomic_cosets(u64 n) {
    std::vector<bool> seen(n, false);
    std::vector<std::vector<u64>> cosets;
    for (u64 r = 0; r < n; ++r) {
        if (seen[r]) continue;
        std::vector<u64> c;
        for (u64 x = r; !seen[x]; x = 2 * x % n) {
            seen[x] = true;
            c.push_back(x);
        }
        std::sort(c.begin(), c.end());
        cosets.push_back(std::move(c));
    }
    return cosets;
}

/// x^p - 1 = f_unit * f_q * f_n over Z_{2^m}. Factors are stored in
/// length-p ring elements since their degree is below p.
struct FactorSet {
    u64 p = 0;
    unsigned m = 0;
    poly::Poly f_unit;
    poly::Poly f_q;
    poly::Poly f_n;

    Modulus modulus() const { return Modulus(m); }
    ZPoly unit_poly() const { return poly::to_ring(f_unit, p, modulus()); }
    ZPoly q_poly() const { return poly::to_ring(f_q, p, modulus()); }
    ZPoly n_poly() const { return poly::to_ring(f_n, p, modulus()); }

    /// Full-degree product compared with x^p - 1 before any cyclic reduction.
    bool product_is_xp_minus_1() const {
        const Modulus mod = modulus();
        return poly::mul(poly::mul(f_unit, f_q, mod), f_n, mod) == poly::x_pow_minus_one(p, mod);
    }

    FactorSet reduced(unsigned j) const {
        const Modulus mod(j);
        return {p, j, poly::normalized(f_unit, mod), poly::normalized(f_q, mod), poly::normalized(f_n, mod)};
    }

    friend bool operator==(const FactorSet&, const FactorSet&) = default;
};

/// Residue-support polynomial of a set of exponents, coefficients 0/1.
inline ZPoly support_poly(std::span<const u64> exps, std::size_t n, const Modulus& mod) {
    ZPoly f(n, mod);
    for (u64 i : exps) f.set(i % n, 1);
    return f;
}

/// The binary factors x - 1, f_Q and f_N of x^p - 1.
///
/// The binary idempotent e1 vanishes on exactly one of the two root classes,
/// so gcd(e1, x^p - 1) is one QR factor (times x - 1 when |Q| is even). The
/// implicit primitive root is fixed by naming f_Q the factor that is smaller
/// as a binary integer; swapping the root for a nonresidue power swaps the
/// labels, so either naming is attainable.
inline FactorSet binary_qr_factors(u64 p) {
    const QuadPartition part(p);
    const Modulus two(1);
    for (const auto& c : cyclotomic_cosets(p)) {
        if (c.front() == 0) continue;
        const bool in_q = part.is_residue(c.front());
        for (u64 x : c)
            if (part.is_residue(x) != in_q)
                throw error(errc::bad_residue_class, "cyclotomic coset straddles Q and N");
    }
    const poly::Poly xp1 = poly::x_pow_minus_one(p, two);
    const poly::Poly unit{1, 1};
    auto [phi, rem] = poly::divmod(xp1, unit, two);
    const poly::Poly e1 = poly::from_ring(support_poly(part.residues(), p, two));
    poly::Poly g = poly::ext_gcd_gf2(e1, phi).gcd;
    auto [other, r2] = poly::divmod(phi, g, two);
    if (!r2.empty() || poly::degree(g) != static_cast<int>((p - 1) / 2))
        throw error(errc::not_coprime, "idempotent gcd did not isolate a QR factor");
    if (poly::less_as_integer(other, g)) std::swap(g, other);
    return {p, 1, unit, g, other};
}

namespace detail {

/// One quadratic Hensel step: f = g*h mod M with s*g + t*h = 1 mod M becomes
/// valid modulo `next` (at most M^2). h stays monic.
inline void hensel_step(const poly::Poly& f, poly::Poly& g, poly::Poly& h, poly::Poly& s, poly::Poly& t,
                        const Modulus& next) {
    using namespace poly;
    const Poly e = sub(f, mul(g, h, next), next);
    auto [q, r] = divmod(mul(s, e, next), h, next);
    Poly g2 = add(g, add(mul(t, e, next), mul(q, g, next), next), next);
    Poly h2 = add(h, r, next);
    const Poly b = sub(add(mul(s, g2, next), mul(t, h2, next), next), Poly{1}, next);
    auto [c, d] = divmod(mul(s, b, next), h2, next);
    s = sub(s, d, next);
    t = sub(t, add(mul(t, b, next), mul(c, g2, next), next), next);
    g = std::move(g2);
    h = std::move(h2);
}

/// Lifts f = g*h (mod 2, g and h monic and coprime) to mod 2^m.
inline std::pair<poly::Poly, poly::Poly> hensel_lift_pair(const poly::Poly& f_exact, poly::Poly g, poly::Poly h,
                                                          unsigned m) {
    auto bez = poly::ext_gcd_gf2(g, h);
    if (bez.gcd != poly::Poly{1}) throw error(errc::not_coprime, "seed factors share a factor mod 2");
    poly::Poly s = bez.s, t = bez.t;
    for (unsigned prec = 1; prec < m;) {
        prec = std::min(2 * prec, m);
        const Modulus next(prec);
        hensel_step(poly::normalized(f_exact, next), g, h, s, t, next);
    }
    return {g, h};
}

}  // namespace detail

/// Lifts the binary factorization to Z_{2^m}. x - 1 is split off first
/// against its cofactor, then the cofactor is split into f_q * f_n; each
/// stage doubles the valid modulus per step. The result is checked by full
/// multiplication.
inline FactorSet hensel_lift_factors(const FactorSet& seed, unsigned m_target) {
    if (seed.m != 1) throw error(errc::bad_modulus, "seed factorization must be binary");
    const Modulus mod(m_target);
    if (m_target == 1) return seed;
    const poly::Poly f = poly::x_pow_minus_one(seed.p, mod);
    const Modulus two(1);
    const poly::Poly rest_seed = poly::mul(seed.f_q, seed.f_n, two);
    auto [unit, rest] = detail::hensel_lift_pair(f, seed.f_unit, rest_seed, m_target);
    auto [fq, fn] = detail::hensel_lift_pair(rest, seed.f_q, seed.f_n, m_target);
    FactorSet out{seed.p, m_target, unit, fq, fn};
    if (!out.product_is_xp_minus_1() || out.reduced(1) != seed)
        throw error(errc::not_coprime, "Hensel lift failed verification");
    return out;
}

inline FactorSet lifted_qr_factors(u64 p, unsigned m) { return hensel_lift_factors(binary_qr_factors(p), m); }

/// The idempotent generating the same ideal as f, for f dividing x^n - 1
/// with a cofactor coprime to it (n odd). Starts from the binary idempotent
/// s*f where s*f + t*g = 1 mod 2, then iterates e <- 3e^2 - 2e^3.
inline ZPoly idempotent_from_generator(const ZPoly& f) {
    const Modulus& mod = f.modulus();
    const std::size_t n = f.size();
    poly::Poly fp = poly::from_ring(f);
    if (fp.empty()) throw error(errc::not_a_divisor, "zero generator");
    if (!mod.is_unit(fp.back())) throw error(errc::not_a_divisor, "generator has non-unit leading coefficient");
    const u64 inv = mod.inverse(fp.back());
    for (auto& c : fp) c = mod.mul(c, inv);
    auto [cof, rem] = poly::divmod(poly::x_pow_minus_one(n, mod), fp, mod);
    if (!rem.empty()) throw error(errc::not_a_divisor, "generator does not divide x^n - 1");
    const Modulus two(1);
    auto bez = poly::ext_gcd_gf2(fp, cof);
    if (bez.gcd != poly::Poly{1})
        throw error(errc::not_coprime_cofactor, "generator and cofactor share a factor mod 2");
    const ZPoly seed2 = poly::to_ring(poly::mul(bez.s, poly::normalized(fp, two), two), n, two);
    // Re-embed the 0/1 coefficients mod 2 into Z_{2^m}.
    ZPoly e(seed2.coeffs(), mod);
    for (int iter = 0; iter < 64 && !is_idempotent(e); ++iter) {
        const ZPoly e2 = ring_mul(e, e);
        const ZPoly e3 = ring_mul(e2, e);
        e = 3 * e2 - 2 * e3;
    }
    if (!is_idempotent(e)) throw error(errc::not_coprime_cofactor, "idempotent iteration did not converge");
    return e;
}

}  // namespace qrz
