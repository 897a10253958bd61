#pragma once

// Arithmetic in Z/2^m and the quadratic-residue combinatorics of an odd prime.

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qrz/error.hpp"

namespace qrz {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// The ring Z/2^m. Because 2^m divides 2^64, wrapping uint64 arithmetic
/// followed by a mask is exact, so no wide multiplication is needed.
class Modulus {
public:
    static constexpr unsigned max_exponent = 62;

    explicit Modulus(unsigned m) : m_(m) {
        if (m < 1 || m > max_exponent)
            throw error(errc::bad_modulus, "exponent m=" + std::to_string(m) + " outside [1, 62]");
        mask_ = (u64{1} << m) - 1;
    }

    unsigned exponent() const noexcept { return m_; }
    u64 value() const noexcept { return mask_ + 1; }
    u64 mask() const noexcept { return mask_; }

    u64 reduce(u64 x) const noexcept { return x & mask_; }
    u64 reduce_signed(i64 x) const noexcept { return static_cast<u64>(x) & mask_; }
    u64 add(u64 a, u64 b) const noexcept { return (a + b) & mask_; }
    u64 sub(u64 a, u64 b) const noexcept { return (a - b) & mask_; }
    u64 mul(u64 a, u64 b) const noexcept { return (a * b) & mask_; }
    u64 neg(u64 a) const noexcept { return (u64{0} - a) & mask_; }

    /// 2-adic valuation of a residue; the zero residue has valuation m.
    unsigned valuation(u64 a) const noexcept {
        a &= mask_;
        if (a == 0) return m_;
        return static_cast<unsigned>(__builtin_ctzll(a));
    }

    bool is_unit(u64 a) const noexcept { return (a & 1) == 1; }

    /// Inverse of an odd residue by Newton iteration x <- x(2 - ax).
    u64 inverse(u64 a) const {
        if (!is_unit(a)) throw error(errc::not_a_unit, "even residue has no inverse mod 2^m");
        u64 x = 1;
        for (int i = 0; i < 7; ++i) x *= 2 - a * x;
        return x & mask_;
    }

    u64 pow(u64 base, u64 e) const noexcept {
        u64 r = 1 & mask_;
        base &= mask_;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const Modulus& a, const Modulus& b) { return a.m_ == b.m_; }

private:
    unsigned m_;
    u64 mask_;
};

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (u64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

inline u64 powmod(u64 base, u64 e, u64 mod) {
    unsigned __int128 r = 1 % mod, b = base % mod;
    while (e) {
        if (e & 1) r = r * b % mod;
        b = b * b % mod;
        e >>= 1;
    }
    return static_cast<u64>(r);
}

inline u64 gcd(u64 a, u64 b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

/// Throws unless p is a prime congruent to +-1 mod 8.
inline void require_qr_prime(u64 p) {
    if (!is_prime(p) || p == 2) throw error(errc::not_prime, std::to_string(p) + " is not an odd prime");
    if (p % 8 != 1 && p % 8 != 7)
        throw error(errc::bad_residue_class, std::to_string(p) + " mod 8 = " + std::to_string(p % 8));
}

enum class ResidueClass : std::int8_t { zero = 0, quadratic = 1, nonresidue = -1 };

/// Residues Q and nonresidues N of {1, ..., p-1}; 0 belongs to neither.
class QuadPartition {
public:
    explicit QuadPartition(u64 p) : p_(p), cls_(p, ResidueClass::nonresidue) {
        require_qr_prime(p);
        cls_[0] = ResidueClass::zero;
        std::vector<bool> square(p, false);
        for (u64 i = 1; i < p; ++i) square[i * i % p] = true;
        for (u64 i = 1; i < p; ++i) {
            if (square[i]) {
                cls_[i] = ResidueClass::quadratic;
                q_.push_back(i);
            } else {
                n_.push_back(i);
            }
        }
    }

    u64 p() const noexcept { return p_; }
    const std::vector<u64>& residues() const noexcept { return q_; }
    const std::vector<u64>& nonresidues() const noexcept { return n_; }

    ResidueClass classify(u64 i) const noexcept { return cls_[i % p_]; }
    bool is_residue(u64 i) const noexcept { return classify(i) == ResidueClass::quadratic; }
    bool is_nonresidue(u64 i) const noexcept { return classify(i) == ResidueClass::nonresidue; }

private:
    u64 p_;
    std::vector<u64> q_;
    std::vector<u64> n_;
    std::vector<ResidueClass> cls_;
};

inline QuadPartition quad_partition(u64 p) { return QuadPartition(p); }

/// Number of ordered pairs (i, j) in s1 x s2 with i + j = 0 mod p.
inline u64 count_zero_sums(std::span<const u64> s1, std::span<const u64> s2, u64 p) {
    std::vector<u64> mult(p, 0);
    for (u64 j : s2) ++mult[j % p];
    u64 total = 0;
    for (u64 i : s1) total += mult[(p - i % p) % p];
    return total;
}

struct ClassCounts {
    u64 quadratic = 0;
    u64 nonresidue = 0;
    u64 zero = 0;

    friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

/// Classifies every i + j (j in s) as residue, nonresidue or zero mod p.
inline ClassCounts residue_class_counts(u64 i, std::span<const u64> s, const QuadPartition& part) {
    ClassCounts c;
    for (u64 j : s) {
        switch (part.classify(i + j)) {
            case ResidueClass::quadratic: ++c.quadratic; break;
            case ResidueClass::nonresidue: ++c.nonresidue; break;
            case ResidueClass::zero: ++c.zero; break;
        }
    }
    return c;
}

/// The k of p = 8k - 1 or p = 8k + 1 over the integers. Distinct from
/// FamilyParams::k, which is defined by a congruence mod 2^m.
inline u64 integer_k(u64 p) { return p % 8 == 7 ? (p + 1) / 8 : (p - 1) / 8; }

/// p = sign * (8k - 1) mod 2^m with 1 <= k <= 2^(m-3) - 1.
struct FamilyParams {
    u64 p = 0;
    unsigned m = 0;
    u64 k = 0;
    int sign = 1;

    /// The residue 8k - 1 mod 2^m.
    u64 shift() const { return Modulus(m).reduce(8 * k - 1); }
    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

inline FamilyParams family_params(u64 p, unsigned m) {
    require_qr_prime(p);
    if (m < 4) throw error(errc::bad_modulus, "family parameters need m >= 4");
    const Modulus mod(m);
    const u64 r = mod.reduce(p);
    if (r == 1 || r == mod.mask())
        throw error(errc::out_of_family_range,
                    std::to_string(p) + " = +-1 mod 2^" + std::to_string(m));
    const u64 k_max = (u64{1} << (m - 3)) - 1;
    for (int sign : {1, -1}) {
        for (u64 k = 1; k <= k_max; ++k) {
            const u64 target = sign > 0 ? mod.reduce(8 * k - 1) : mod.neg(8 * k - 1);
            if (target == r) return FamilyParams{p, m, k, sign};
        }
    }
    throw error(errc::no_valid_k, "no k with p = +-(8k-1) mod 2^" + std::to_string(m));
}

}  // namespace qrz
