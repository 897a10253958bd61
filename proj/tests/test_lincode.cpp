#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qrz/binary_weight.hpp"
#include "qrz/io.hpp"
#include "qrz/lincode.hpp"
#include "qrz/qr.hpp"

using namespace qrz;

namespace {

std::set<u64> span_of(const LinearCode& c) { return oracle::span(c.rows(), c.length(), c.m()); }

LinearCode random_code(std::mt19937_64& rng, std::size_t n, unsigned m, std::size_t rows) {
    auto r = oracle::random_rows(rng, rows, n, m);
    // Sprinkle in even multiples so non-free modules show up.
    if (!r.empty() && rng() % 2)
        for (auto& x : r.front()) x = (x << (1 + rng() % m)) & ((u64{1} << m) - 1);
    return canonical_form(r, n, Modulus(m));
}

const LinearCode& family74_qprime() {
    static const QrFamily f = build_family(7, 4);
    return f.q_prime;
}

}  // namespace

TEST(CodeFromPolynomial, Examples) {
    const Modulus mod(4);
    EXPECT_EQ(code_from_polynomial(ZPoly::constant(7, mod, 1)).log2_size(), 28u);
    EXPECT_EQ(code_from_polynomial(ZPoly::constant(7, mod, 1)), full_code(7, mod));
    EXPECT_EQ(code_from_polynomial(basis_vectors(7, 4).h).log2_size(), 4u);
    EXPECT_EQ(code_from_polynomial(lifted_qr_factors(7, 4).q_poly()).log2_size(), 16u);
}

TEST(CanonicalForm, Basics) {
    const Modulus mod(3);
    std::vector<Row> id{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    EXPECT_EQ(canonical_form(id, 3, mod).rows(), id);
    const LinearCode c = canonical_form({{1, 2, 3}, {2, 4, 6}}, 3, mod);
    EXPECT_EQ(c.rows().size(), 1u);
    EXPECT_EQ(c.log2_size(), 3u);
    EXPECT_TRUE(canonical_form({{0, 0, 0}}, 3, mod).is_zero());
}

TEST(CanonicalForm, RandomMutualMembership) {
    std::mt19937_64 rng(8);
    const Modulus mod(4);
    for (int t = 0; t < 200; ++t) {
        const auto rows = oracle::random_rows(rng, 5, 7, 4);
        const LinearCode c = canonical_form(rows, 7, mod);
        for (const auto& r : rows) EXPECT_TRUE(c.contains(r));
        const LinearCode again = canonical_form(c.rows(), 7, mod);
        EXPECT_EQ(again, c);
        for (std::size_t j = 0; j < c.rows().size(); ++j) {
            const u64 piv = c.rows()[j][c.pivots()[j]];
            EXPECT_EQ(piv & (piv - 1), 0u) << "pivot is not a power of two";
            if (j) EXPECT_LT(c.pivots()[j - 1], c.pivots()[j]);
        }
    }
}

TEST(CanonicalForm, EqualSpansGiveEqualMatrices) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 100; ++t) {
        const auto rows = oracle::random_rows(rng, 3, 5, 3);
        std::vector<Row> mixed = rows;
        for (std::size_t i = 0; i < 5; ++i) mixed[1][i] = (mixed[1][i] + 3 * rows[0][i] + 5 * rows[2][i]) & 7;
        std::reverse(mixed.begin(), mixed.end());
        EXPECT_EQ(canonical_form(rows, 5, Modulus(3)), canonical_form(mixed, 5, Modulus(3)));
    }
}

TEST(Cardinality, Examples) {
    const Modulus mod(4);
    EXPECT_EQ(cardinality_log2(full_code(7, mod)), 28u);
    EXPECT_EQ(cardinality_log2(code_from_polynomial(basis_vectors(7, 4).h)), 4u);
    EXPECT_EQ(cardinality_log2(build_family(7, 4).q), 12u);
}

TEST(Dual, Examples) {
    const Modulus mod(4);
    EXPECT_TRUE(dual(full_code(7, mod)).is_zero());
    EXPECT_EQ(dual(zero_code(7, mod)), full_code(7, mod));
    const QrFamily f = build_family(7, 4);
    EXPECT_EQ(dual(f.q_prime), f.q);
    EXPECT_EQ(dual(f.n_prime), f.n);
}

TEST(Dual, InvolutionAndSizes) {
    std::mt19937_64 rng(10);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + rng() % 9;
        const unsigned m = 1 + rng() % 5;
        const LinearCode c = random_code(rng, n, m, rng() % 4);
        const LinearCode d = dual(c);
        EXPECT_EQ(dual(d), c);
        EXPECT_EQ(c.log2_size() + d.log2_size(), m * n);
        for (const auto& r : c.rows())
            for (const auto& s : d.rows()) EXPECT_EQ(inner_product(r, s, c.modulus()), 0u);
    }
}

TEST(IntersectSum, Basics) {
    std::mt19937_64 rng(11);
    const LinearCode c = random_code(rng, 6, 3, 3);
    EXPECT_EQ(intersect(c, c), c);
    EXPECT_EQ(sum_codes(c, zero_code(6, Modulus(3))), c);
    EXPECT_THROW(intersect(c, zero_code(5, Modulus(3))), error);
    EXPECT_THROW(sum_codes(c, zero_code(6, Modulus(2))), error);
}

TEST(IntersectSum, CountingIdentity) {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + rng() % 8;
        const unsigned m = 1 + rng() % 4;
        const LinearCode a = random_code(rng, n, m, rng() % 4), b = random_code(rng, n, m, rng() % 4);
        const LinearCode i = intersect(a, b), s = sum_codes(a, b);
        EXPECT_EQ(i.log2_size() + s.log2_size(), a.log2_size() + b.log2_size());
        EXPECT_TRUE(a.contains(i) && b.contains(i));
        EXPECT_TRUE(s.contains(a) && s.contains(b));
    }
}

TEST(IntersectSum, FamilySevenModSixteen) {
    const QrFamily f = build_family(7, 4);
    const LinearCode shift = code_from_polynomial(f.shift_h());
    EXPECT_EQ(intersect(f.q_prime, f.n_prime), shift);
    EXPECT_EQ(shift.log2_size(), 4u);
    EXPECT_EQ(sum_codes(f.q_prime, f.n_prime), full_code(7, Modulus(4)));
    EXPECT_EQ(sum_codes(f.q, shift), f.q_prime);
    EXPECT_EQ(intersect(f.q_prime, f.n_prime), code_from_polynomial(ring_mul(f.q_prime_idem, f.n_prime_idem)));
    const ZPoly sum_idem = f.q_prime_idem + f.n_prime_idem - ring_mul(f.q_prime_idem, f.n_prime_idem);
    EXPECT_EQ(sum_codes(f.q_prime, f.n_prime), code_from_polynomial(sum_idem));
}

TEST(SelfOrthogonal, Examples) {
    const Modulus mod(4);
    EXPECT_TRUE(is_self_orthogonal(zero_code(7, mod)));
    EXPECT_FALSE(is_self_orthogonal(full_code(7, mod)));
    const QrFamily f = build_family(7, 4);
    EXPECT_TRUE(is_self_orthogonal(f.q));
    EXPECT_TRUE(is_self_orthogonal(f.n));
    EXPECT_FALSE(is_self_orthogonal(f.q_prime));
}

TEST(MinWeight, Examples) {
    const WeightReport lift = min_weight(code_from_polynomial(lifted_qr_factors(7, 4).q_poly()));
    EXPECT_TRUE(lift.enumerated);
    EXPECT_EQ(lift.min_weight, 3u);
    EXPECT_EQ(lift.words_examined, u64{1} << 16);
    const WeightReport bin17 = min_weight(code_from_polynomial(binary_qr_factors(17).q_poly()));
    EXPECT_EQ(bin17.min_weight, 5u);
    EXPECT_EQ(bin17.words_examined, u64{1} << 9);
    EXPECT_EQ(min_weight(code_from_polynomial(basis_vectors(7, 4).h)).min_weight, 7u);
}

TEST(MinWeight, ErrorsAndBudget) {
    try {
        min_weight(zero_code(7, Modulus(4)));
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::no_nonzero_words);
    }
    const LinearCode lift = code_from_polynomial(lifted_qr_factors(7, 4).q_poly());
    try {
        min_weight(lift, 1000, true);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::budget_exceeded);
    }
    const WeightReport bound = min_weight(lift, 1000);
    EXPECT_FALSE(bound.enumerated);
    EXPECT_GE(bound.min_weight, 3u);
    EXPECT_LE(bound.min_weight, 7u);
}

TEST(MinWeight, AgreesWithNaiveEnumerator) {
    std::mt19937_64 rng(13);
    int compared = 0;
    while (compared < 150) {
        const std::size_t n = 2 + rng() % 7;
        const unsigned m = 1 + rng() % 3;
        const LinearCode c = random_code(rng, n, m, 1 + rng() % 3);
        if (c.is_zero() || c.log2_size() > 16) continue;
        const WeightReport w = min_weight(c);
        const oracle::Weight o = oracle::min_weight_tuples(c.rows(), n, m);
        EXPECT_EQ(w.min_weight, o.min_weight);
        EXPECT_EQ(w.min_weight_count, o.count);
        EXPECT_EQ(w.min_odd_like_count, o.odd_like);
        ++compared;
    }
}

TEST(MinWeight, LiftsKeepBinaryMinimumWeight) {
    for (u64 p : {7u, 17u}) {
        const unsigned bin = binary_cyclic_min_weight(binary_qr_factors(p).f_q, static_cast<unsigned>(p), 1u << 20);
        for (unsigned m : {2u, 3u, 4u}) {
            const LinearCode c = code_from_polynomial(lifted_qr_factors(p, m).q_poly());
            if (c.log2_size() > 20) continue;  // beyond the default budget
            EXPECT_EQ(min_weight(c, default_weight_budget, true).min_weight, bin) << p << " " << m;
        }
    }
}

TEST(BinaryWeight, AgreesWithDivisionScan) {
    for (u64 p : {7u, 17u, 23u}) {
        const poly::Poly g = binary_qr_factors(p).f_q;
        u64 mask = 0;
        for (std::size_t i = 0; i < g.size(); ++i) mask |= (g[i] & 1) << i;
        EXPECT_EQ(binary_cyclic_min_weight(g, static_cast<unsigned>(p), 1u << 24),
                  oracle::binary_min_weight_by_division(mask, static_cast<unsigned>(p)));
    }
}

TEST(ExtendPuncture, Examples) {
    std::mt19937_64 rng(14);
    for (int t = 0; t < 50; ++t) {
        const LinearCode c = random_code(rng, 6, 3, 3);
        const LinearCode e = extend(c);
        EXPECT_EQ(e.length(), 7u);
        for (const auto& r : e.rows()) EXPECT_TRUE(is_even_like(r, e.modulus()));
        EXPECT_EQ(puncture(e, 6), c);
        EXPECT_EQ(e.log2_size(), c.log2_size());
    }
    const LinearCode ext = extend(family74_qprime());
    EXPECT_EQ(ext.length(), 8u);
    EXPECT_EQ(ext.log2_size(), 16u);
    try {
        puncture(ext, 8);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::bad_position);
    }
}

TEST(EvenLike, Examples) {
    const Modulus mod(4);
    EXPECT_TRUE(is_even_like(std::vector<u64>(7, 0), mod));
    EXPECT_FALSE(is_even_like(std::vector<u64>(7, 1), mod));
    EXPECT_TRUE(is_even_like(std::vector<u64>{1, 1, 2, 12, 0, 0, 0}, mod));
}

TEST(MinWeightParity, Examples) {
    const WeightReport q = min_weight_parity(family74_qprime());
    EXPECT_TRUE(q.all_min_odd_like);
    EXPECT_EQ(q.min_weight, 3u);

    // ideal(h): the words s*h, s = 1..15, odd-like iff 7s != 0 mod 16.
    const WeightReport h = min_weight_parity(code_from_polynomial(basis_vectors(7, 4).h));
    u64 odd = 0;
    for (u64 s = 1; s < 16; ++s) odd += (7 * s) % 16 != 0;
    EXPECT_EQ(h.min_weight, 7u);
    EXPECT_EQ(h.min_weight_count, 15u);
    EXPECT_EQ(h.min_odd_like_count, odd);
    EXPECT_THROW(min_weight_parity(zero_code(7, Modulus(4))), error);
}

TEST(Equivalence, Examples) {
    const QrFamily f = build_family(7, 4);
    EXPECT_EQ(equivalent_under_mu(f.q, f.q), std::optional<u64>(1));
    const auto u = equivalent_under_mu(f.q, f.n);
    ASSERT_TRUE(u.has_value());
    EXPECT_TRUE(QuadPartition(7).is_nonresidue(*u));
    EXPECT_FALSE(equivalent_under_mu(f.q, code_from_polynomial(basis_vectors(7, 4).h)).has_value());
}

TEST(Cyclicity, ShiftsStayInsideAndMultipliersMoveOut) {
    const LinearCode c = code_from_polynomial(lifted_qr_factors(7, 3).q_poly());
    for (const auto& r : c.rows()) {
        const ZPoly f(r, c.modulus());
        for (std::size_t s = 1; s < 7; ++s) EXPECT_TRUE(c.contains(cyclic_shift(f, s).coeffs()));
    }
    EXPECT_EQ(permute_by_multiplier(c, 2), c);
    EXPECT_NE(permute_by_multiplier(c, 3), c);
}

TEST(Json, RoundTrip) {
    const LinearCode c = build_family(7, 4).q;
    const json j = to_json(c);
    EXPECT_EQ(j.at("n"), 7);
    EXPECT_EQ(j.at("m"), 4);
    EXPECT_EQ(code_from_json(j), c);
}

TEST(OracleEquivalence, SmallRandomCodes) {
    std::mt19937_64 rng(15);
    for (int t = 0; t < 120; ++t) {
        const std::size_t n = 1 + rng() % 6;
        const unsigned m = 1 + rng() % 3;
        const auto ra = oracle::random_rows(rng, rng() % 3, n, m), rb = oracle::random_rows(rng, rng() % 3, n, m);
        const LinearCode a = canonical_form(ra, n, Modulus(m)), b = canonical_form(rb, n, Modulus(m));
        EXPECT_EQ(span_of(a), oracle::span(ra, n, m));
        EXPECT_EQ(span_of(dual(a)), oracle::dual(ra, n, m));
        EXPECT_EQ(span_of(intersect(a, b)), oracle::intersection(oracle::span(ra, n, m), oracle::span(rb, n, m)));
    }
}
