#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "qrz/qr.hpp"

using namespace qrz;

namespace {
std::set<std::array<u64, 3>> brute_idempotents(u64 p, unsigned m) {
    const BasisVectors b = basis_vectors(p, m);
    std::set<std::array<u64, 3>> out;
    for (u64 a = 0; a < (u64{1} << m); ++a)
        for (u64 be = 0; be < (u64{1} << m); ++be)
            for (u64 ga = 0; ga < (u64{1} << m); ++ga) {
                if (be == ga) continue;
                const ZPoly f = combine(b, a, be, ga);
                if (oracle::cyclic_product(f.coeffs(), f.coeffs(), m) == f.coeffs()) out.insert({a, be, ga});
            }
    return out;
}

std::set<std::array<u64, 3>> as_set(const std::vector<IdempotentCoeffs>& v) {
    std::set<std::array<u64, 3>> s;
    for (const auto& c : v) s.insert({c.alpha(), c.beta(), c.gamma()});
    return s;
}
}  // namespace

TEST(Basis, Vectors) {
    const BasisVectors b = basis_vectors(7, 4);
    EXPECT_EQ(b.e1.coeffs(), (std::vector<u64>{0, 1, 1, 0, 1, 0, 0}));
    EXPECT_EQ(b.h.coeffs(), std::vector<u64>(7, 1));
    const BasisVectors c = basis_vectors(17, 5);
    EXPECT_EQ(std::count(c.e1.coeffs().begin(), c.e1.coeffs().end(), 1u), 8);
    EXPECT_EQ(std::count(c.e2.coeffs().begin(), c.e2.coeffs().end(), 1u), 8);
    EXPECT_THROW(basis_vectors(13, 4), error);
}

TEST(Identities, SevenModSixteen) {
    const IdentityReport r = product_identities_report(7, 4);
    EXPECT_TRUE(r.all_passed());
    const BasisVectors b = basis_vectors(7, 4);
    EXPECT_EQ(ring_mul(b.e1, b.e2), ZPoly::constant(7, Modulus(4), 3) + b.e1 + b.e2);
    EXPECT_EQ(ring_mul(b.h, b.h), 7 * b.h);
}

TEST(Identities, SeventeenModThirtyTwo) {
    const IdentityReport r = product_identities_report(17, 5);
    EXPECT_TRUE(r.all_passed());
    const BasisVectors b = basis_vectors(17, 5);
    EXPECT_EQ(ring_mul(b.e1, b.e1), 3 * b.e1 + 4 * b.e2 + ZPoly::constant(17, Modulus(5), 8));
    bool saw_odd_form = false;
    for (const auto& c : r.checks)
        if (c.erratum) {
            saw_odd_form = true;
            EXPECT_FALSE(c.passed);
        }
    EXPECT_TRUE(saw_odd_form);
}

TEST(Identities, DeskPrimes) {
    for (u64 p : {7u, 17u, 23u, 31u, 41u, 47u})
        for (unsigned m : {4u, 5u}) EXPECT_TRUE(product_identities_report(p, m).all_passed()) << p << " " << m;
}

TEST(Idempotents, SevenModSixteenMatchesBruteForce) {
    const auto sols = solve_idempotent_system(7, 4);
    EXPECT_EQ(as_set(sols), brute_idempotents(7, 4));
    ASSERT_FALSE(sols.empty());
    for (const auto& s : sols) {
        EXPECT_TRUE(s.beta_plus_gamma() == 7 || s.beta_plus_gamma() == 9);
        EXPECT_TRUE(s.satisfies_trace_relation());
    }
}

TEST(Idempotents, TwentyThreeModThirtyTwo) {
    const auto sols = solve_idempotent_system(23, 5);
    ASSERT_FALSE(sols.empty());
    for (const auto& s : sols) {
        EXPECT_TRUE(s.beta_plus_gamma() == 7 || s.beta_plus_gamma() == 25);
        EXPECT_TRUE(s.satisfies_trace_relation());
    }
}

TEST(Idempotents, ExhaustiveAgreesWithLifting) {
    for (auto [p, m] : std::vector<std::pair<u64, unsigned>>{{7, 4}, {7, 5}, {17, 4}, {17, 5}, {23, 4}, {23, 5}, {31, 6}})
        EXPECT_EQ(solve_idempotent_system_exhaustive(p, m), solve_idempotent_system_lifted(p, m)) << p << " " << m;
}

TEST(Idempotents, LiftedBeyondExhaustiveLimit) {
    for (unsigned m : {7u, 8u}) {
        const Modulus mod(m);
        const auto sols = solve_idempotent_system(7, m);
        ASSERT_FALSE(sols.empty());
        const u64 inv = mod.inverse(7);
        for (const auto& s : sols) {
            EXPECT_TRUE(is_idempotent(s.polynomial()));
            EXPECT_TRUE(s.satisfies_trace_relation());
            EXPECT_TRUE(s.beta_plus_gamma() == inv || s.beta_plus_gamma() == mod.neg(inv));
        }
    }
}

TEST(Idempotents, CoefficientSystemEquivalentToConvolution) {
    for (auto [p, m] : std::vector<std::pair<u64, unsigned>>{{7, 4}, {17, 4}, {23, 3}}) {
        const Modulus mod(m);
        const BasisVectors b = basis_vectors(p, m);
        for (u64 a = 0; a < mod.value(); ++a)
            for (u64 be = 0; be < mod.value(); ++be)
                for (u64 ga = 0; ga < mod.value(); ++ga)
                    ASSERT_EQ(coefficient_system_holds(p, mod, a, be, ga), is_idempotent(combine(b, a, be, ga)))
                        << p << " " << m << " " << a << " " << be << " " << ga;
    }
}

TEST(Idempotents, SwapConjugateClosure) {
    for (auto [p, m] : std::vector<std::pair<u64, unsigned>>{{7, 4}, {17, 5}, {23, 5}}) {
        const auto sols = solve_idempotent_system(p, m);
        const auto set = as_set(sols);
        for (const auto& s : sols) {
            const IdempotentCoeffs t = swap_conjugate(s);
            EXPECT_TRUE(set.count({t.alpha(), t.beta(), t.gamma()}));
            EXPECT_EQ(swap_conjugate(t), s);
        }
    }
    EXPECT_THROW(IdempotentCoeffs::make(7, 4, 1, 3, 3), error);
    EXPECT_THROW(IdempotentCoeffs::make(7, 4, 2, 3, 5), error);
}

TEST(ShiftByH, SevenModSixteen) {
    const FamilyParams fp = family_params(7, 4);
    for (const auto& s : solve_idempotent_system(7, 4)) {
        const ZPoly e = s.polynomial();
        if (s.beta_plus_gamma() == 9) {
            const ZPoly up = shift_by_h(e, +1, fp);
            EXPECT_TRUE(is_idempotent(up));
            EXPECT_EQ(shift_by_h(up, -1, fp), e);
            try {
                shift_by_h(e, -1, fp);
                FAIL();
            } catch (const error& err) {
                EXPECT_EQ(err.code(), errc::precondition_sign_mismatch);
            }
        } else {
            EXPECT_TRUE(is_idempotent(shift_by_h(e, -1, fp)));
        }
    }
}

TEST(Family, SevenModSixteen) {
    const QrFamily f = build_family(7, 4);
    EXPECT_EQ(f.case_tag, FamilyCase::c12);
    EXPECT_EQ(f.q.log2_size(), 12u);
    EXPECT_EQ(f.q_prime.log2_size(), 16u);
    EXPECT_EQ(f.n.log2_size(), 12u);
    EXPECT_EQ(f.n_prime.log2_size(), 16u);
    EXPECT_TRUE(f.hensel_identified);
    for (const ZPoly* e : {&f.q_idem, &f.q_prime_idem, &f.n_idem, &f.n_prime_idem}) EXPECT_TRUE(is_idempotent(*e));
    for (const auto& c : stated_family_clauses(f)) EXPECT_TRUE(c.passed) << c.id;
    for (const auto& c : structural_family_clauses(f)) EXPECT_TRUE(c.passed) << c.id;
}

TEST(Family, DualIdempotentRule) {
    const QrFamily f = build_family(7, 4);
    const Modulus mod(4);
    for (const ZPoly* e : {&f.q_idem, &f.q_prime_idem, &f.n_idem, &f.n_prime_idem}) {
        const ZPoly rule = ZPoly::constant(7, mod, 1) - mu_map(*e, 6);
        EXPECT_EQ(dual(code_from_polynomial(*e)), code_from_polynomial(rule));
    }
}

TEST(Family, SeventeenModThirtyTwo) {
    const QrFamily f = build_family(17, 5);
    EXPECT_EQ(f.case_tag, FamilyCase::c21);
    const unsigned big = std::max(f.q.log2_size(), f.q_prime.log2_size());
    const unsigned small = std::min(f.q.log2_size(), f.q_prime.log2_size());
    EXPECT_EQ(big, 45u);
    EXPECT_EQ(small, 40u);
    for (const auto& c : structural_family_clauses(f)) EXPECT_TRUE(c.passed) << c.id;
}

TEST(Family, Errors) {
    try {
        build_family(23, 5);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::no_case_applies);
    }
    try {
        build_family(17, 4);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::out_of_family_range);
    }
}

TEST(Family, SquareMinusOneCasesAreVacuous) {
    for (u64 p : oracle::qr_primes_below(200))
        for (unsigned m = 3; m <= 8; ++m) {
            EXPECT_TRUE(case_vacuous(FamilyCase::c11, p, m));
            EXPECT_TRUE(case_vacuous(FamilyCase::c22, p, m));
        }
}
