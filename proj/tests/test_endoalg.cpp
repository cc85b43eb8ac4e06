#include "ccmk/endoalg.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ccmk::endoalg;
using ccmk::field::Field;

namespace {

const Field F7 = Field::prime(7);
const Field Q = Field::rationals();

TruncatedSeries poly(const Field& f, std::vector<long> c, int precision) {
    return TruncatedSeries::from_coefficients(f, c, precision);
}

}  // namespace

TEST(HomMembership, TruncatedIdeals) {
    const auto m1 = ModuleDescriptor::ideal_power(4, 1);
    const auto m2 = ModuleDescriptor::ideal_power(4, 2);
    EXPECT_TRUE(hom_membership(poly(Q, {0, 1}, 4), m1, m2));
    EXPECT_TRUE(hom_membership(poly(Q, {1}, 4), m2, m1));
    EXPECT_FALSE(hom_membership(poly(Q, {1}, 4), m1, m2));
    // x^3 kills m^1 in k[x]/x^4, so any multiple of it is a map.
    EXPECT_TRUE(hom_membership(poly(Q, {0, 0, 0, 1}, 4), m1, ModuleDescriptor::ideal_power(4, 3)));
}

TEST(HomMembership, CurveOverrings) {
    const auto r2 = ModuleDescriptor::overring(2, 2, 50);
    const auto r0 = ModuleDescriptor::overring(2, 0, 50);
    EXPECT_FALSE(hom_membership(poly(Q, {0, 1}, 50), r2, r0));
    EXPECT_TRUE(hom_membership(poly(Q, {0, 0, 0, 0, 1}, 50), r2, r0));
    EXPECT_TRUE(hom_membership(poly(Q, {1}, 50), r0, r2));
    EXPECT_FALSE(hom_membership(poly(Q, {1}, 50), r2, r0));
    EXPECT_THROW(hom_membership(poly(Q, {1}, 4), ModuleDescriptor::overring(2, 2, 4),
                                ModuleDescriptor::overring(2, 0, 4)),
                 InsufficientPrecision);
}

TEST(HomMembership, MonomialBasisMatchesConductor) {
    // Hom(k[[t]], k[[t^2, t^5]]) is t^4 k[[t]].
    const auto basis = hom_monomial_basis(ModuleDescriptor::overring(2, 2, 12), ModuleDescriptor::overring(2, 0, 12));
    EXPECT_EQ(basis, (std::vector<int>{4, 5, 6, 7, 8, 9, 10, 11}));
    const auto ideal = hom_monomial_basis(ModuleDescriptor::ideal_power(4, 1), ModuleDescriptor::ideal_power(4, 3));
    EXPECT_EQ(ideal, (std::vector<int>{2}));
}

TEST(UnitCriterion, Examples) {
    const auto L = truncated_summands(3);
    EXPECT_TRUE(is_unit(EndoMatrix::identity(L, Q)));

    const EndoMatrix xu = EndoMatrix::diagonal({L[0], L[1]}, {poly(Q, {1}, 3), poly(Q, {0, 1, 5}, 3)});
    EXPECT_FALSE(is_unit(xu));

    std::mt19937_64 rng(1);
    EndoMatrix a = random_endomorphism(L, Q, rng);
    for (std::size_t j = 0; j < L.size(); ++j) a = a.with_entry(j, j, random_local_unit(L[j], Q, rng));
    EXPECT_TRUE(is_unit(a));
    EXPECT_TRUE(oracle::invertible_on_module(a));
}

TEST(RadicalCriterion, Examples) {
    const auto L = truncated_summands(3);
    EXPECT_TRUE(in_radical(EndoMatrix::zero(L, Q)));
    EXPECT_FALSE(in_radical(EndoMatrix::identity(L, Q)));
    std::mt19937_64 rng(2);
    EndoMatrix off = random_endomorphism(L, Q, rng);
    for (std::size_t j = 0; j < L.size(); ++j) off = off.with_entry(j, j, TruncatedSeries::zero(Q, 3));
    EXPECT_TRUE(in_radical(off));
}

TEST(UnitCriterion, AgreesWithModuleOracleAndSolver) {
    for (const Field& f : {F7, Q}) {
        for (int n = 2; n <= 4; ++n) {
            std::mt19937_64 rng(static_cast<std::uint64_t>(n) * 31 + f.characteristic());
            const auto L = truncated_summands(n);
            for (int s = 0; s < 60; ++s) {
                EndoMatrix a = s % 2 ? random_unit(L, f, rng) : random_endomorphism(L, f, rng);
                if (s % 3 == 0) a = a - EndoMatrix::diagonal(L, [&] {
                                        std::vector<TruncatedSeries> d;
                                        for (std::size_t j = 0; j < L.size(); ++j)
                                            d.push_back(TruncatedSeries::constant(a.entry(j, j).constant_term(), n));
                                        return d;
                                    }());
                const bool oracle_unit = oracle::invertible_on_module(a);
                ASSERT_EQ(is_unit(a), oracle_unit) << a.to_string();
                const auto inv = solve_right_inverse(a);
                ASSERT_EQ(inv.has_value(), oracle_unit) << a.to_string();
                if (inv) EXPECT_EQ(*inv * a, EndoMatrix::identity(L, f));
            }
        }
    }
}

TEST(UnitCriterion, RepeatedSummandsUseResidueMatrices) {
    const auto m = ModuleDescriptor::ideal_power(3, 0);
    const ModuleList L{m, m};
    const auto one = TruncatedSeries::one(Q, 3);
    const auto zero = TruncatedSeries::zero(Q, 3);
    const EndoMatrix swap(L, {zero, one, one, zero});
    EXPECT_TRUE(is_unit(swap));
    EXPECT_FALSE(in_radical(swap));
    EXPECT_TRUE(oracle::invertible_on_module(swap));
    const EndoMatrix singular(L, {one, one, one, one});
    EXPECT_FALSE(is_unit(singular));
    EXPECT_FALSE(oracle::invertible_on_module(singular));
}

TEST(Elementary, Basics) {
    const auto L = truncated_summands(3);
    EXPECT_EQ(elementary_d(L, 0, TruncatedSeries::one(Q, 3)), EndoMatrix::identity(L, Q));
    const auto e = elementary_e(L, 1, 0, poly(Q, {0, 1}, 3));
    EXPECT_TRUE(is_unit(e));
    EXPECT_EQ(e * elementary_e(L, 1, 0, poly(Q, {0, -1}, 3)), EndoMatrix::identity(L, Q));
    EXPECT_THROW(elementary_e(L, 1, 0, poly(Q, {1}, 3)), MembershipError);
    EXPECT_THROW(elementary_e(L, 1, 1, poly(Q, {1}, 3)), std::invalid_argument);
    EXPECT_THROW(elementary_d(L, 0, poly(Q, {0, 1}, 3)), NotAUnit);
}

TEST(Tilde, IdentityAndMultiplicativity) {
    const auto L = truncated_summands(3);
    const std::vector<int> l{2, 0, 1};
    const auto lp = expand_multiplicities(L, l);
    EXPECT_EQ(lp.size(), 3u);
    EXPECT_EQ(tilde_q(l), 2);
    const auto t1 = tilde(L, l, EndoMatrix::identity(lp, F7));
    EXPECT_EQ(t1.size(), 6u);
    EXPECT_EQ(t1, EndoMatrix::identity(t1.summands(), F7));

    std::mt19937_64 rng(9);
    for (int s = 0; s < 20; ++s) {
        const auto a = random_unit(lp, F7, rng);
        const auto b = random_unit(lp, F7, rng);
        EXPECT_EQ(tilde(L, l, a * b), tilde(L, l, a) * tilde(L, l, b));
        EXPECT_TRUE(is_unit(tilde(L, l, a)));
    }
}

TEST(Tilde, ScalarAutomorphismIsDiagonal) {
    const auto L = truncated_summands(2);
    const auto a = poly(Q, {3, 1}, 2);
    const auto one = TruncatedSeries::one(Q, 2);

    // Uniform multiplicities: e 1_{L^q} with e = diag(a, a).
    const std::vector<int> uniform{2, 2};
    const auto tu = tilde(L, uniform, EndoMatrix::scalar(expand_multiplicities(L, uniform), a));
    EXPECT_EQ(tu, EndoMatrix::diagonal(tu.summands(), {a, a, a, a}));

    // Unequal multiplicities: the second copy of L_1 sits in L''.
    const std::vector<int> mixed{2, 1};
    const auto tm = tilde(L, mixed, EndoMatrix::scalar(expand_multiplicities(L, mixed), a));
    EXPECT_EQ(tm, EndoMatrix::diagonal(tm.summands(), {a, a, a, one}));
    EXPECT_EQ(tm * tilde(L, mixed, EndoMatrix::scalar(expand_multiplicities(L, mixed), a.inverse())),
              EndoMatrix::identity(tm.summands(), Q));
}

TEST(Factorization, TruncatedCases) {
    const auto v = verify_factorization(FactorizationCase::truncated(4, 2, poly(F7, {1, 1}, 4)));
    EXPECT_TRUE(v.holds) << v.counterexample.value_or("");
    for (int n = 2; n <= 5; ++n)
        for (int i = 1; i < n; ++i)
            EXPECT_TRUE(verify_factorization(FactorizationCase::truncated(n, i, TruncatedSeries::one(Q, n))).holds);
    EXPECT_THROW(FactorizationCase::truncated(4, 2, poly(F7, {2, 1}, 4)), std::invalid_argument);
    EXPECT_THROW(FactorizationCase::truncated(4, 4, poly(F7, {1, 1}, 4)), std::invalid_argument);
}

TEST(Factorization, CurveCases) {
    const auto v = verify_factorization(FactorizationCase::a2n(3, 1, 2, poly(F7, {1, 0, 1}, 50)));
    EXPECT_TRUE(v.holds) << v.counterexample.value_or("");
    EXPECT_TRUE(verify_factorization(FactorizationCase::a2n(3, 2, std::nullopt, poly(Q, {1, 0, 1, 0, 1}, 50))).holds);
    EXPECT_THROW(verify_factorization(FactorizationCase::a2n(3, 1, std::nullopt, poly(F7, {1, 0, 1}, 10))),
                 InsufficientPrecision);
    // t is not in the maximal ideal of k[[t^2, t^7]].
    EXPECT_THROW(FactorizationCase::a2n(3, 1, std::nullopt, poly(F7, {1, 1}, 50)), std::invalid_argument);
}

TEST(FirstDifference, ReportsPosition) {
    const auto L = truncated_summands(3);
    const auto a = EndoMatrix::identity(L, Q);
    const auto b = a.with_entry(2, 1, poly(Q, {0, 1}, 3));
    const auto d = first_difference(a, b);
    ASSERT_TRUE(d.has_value());
    EXPECT_EQ(d->first, 2u);
    EXPECT_EQ(d->second, 1u);
    EXPECT_FALSE(first_difference(a, a).has_value());
}

TEST(DetEvaluation, IdentityMultiplicativeAndUnits) {
    const auto L = a2n_summands(2, 50);
    EXPECT_EQ(det_evaluation(EndoMatrix::identity(L, F7)), TruncatedSeries::one(F7, 50));
    std::mt19937_64 rng(4);
    for (int s = 0; s < 10; ++s) {
        const auto a = random_unit(L, F7, rng);
        const auto b = random_unit(L, F7, rng);
        EXPECT_EQ(det_evaluation(a * b), det_evaluation(a) * det_evaluation(b));
        EXPECT_TRUE(det_evaluation(a).is_unit());
    }
    EXPECT_THROW(det_evaluation(EndoMatrix::identity(truncated_summands(2), F7)), std::invalid_argument);
}

TEST(DetEvaluation, MatchesLeibnizExpansion) {
    const auto L = a2n_summands(1, 20);
    std::mt19937_64 rng(8);
    for (int s = 0; s < 10; ++s) {
        const auto a = random_endomorphism(L, Q, rng);
        const auto leibniz = a.entry(0, 0) * a.entry(1, 1) - a.entry(0, 1) * a.entry(1, 0);
        EXPECT_EQ(det_evaluation(a), leibniz);
    }
}

TEST(Phi, WitnessIdentityAndErrors) {
    const int n = 2;
    const auto L = a2n_summands(n, 50);
    const Scalar a1(F7, 3), a2(F7, 5);
    const auto f = poly(F7, {2, 1, 0, 4}, 50);
    const auto last = (a1 * a2).inverse() * f;
    const auto v = phi_map(EndoMatrix::diagonal(
        L, {TruncatedSeries::constant(a1, 50), TruncatedSeries::constant(a2, 50), last}));
    EXPECT_EQ(v.residues, (std::vector<Scalar>{a1, a2}));
    EXPECT_EQ(v.det, f);

    const auto id = phi_map(EndoMatrix::identity(L, F7));
    EXPECT_EQ(id.residues, (std::vector<Scalar>{Scalar(F7, 1), Scalar(F7, 1)}));
    EXPECT_EQ(id.det, TruncatedSeries::one(F7, 50));

    EXPECT_THROW(phi_map(EndoMatrix::zero(L, F7)), NotAUnit);
}

TEST(Phi, Multiplicative) {
    std::mt19937_64 rng(12);
    for (int n = 1; n <= 3; ++n) {
        const auto L = a2n_summands(n, 50);
        for (int s = 0; s < 5; ++s) {
            const auto a = random_unit(L, F7, rng);
            const auto b = random_unit(L, F7, rng);
            EXPECT_EQ(phi_map(a * b), phi_product(phi_map(a), phi_map(b)));
        }
    }
}
