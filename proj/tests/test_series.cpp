#include "ccmk/field.hpp"
#include "ccmk/series.hpp"

#include <gtest/gtest.h>

#include <random>

using ccmk::field::Field;
using ccmk::field::Scalar;
using ccmk::series::NumericalSemigroup;
using ccmk::series::TruncatedSeries;

TEST(Field, PrimeFieldArithmetic) {
    const Field f7 = Field::prime(7);
    const Scalar a(f7, 3), b(f7, 5);
    EXPECT_EQ(a + b, Scalar(f7, 1));
    EXPECT_EQ(a * b, Scalar(f7, 1));
    EXPECT_EQ(a.inverse(), b);
    EXPECT_EQ(Scalar(f7, -1), Scalar(f7, 6));
    EXPECT_EQ(Scalar(f7, mpq_class(1, 2)), Scalar(f7, 4));
    EXPECT_THROW(Scalar(f7, 0).inverse(), std::domain_error);
    EXPECT_THROW(Field::prime(5), std::invalid_argument);
    EXPECT_THROW(Field::prime(9), std::invalid_argument);
    EXPECT_EQ(Field::parse("f11").characteristic(), 11u);
    EXPECT_TRUE(Field::parse("Q").is_rationals());
    EXPECT_THROW(Field::parse("f3"), std::invalid_argument);
    EXPECT_THROW(Field::parse("r"), std::invalid_argument);
}

TEST(Field, RationalArithmetic) {
    const Field q = Field::rationals();
    const Scalar h(q, mpq_class(1, 2));
    EXPECT_EQ(h + h, Scalar(q, 1));
    EXPECT_EQ(h.inverse(), Scalar(q, 2));
    EXPECT_THROW(h + Scalar(Field::prime(7), 1), std::invalid_argument);
}

TEST(Semigroup, MembershipAndConductor) {
    const auto s = NumericalSemigroup::two_generated(2);  // <2, 5>
    EXPECT_TRUE(s.contains(0));
    EXPECT_FALSE(s.contains(1));
    EXPECT_TRUE(s.contains(2));
    EXPECT_FALSE(s.contains(3));
    EXPECT_TRUE(s.contains(5));
    EXPECT_EQ(s.conductor(), 4);
    for (int e = s.conductor(); e < 40; ++e) EXPECT_TRUE(s.contains(e));
    EXPECT_TRUE(NumericalSemigroup::naturals().contains(1));
    EXPECT_EQ(NumericalSemigroup::join(s, NumericalSemigroup::two_generated(1)).m(), 1);
}

TEST(Series, InverseAndProduct) {
    const Field q = Field::rationals();
    const auto f = TruncatedSeries::from_coefficients(q, {1, 0, 1}, 20);
    const auto g = f.inverse();
    EXPECT_EQ(f * g, TruncatedSeries::one(q, 20));
    EXPECT_EQ(g.coefficient(2), Scalar(q, -1));
    EXPECT_EQ(g.coefficient(4), Scalar(q, 1));
    EXPECT_TRUE(g.coefficient(3).is_zero());
    EXPECT_THROW(TruncatedSeries::monomial(Scalar(q, 1), 1, 5).inverse(), std::domain_error);
}

TEST(Series, RandomRingAxioms) {
    const Field f7 = Field::prime(7);
    std::mt19937_64 rng(5);
    auto random_series = [&](int precision) {
        TruncatedSeries s(f7, precision);
        for (int e = 0; e < precision; ++e) s.set_coefficient(e, ccmk::field::random_scalar(f7, rng));
        return s;
    };
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_series(12), b = random_series(12), c = random_series(12);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_TRUE((a - a).is_zero());
        if (a.is_unit()) EXPECT_EQ(a * a.inverse(), TruncatedSeries::one(f7, 12));
    }
}

TEST(Series, SemigroupSupportIsEnforced) {
    const Field q = Field::rationals();
    const auto sg = NumericalSemigroup::two_generated(1);  // <2, 3>
    TruncatedSeries s(q, 10, sg);
    EXPECT_THROW(s.set_coefficient(1, Scalar(q, 1)), std::invalid_argument);
    s.set_coefficient(3, Scalar(q, 1));
    s.set_coefficient(0, Scalar(q, 1));
    const auto inv = s.inverse();
    for (int e : inv.support()) EXPECT_TRUE(sg.contains(e));
    EXPECT_THROW(TruncatedSeries::monomial(Scalar(q, 1), 1, 10).in_semigroup(sg), std::invalid_argument);
}

TEST(Series, PrecisionTracking) {
    const Field q = Field::rationals();
    const auto a = TruncatedSeries::one(q, 10);
    const auto b = TruncatedSeries::one(q, 6);
    EXPECT_EQ((a * b).precision(), 6);
    EXPECT_EQ((a + b).precision(), 6);
    EXPECT_EQ(TruncatedSeries::monomial(Scalar(q, 1), 12, 10).valuation(), std::nullopt);
    EXPECT_EQ(TruncatedSeries::from_coefficients(q, {0, 0, 3}, 10).valuation(), 2);
    EXPECT_EQ(TruncatedSeries::from_coefficients(q, {1, -1}, 4).to_string("x"), "1 - x + O(x^4)");
}
