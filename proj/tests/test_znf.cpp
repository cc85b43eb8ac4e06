#include "ccmk/znf.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using ccmk::znf::Integer;
using ccmk::znf::IntegerMatrix;

namespace {

IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
    std::uniform_int_distribution<long> d(-bound, bound);
    IntegerMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = d(rng);
    return m;
}

bool is_diagonal(const IntegerMatrix& d) {
    for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t c = 0; c < d.cols(); ++c)
            if (r != c && d(r, c) != 0) return false;
    return true;
}

}  // namespace

TEST(Smith, KnownDiagonal) {
    const IntegerMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    const auto s = ccmk::znf::smith_normal_form(a);
    ASSERT_EQ(s.diagonal.size(), 3u);
    EXPECT_EQ(s.diagonal[0], 2);
    EXPECT_EQ(s.diagonal[1], 6);
    EXPECT_EQ(s.diagonal[2], 12);
    EXPECT_EQ(s.U * a * s.V, s.D);
}

TEST(Smith, ZeroAndEmptyMatrices) {
    const IntegerMatrix z(3, 2);
    const auto s = ccmk::znf::smith_normal_form(z);
    EXPECT_EQ(s.rank(), 0u);
    EXPECT_EQ(s.U * z * s.V, s.D);

    const IntegerMatrix empty(4, 0);
    const auto coker = ccmk::znf::cokernel_invariants(empty);
    EXPECT_EQ(coker.free_rank, 4u);
    EXPECT_TRUE(coker.torsion.empty());
    EXPECT_TRUE(ccmk::znf::kernel_basis(empty).empty());
}

TEST(Smith, PropertiesOnRandomMatrices) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int trial = 0; trial < 200; ++trial) {
        const IntegerMatrix a = random_matrix(rng, dim(rng), dim(rng), 20);
        const auto s = ccmk::znf::smith_normal_form(a);
        ASSERT_EQ(s.U * a * s.V, s.D) << a.to_string();
        ASSERT_TRUE(is_diagonal(s.D));
        EXPECT_EQ(abs(oracle::bareiss_det(oracle::to_dense(s.U))), 1);
        EXPECT_EQ(abs(oracle::bareiss_det(oracle::to_dense(s.V))), 1);
        for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
            ASSERT_GT(s.diagonal[i], 0);
            ASSERT_EQ(s.diagonal[i + 1] % s.diagonal[i], 0);
        }
    }
}

TEST(Smith, RankDeficientMatrix) {
    const IntegerMatrix a{{1, 2, 3}, {2, 4, 6}, {1, 1, 1}};
    EXPECT_EQ(ccmk::znf::rank(a), 2u);
    const auto kernel = ccmk::znf::kernel_basis(a);
    ASSERT_EQ(kernel.size(), 1u);
    const auto image = a * kernel[0];
    for (const auto& x : image) EXPECT_EQ(x, 0);
}

TEST(Cokernel, MatchesHermiteOracle) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    for (int trial = 0; trial < 300; ++trial) {
        const IntegerMatrix a = random_matrix(rng, dim(rng), dim(rng), 9);
        const auto got = ccmk::znf::cokernel_invariants(a);
        const auto want = oracle::cokernel(a);
        ASSERT_EQ(got.free_rank, want.free_rank) << a.to_string();
        ASSERT_EQ(got.torsion, want.torsion) << a.to_string();
    }
}

TEST(Cokernel, SmallExamples) {
    const auto c = ccmk::znf::cokernel_invariants(IntegerMatrix{{-2}, {2}});
    EXPECT_EQ(c.free_rank, 1u);
    ASSERT_EQ(c.torsion.size(), 1u);
    EXPECT_EQ(c.torsion[0], 2);

    const auto d = ccmk::znf::cokernel_invariants(IntegerMatrix{{2, 0}, {0, 3}});
    EXPECT_EQ(d.free_rank, 0u);
    ASSERT_EQ(d.torsion.size(), 1u);
    EXPECT_EQ(d.torsion[0], 6);
}

TEST(Determinant, AgreesWithOracle) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 6;
        const IntegerMatrix a = random_matrix(rng, n, n, 12);
        EXPECT_EQ(ccmk::znf::determinant(a), oracle::bareiss_det(oracle::to_dense(a)));
    }
    EXPECT_THROW(ccmk::znf::determinant(IntegerMatrix(2, 3)), std::invalid_argument);
}

TEST(Determinant, LargeEntriesStayExact) {
    IntegerMatrix a(2, 2);
    a(0, 0) = Integer("123456789012345678901234567890");
    a(0, 1) = 1;
    a(1, 0) = 1;
    a(1, 1) = Integer("98765432109876543210");
    EXPECT_EQ(ccmk::znf::determinant(a),
              Integer("123456789012345678901234567890") * Integer("98765432109876543210") - 1);
}
