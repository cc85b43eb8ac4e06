#include "ccmk/kcalc.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

namespace catalog = ccmk::catalog;
namespace groups = ccmk::groups;
namespace kcalc = ccmk::kcalc;

TEST(TMatrix, TruncatedPolyThree) {
    const auto t = kcalc::build_t_matrix(catalog::resolve(catalog::truncated_poly(3)));
    EXPECT_EQ(t, (ccmk::znf::IntegerMatrix{{-1, 0}, {2, -1}, {-1, 2}}));
}

TEST(TMatrix, A2nLastColumn) {
    const auto t = kcalc::build_t_matrix(catalog::resolve(catalog::a2n_curve(3)));
    ASSERT_EQ(t.rows(), 4u);
    ASSERT_EQ(t.cols(), 3u);
    EXPECT_EQ(t(2, 2), -1);
    EXPECT_EQ(t(3, 2), 1);
    EXPECT_EQ(t(1, 2), 0);
}

TEST(TMatrix, HypersurfaceIsZero) {
    const auto t = kcalc::build_t_matrix(catalog::resolve(catalog::d2n_dim1(3)));
    EXPECT_TRUE(t.is_zero());
    EXPECT_EQ(t.rows(), 3u);
    EXPECT_EQ(t.cols(), 2u);
}

TEST(G0, MatchesOracle) {
    for (int n = 1; n <= 8; ++n) {
        const auto data = catalog::resolve(catalog::truncated_poly(n));
        const auto g0 = kcalc::compute_g0(data);
        const auto want = oracle::cokernel(kcalc::build_t_matrix(data));
        EXPECT_EQ(g0.free_rank, want.free_rank);
        EXPECT_EQ(g0.torsion, want.torsion);
        EXPECT_EQ(g0.free_rank, 1u);
        EXPECT_TRUE(g0.torsion.empty());
    }
    const auto a1 = kcalc::compute_g0(catalog::resolve(catalog::a1_surface()));
    EXPECT_EQ(groups::to_text(a1), "Z + Z/2");
}

TEST(G1, KnownValues) {
    using groups::Atom;
    using groups::StructuredAbelianGroup;
    EXPECT_TRUE(groups::equals(kcalc::compute_g1(catalog::resolve(catalog::truncated_poly(5))),
                               StructuredAbelianGroup::of_atoms({Atom::units_field()})));
    EXPECT_TRUE(groups::equals(kcalc::compute_g1(catalog::resolve(catalog::a2n_curve(4))),
                               StructuredAbelianGroup::of_atoms({Atom::units_power_series("k[[t]]")})));
    const auto a1 = kcalc::compute_g1(catalog::resolve(catalog::a1_dim1()));
    EXPECT_EQ(groups::to_text_folded(a1), "Z + (k[[X]]*)^2");
}

TEST(G1, BlockedFamiliesThrow) {
    EXPECT_THROW(kcalc::compute_g1(catalog::resolve(catalog::invariant_dim3())), kcalc::SequencesUnavailable);
    EXPECT_THROW(kcalc::build_t_matrix(catalog::resolve(catalog::hypersurface_dim3(2))), kcalc::SequencesUnavailable);
}

TEST(Report, NeverThrowsAndExplains) {
    const auto bad = kcalc::full_report(catalog::truncated_poly(0));
    EXPECT_FALSE(bad.valid());
    EXPECT_FALSE(bad.g1.has_value());

    const auto meta = kcalc::full_report(catalog::ade(catalog::AdeType::E8, 8, 2));
    EXPECT_TRUE(meta.valid());
    EXPECT_FALSE(meta.data.has_value());

    const auto blocked = kcalc::full_report(catalog::invariant_dim3());
    EXPECT_TRUE(blocked.valid());
    EXPECT_FALSE(blocked.g0.has_value());
    bool noted = false;
    for (const auto& n : blocked.notes) noted = noted || n.find("unavailable") != std::string::npos;
    EXPECT_TRUE(noted);

    const auto ok = kcalc::full_report(catalog::a1_surface());
    ASSERT_TRUE(ok.g1.has_value());
    ASSERT_TRUE(ok.xi.has_value());
    EXPECT_EQ(ok.xi->generators, *ok.t_matrix);
}
