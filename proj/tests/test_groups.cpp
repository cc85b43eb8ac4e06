#include "ccmk/groups.hpp"

#include <gtest/gtest.h>

using namespace ccmk::groups;

TEST(Groups, CanonicalizeExpandsUnitGroups) {
    const auto g = canonicalize(StructuredAbelianGroup::of_atoms({Atom::units_power_series("k[[t]]")}));
    ASSERT_EQ(g.atoms.size(), 2u);
    EXPECT_EQ(g.count(AtomKind::UnitsField), 1u);
    EXPECT_EQ(g.count(AtomKind::OneUnits), 1u);
    EXPECT_EQ(canonicalize(g).atoms, g.atoms);
}

TEST(Groups, PowerSeriesVariableDoesNotMatter) {
    const auto a = StructuredAbelianGroup::of_atoms({Atom::units_power_series("k[[t]]")});
    const auto b = StructuredAbelianGroup::of_atoms({Atom::units_power_series("k[[X]]")});
    EXPECT_TRUE(equals(a, b));
    const auto c = StructuredAbelianGroup::of_atoms({Atom::units_local_ring("k[[s^2,st,t^2]]")});
    EXPECT_FALSE(equals(a, c));
    EXPECT_EQ(normalize_label("k[[ y ]]"), "k[[X]]");
}

TEST(Groups, TorsionIsNormalized) {
    StructuredAbelianGroup g;
    g.torsion = {6, 4};
    const auto c = canonicalize(g);
    ASSERT_EQ(c.torsion.size(), 2u);
    EXPECT_EQ(c.torsion[0], 2);
    EXPECT_EQ(c.torsion[1], 12);

    StructuredAbelianGroup h;
    h.torsion = {1, 2};
    EXPECT_EQ(canonicalize(h).torsion.size(), 1u);
}

TEST(Groups, DirectSumAddsEverything) {
    StructuredAbelianGroup a = StructuredAbelianGroup::free(2);
    a.torsion = {2};
    const auto b = StructuredAbelianGroup::of_atoms({Atom::units_field(), Atom::one_units("k[[t]]")});
    const auto s = direct_sum(a, b);
    EXPECT_EQ(s.free_rank, 2u);
    EXPECT_EQ(s.torsion.size(), 1u);
    EXPECT_EQ(s.atoms.size(), 2u);
    EXPECT_EQ(to_text(s), "Z^2 + Z/2 + k* + (1+m[k[[t]]])");
}

TEST(Groups, TorusQuotientKeepsCorank) {
    const ExponentLattice x(3, ccmk::znf::IntegerMatrix{{-1, 0}, {2, -1}, {-1, 2}});
    const auto q = quotient_torus_by_lattice(x);
    EXPECT_EQ(q.count(AtomKind::UnitsField), 1u);
    EXPECT_EQ(q.free_rank, 0u);
    EXPECT_TRUE(q.torsion.empty());

    const ExponentLattice zero(2, ccmk::znf::IntegerMatrix(2, 1));
    EXPECT_EQ(quotient_torus_by_lattice(zero).count(AtomKind::UnitsField), 2u);

    const ExponentLattice doubled(1, ccmk::znf::IntegerMatrix{{2}});
    EXPECT_TRUE(quotient_torus_by_lattice(doubled).is_trivial());
    EXPECT_THROW(ExponentLattice(2, ccmk::znf::IntegerMatrix(3, 1)), std::invalid_argument);
}

TEST(Groups, TextRendering) {
    EXPECT_EQ(to_text(StructuredAbelianGroup::trivial()), "0");
    EXPECT_EQ(to_text(StructuredAbelianGroup::of_atoms({Atom::units_field()})), "k*");
    const auto g = canonicalize(direct_sum(
        StructuredAbelianGroup::free(1),
        StructuredAbelianGroup::of_atoms({Atom::units_power_series("k[[X]]"), Atom::units_power_series("k[[X]]")})));
    EXPECT_EQ(to_text_folded(g), "Z + (k[[X]]*)^2");
    EXPECT_EQ(to_text(g), "Z + (k*)^2 + (1+m[k[[X]]])^2");
}

TEST(Groups, KindNamesRoundTrip) {
    for (auto k : {AtomKind::UnitsField, AtomKind::OneUnits, AtomKind::UnitsPowerSeries, AtomKind::UnitsLocalRing})
        EXPECT_EQ(kind_from_name(kind_name(k)), k);
    EXPECT_THROW(kind_from_name("nonsense"), std::invalid_argument);
}
