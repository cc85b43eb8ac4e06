#include "ccmk/catalog.hpp"
#include "ccmk/forms.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using ccmk::forms::BivariatePolynomial;
namespace catalog = ccmk::catalog;

namespace {

bool has_code(const std::vector<catalog::Diagnostic>& ds, const std::string& code, catalog::Severity sev) {
    return std::any_of(ds.begin(), ds.end(),
                       [&](const catalog::Diagnostic& d) { return d.code == code && d.severity == sev; });
}

}  // namespace

TEST(Forms, ParsesLinearAndPolynomialForms) {
    const auto f = BivariatePolynomial::parse(" 2x + 3/2 y ");
    EXPECT_EQ(f.linear_part().first, 2);
    EXPECT_EQ(f.linear_part().second, mpq_class(3, 2));
    EXPECT_TRUE(f.is_homogeneous_linear());

    const auto g = BivariatePolynomial::parse("x - y^{3} + x*y");
    EXPECT_EQ(g.coefficient(0, 3), -1);
    EXPECT_EQ(g.coefficient(1, 1), 1);
    EXPECT_FALSE(g.is_homogeneous_linear());
    EXPECT_EQ(g.constant_term(), 0);

    EXPECT_TRUE(BivariatePolynomial::parse("x - x").is_zero());
}

TEST(Forms, RejectsMalformedInput) {
    EXPECT_THROW(BivariatePolynomial::parse(""), ccmk::forms::ParseError);
    EXPECT_THROW(BivariatePolynomial::parse("x + z"), ccmk::forms::ParseError);
    EXPECT_THROW(BivariatePolynomial::parse("x +"), ccmk::forms::ParseError);
    EXPECT_THROW(BivariatePolynomial::parse("1/0 x"), ccmk::forms::ParseError);
}

TEST(Forms, ListAndRoundTrip) {
    const auto list = ccmk::forms::parse_form_list("x - y, x + y, y");
    ASSERT_EQ(list.size(), 3u);
    for (const auto& f : list) {
        const auto again = BivariatePolynomial::parse(f.to_string());
        EXPECT_EQ(again.terms(), f.terms());
    }
}

TEST(Catalog, ValidatesCharacteristic) {
    EXPECT_TRUE(catalog::has_errors(catalog::validate(catalog::with_characteristic(catalog::a2n_curve(2), 3))));
    EXPECT_TRUE(catalog::has_errors(catalog::validate(catalog::with_characteristic(catalog::truncated_poly(2), 2))));
    EXPECT_FALSE(catalog::has_errors(catalog::validate(catalog::with_characteristic(catalog::truncated_poly(2), 3))));
    EXPECT_TRUE(catalog::has_errors(catalog::validate(catalog::with_characteristic(catalog::truncated_poly(2), 4))));
    EXPECT_TRUE(catalog::has_errors(catalog::validate(catalog::truncated_poly(0))));
}

TEST(Catalog, HypersurfaceValidation) {
    using catalog::Severity;
    auto parse = [](const char* s) { return ccmk::forms::parse_form_list(s); };

    EXPECT_FALSE(catalog::has_errors(catalog::validate(catalog::hypersurface_dim1(parse("x - y, x + y")))));
    EXPECT_TRUE(has_code(catalog::validate(catalog::hypersurface_dim1(parse("x - y, 2x - 2y"))), "not-isolated",
                         Severity::Error));
    EXPECT_TRUE(has_code(catalog::validate(catalog::hypersurface_dim1(parse("x^2 + y^3"))), "singular-branch",
                         Severity::Error));
    EXPECT_TRUE(has_code(catalog::validate(catalog::hypersurface_dim1(parse("1 + x"))), "not-in-maximal-ideal",
                         Severity::Error));
    EXPECT_TRUE(has_code(catalog::validate(catalog::hypersurface_dim1(parse("x - y^2, x + y^2"))),
                         "isolation-undecided", Severity::Error));
    const auto asserted = catalog::validate(catalog::hypersurface_dim1(parse("x - y^2, x + y^2"), true));
    EXPECT_FALSE(catalog::has_errors(asserted));
    EXPECT_TRUE(has_code(asserted, "adjacency", Severity::Warning));
}

TEST(Catalog, AdjacencyFailureKeepsAutOnly) {
    const auto data = catalog::resolve(catalog::a2n_minus1_dim1(2));
    EXPECT_FALSE(data.sequences.has_value());
    EXPECT_TRUE(data.aut_ab.has_value());
    EXPECT_TRUE(catalog::resolve(catalog::a2n_minus1_dim1(1)).sequences.has_value());
}

TEST(Catalog, ResolvedShapes) {
    const auto t = catalog::resolve(catalog::truncated_poly(4));
    EXPECT_EQ(t.summands.size(), 4u);
    EXPECT_EQ(t.t(), 3u);
    EXPECT_EQ(t.cluster_n, 1);
    ASSERT_TRUE(t.sequences.has_value());
    EXPECT_EQ(t.sequences->size(), 3u);

    const auto a = catalog::resolve(catalog::a2n_curve(3));
    EXPECT_EQ(a.summands.size(), 4u);

    const auto h = catalog::resolve(catalog::hypersurface_dim1(ccmk::forms::parse_form_list("x, y, x + y")));
    EXPECT_EQ(h.cluster_n, 2);
    EXPECT_EQ(h.free_index, 2u);

    const auto inv = catalog::resolve(catalog::invariant_dim3());
    EXPECT_FALSE(inv.sequences.has_value());
    EXPECT_TRUE(inv.aut_ab.has_value());

    const auto d3 = catalog::resolve(catalog::hypersurface_dim3(3));
    EXPECT_FALSE(d3.sequences.has_value());
    EXPECT_FALSE(d3.aut_ab.has_value());

    EXPECT_THROW(catalog::resolve(catalog::ade(catalog::AdeType::E6, 6, 2)), catalog::MetadataOnly);
    EXPECT_THROW(catalog::resolve(catalog::truncated_poly(0)), catalog::InvalidSpec);
}

TEST(Catalog, ListingMentionsRestrictionsAndBlockedFamilies) {
    const auto families = catalog::list_families();
    auto find = [&](const std::string& id) {
        return *std::find_if(families.begin(), families.end(), [&](const auto& d) { return d.id == id; });
    };
    EXPECT_EQ(find("a2n-curve").characteristic, "char != 2,3,5");
    EXPECT_NE(find("invariant-dim3").availability.find("G1 unavailable: no sequence data"), std::string::npos);
    EXPECT_TRUE(find("ade").metadata_only);
}
