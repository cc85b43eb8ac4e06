#include "ccmk/kcalc.hpp"
#include "ccmk/serialize.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace catalog = ccmk::catalog;
namespace kcalc = ccmk::kcalc;
namespace serialize = ccmk::serialize;

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(CCMK_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    const int raw = pclose(p);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

}  // namespace

TEST(Serialize, MatrixRoundTripKeepsBigEntries) {
    ccmk::znf::IntegerMatrix m{{1, -2}, {3, 4}};
    m(0, 0) = ccmk::znf::Integer("123456789012345678901234567890");
    EXPECT_EQ(serialize::matrix_from_json(serialize::to_json(m)), m);
}

TEST(Serialize, ReportRoundTripIsByteIdentical) {
    const std::vector<catalog::RingSpec> specs{
        catalog::truncated_poly(4),
        catalog::a2n_curve(2),
        catalog::a1_surface(),
        catalog::invariant_dim3(),
        catalog::d2n_dim1(3),
        catalog::a2n_minus1_dim1(2),
        catalog::hypersurface_dim1(ccmk::forms::parse_form_list("x - y^2, x + y^2"), true),
        catalog::hypersurface_dim3(2),
        catalog::ade(catalog::AdeType::D, 5, 2),
        catalog::truncated_poly(0),
    };
    for (const auto& spec : specs) {
        const auto first = serialize::to_json(kcalc::full_report(spec));
        const auto again = serialize::to_json(serialize::report_from_json(first));
        EXPECT_EQ(first.dump(), again.dump()) << first.dump();
    }
}

TEST(Serialize, GroupRoundTrip) {
    const auto g = kcalc::full_report(catalog::d2n_dim1(2)).g1;
    ASSERT_TRUE(g.has_value());
    EXPECT_TRUE(ccmk::groups::equals(serialize::group_from_json(serialize::to_json(*g)), *g));
}

TEST(Cli, ComputeTextAndJson) {
    const auto text = run_cli("compute truncated-poly --n 3");
    EXPECT_EQ(text.status, 0);
    EXPECT_NE(text.out.find("g1: k*"), std::string::npos);

    const auto js = run_cli("compute a2n-curve --n 2 --json");
    ASSERT_EQ(js.status, 0);
    const auto parsed = serialize::Json::parse(js.out);
    EXPECT_EQ(parsed["g0"]["free_rank"], 1);
    EXPECT_EQ(parsed["spec"]["family"], "a2n-curve");
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run_cli("compute truncated-poly").status, 1);
    EXPECT_EQ(run_cli("compute no-such-family --n 2").status, 1);
    EXPECT_EQ(run_cli("frobnicate").status, 1);
    EXPECT_EQ(run_cli("verify everything").status, 1);
    EXPECT_EQ(run_cli("compute truncated-poly --n 0").status, 2);
    EXPECT_EQ(run_cli("compute hypersurface-dim1 --forms \"x - y, 2x - 2y\"").status, 2);
    EXPECT_EQ(run_cli("compute hypersurface-dim1 --forms \"x + \"").status, 2);
    EXPECT_EQ(run_cli("compute a2n-curve --n 2 --char 3").status, 2);
    EXPECT_EQ(run_cli("--help").status, 0);
}

TEST(Cli, VerifyJson) {
    const auto r = run_cli("verify factorizations --n-max 2 --json");
    ASSERT_EQ(r.status, 0);
    const auto parsed = serialize::Json::parse(r.out);
    ASSERT_TRUE(parsed.is_array());
    ASSERT_FALSE(parsed.empty());
    for (const auto& v : parsed) EXPECT_EQ(v["verdict"], "holds");
}

TEST(Cli, CatalogListing) {
    const auto r = run_cli("catalog list");
    ASSERT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("char != 2,3,5"), std::string::npos);
    EXPECT_NE(r.out.find("G1 unavailable: no sequence data"), std::string::npos);
    const auto js = run_cli("catalog list --json");
    ASSERT_EQ(js.status, 0);
    EXPECT_TRUE(serialize::Json::parse(js.out).is_array());
}
