// ccmk: compute G0/G1 reports, run endomorphism-ring verification suites,
// list the ring catalog.
//
// Exit codes: 0 success, 1 usage error, 2 invalid ring specification,
// 3 failing verification verdict.

#include "ccmk/catalog.hpp"
#include "ccmk/forms.hpp"
#include "ccmk/groups.hpp"
#include "ccmk/kcalc.hpp"
#include "ccmk/serialize.hpp"
#include "ccmk/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitVerifyFailed = 3;

const char* const kFormsHelp =
    "Branch equations for hypersurface-dim1, comma separated.\n"
    "Each is a polynomial in x and y with integer or rational coefficients,\n"
    "e.g. \"x - y, x + y\", \"2x + 3/2 y\", \"x - y^2\", \"x*y + y^3\".\n"
    "Whitespace is ignored; '*' between factors is optional.";

struct ComputeOptions {
    std::string family;
    std::optional<int> n;
    std::string forms;
    bool assert_hypotheses = false;
    unsigned long characteristic = 0;
    std::string ade_type = "A";
    int dim = 1;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

int require_n(const ComputeOptions& o) {
    if (!o.n) throw UsageError("family '" + o.family + "' needs --n");
    return *o.n;
}

ccmk::catalog::RingSpec build_spec(const ComputeOptions& o) {
    namespace c = ccmk::catalog;
    c::RingSpec spec;
    if (o.family == "truncated-poly") {
        spec = c::truncated_poly(require_n(o));
    } else if (o.family == "a2n-curve") {
        spec = c::a2n_curve(require_n(o));
    } else if (o.family == "a1-surface") {
        spec = c::a1_surface();
    } else if (o.family == "invariant-dim3") {
        spec = c::invariant_dim3();
    } else if (o.family == "hypersurface-dim1") {
        if (o.forms.empty()) throw UsageError("hypersurface-dim1 needs --forms");
        spec = c::hypersurface_dim1(ccmk::forms::parse_form_list(o.forms), o.assert_hypotheses);
    } else if (o.family == "a1-dim1") {
        spec = c::a1_dim1();
    } else if (o.family == "d2n-dim1") {
        spec = c::d2n_dim1(require_n(o));
    } else if (o.family == "a2n-minus1-dim1") {
        spec = c::a2n_minus1_dim1(require_n(o));
    } else if (o.family == "hypersurface-dim3") {
        spec = c::hypersurface_dim3(require_n(o));
    } else if (o.family == "ade") {
        c::AdeType t;
        if (o.ade_type == "A") t = c::AdeType::A;
        else if (o.ade_type == "D") t = c::AdeType::D;
        else if (o.ade_type == "E6") t = c::AdeType::E6;
        else if (o.ade_type == "E7") t = c::AdeType::E7;
        else if (o.ade_type == "E8") t = c::AdeType::E8;
        else throw UsageError("unknown --type '" + o.ade_type + "' (A, D, E6, E7, E8)");
        spec = c::ade(t, o.n.value_or(1), o.dim);
    } else {
        throw UsageError("unknown family '" + o.family + "'; see 'ccmk catalog list'");
    }
    return c::with_characteristic(std::move(spec), o.characteristic);
}

std::string matrix_text(const ccmk::znf::IntegerMatrix& m, const std::string& indent) {
    if (m.cols() == 0) return indent + "(" + std::to_string(m.rows()) + " x 0)\n";
    std::ostringstream os;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << indent << "[";
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c).get_str();
        os << "]\n";
    }
    return os.str();
}

std::string group_text(const ccmk::groups::StructuredAbelianGroup& g) {
    const std::string folded = ccmk::groups::to_text_folded(g);
    const std::string canonical = ccmk::groups::to_text(g);
    return folded == canonical ? folded : folded + "   (" + canonical + ")";
}

std::string report_text(const ccmk::kcalc::ComputationReport& r) {
    std::ostringstream os;
    os << "ring: " << ccmk::catalog::describe(r.spec) << "\n";
    os << "family: " << ccmk::catalog::family_id(r.spec) << "\n";
    if (r.data) {
        os << "summands:";
        for (const auto& s : r.data->summands) os << " " << s;
        os << "\n";
    }
    if (r.t_matrix) os << "T:\n" << matrix_text(*r.t_matrix, "  ");
    os << "g0: " << (r.g0 ? group_text(*r.g0) : "unavailable") << "\n";
    os << "h_rank: " << (r.h_rank ? std::to_string(*r.h_rank) : "unavailable") << "\n";
    if (r.xi)
        os << "xi: " << r.xi->generators.cols() << " generators in (k*)^" << r.xi->ambient_rank << "\n";
    else
        os << "xi: unavailable\n";
    if (r.data && r.data->aut_ab) os << "aut_ab: " << group_text(*r.data->aut_ab) << "\n";
    os << "g1: " << (r.g1 ? group_text(*r.g1) : "unavailable") << "\n";
    os << "notes:\n";
    for (const auto& n : r.notes) os << "  - " << n << "\n";
    return os.str();
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

int cmd_compute(const ComputeOptions& o, bool json, const std::string& path) {
    ccmk::catalog::RingSpec spec;
    try {
        spec = build_spec(o);
    } catch (const UsageError&) {
        throw;
    } catch (const ccmk::forms::ParseError& e) {
        std::cerr << "error: cannot parse --forms: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    const auto report = ccmk::kcalc::full_report(spec);
    emit(json ? ccmk::serialize::to_json(report).dump(2) + "\n" : report_text(report), path);
    if (!report.valid()) {
        for (const auto& d : report.diagnostics)
            if (d.severity == ccmk::catalog::Severity::Error)
                std::cerr << "error [" << d.code << "]: " << d.message << "\n";
        return kExitInvalid;
    }
    return kExitOk;
}

int cmd_verify(const std::string& suite, ccmk::verify::VerifyConfig config, const std::string& field_name,
               std::optional<std::uint64_t> seed, bool json, const std::string& path) {
    try {
        config.field = ccmk::field::Field::parse(field_name);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (seed) {
        config.seed = *seed;
    } else if (const char* env = std::getenv("CCMK_SEED"); env && *env) {
        try {
            config.seed = std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError(std::string("CCMK_SEED is not an unsigned integer: ") + env);
        }
    }
    const auto result = ccmk::verify::run_suite(suite, config);

    if (json) {
        for (const auto& n : result.notes) std::cerr << "note: " << n << "\n";
        emit(ccmk::serialize::verdicts_to_json(result.verdicts).dump(2) + "\n", path);
    } else {
        std::ostringstream os;
        os << "suite: " << suite << " (field " << config.field.name() << ", seed " << config.seed
           << ", n-max " << config.n_max << ", precision " << config.precision << ")\n";
        for (const auto& v : result.verdicts) {
            os << (v.holds ? "[holds] " : "[FAILS] ") << v.suite << ": " << v.case_name << "\n";
            if (v.counterexample) os << "        counterexample: " << *v.counterexample << "\n";
        }
        for (const auto& n : result.notes) os << "note: " << n << "\n";
        os << result.verdicts.size() << " verdicts, " << result.failures() << " failing\n";
        emit(os.str(), path);
    }
    return result.all_hold() ? kExitOk : kExitVerifyFailed;
}

int cmd_catalog(bool json, const std::string& path) {
    const auto families = ccmk::catalog::list_families();
    if (json) {
        emit(ccmk::serialize::catalog_to_json(families).dump(2) + "\n", path);
        return kExitOk;
    }
    std::ostringstream os;
    for (const auto& d : families) {
        os << d.id << "\n";
        os << "    " << d.name << ": " << d.parameters << "\n";
        os << "    " << d.characteristic << "; " << d.availability << "\n";
    }
    emit(os.str(), path);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grothendieck groups G0 and G1 of rings with cluster tilting data"};
    app.require_subcommand(1);

    ComputeOptions compute_opts;
    bool json = false;
    std::string output;

    auto* compute = app.add_subcommand("compute", "Compute the G0/G1 report for a catalog family");
    compute->add_option("family", compute_opts.family, "Family id (see 'catalog list')")->required();
    compute->add_option("--n", compute_opts.n, "Family parameter n (for ade: the index)");
    compute->add_option("--forms", compute_opts.forms, kFormsHelp);
    compute->add_flag("--assert-hypotheses", compute_opts.assert_hypotheses,
                      "Accept branch distinctness that cannot be decided from the forms");
    compute->add_option("--char", compute_opts.characteristic, "Characteristic of k (0 or a prime)");
    compute->add_option("--type", compute_opts.ade_type, "ADE type for 'ade': A, D, E6, E7, E8");
    compute->add_option("--dim", compute_opts.dim, "Dimension for 'ade'");
    compute->add_flag("--json", json, "Emit JSON");
    compute->add_option("-o,--output", output, "Write to this file instead of stdout");

    std::string suite;
    ccmk::verify::VerifyConfig verify_config;
    std::string field_name = "f7";
    std::optional<std::uint64_t> seed;
    auto* verify = app.add_subcommand("verify", "Run endomorphism-ring verification suites");
    verify->add_option("suite", suite, "endoring | factorizations | tilde | phi | all")
        ->required()
        ->check(CLI::IsMember({"endoring", "factorizations", "tilde", "phi", "all"}));
    verify->add_option("--n-max", verify_config.n_max, "Largest n exercised")->check(CLI::Range(1, 10));
    verify->add_option("--field", field_name, "q, or f<p> for a prime p > 5");
    verify->add_option("--seed", seed, "Random seed (default: CCMK_SEED, then a fixed value)");
    verify->add_option("--precision", verify_config.precision, "Series precision N for curve cases")
        ->check(CLI::Range(1, 100000));
    verify->add_option("--samples", verify_config.unit_samples, "Random matrices per n for the unit oracle")
        ->check(CLI::Range(1, 100000));
    verify->add_option("--cases", verify_config.random_cases, "Random cases for tilde and phi")
        ->check(CLI::Range(1, 100000));
    verify->add_flag("--json", json, "Emit the verdict list as JSON");
    verify->add_option("-o,--output", output, "Write to this file instead of stdout");

    auto* catalog = app.add_subcommand("catalog", "Describe the catalogued families");
    auto* list = catalog->add_subcommand("list", "List families and what can be computed");
    catalog->require_subcommand(1);
    list->add_flag("--json", json, "Emit JSON");
    list->add_option("-o,--output", output, "Write to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (compute->parsed()) return cmd_compute(compute_opts, json, output);
        if (verify->parsed()) return cmd_verify(suite, verify_config, field_name, seed, json, output);
        if (list->parsed()) return cmd_catalog(json, output);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
