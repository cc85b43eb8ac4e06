#include "ccmk/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ccmk::verify {

using endoalg::EndoMatrix;
using endoalg::ModuleList;
using series::TruncatedSeries;

bool SuiteResult::all_hold() const { return failures() == 0; }

std::size_t SuiteResult::failures() const {
    return static_cast<std::size_t>(
        std::count_if(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return !v.holds; }));
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"endoring", "factorizations", "tilde", "phi", "all"};
    return names;
}

namespace {

std::mt19937_64 make_rng(const VerifyConfig& config, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                      static_cast<std::uint32_t>(stream)};
    return std::mt19937_64(seq);
}

/// Collects the first failure of a randomized property.
class Check {
public:
    Check(std::string suite, std::string name) : verdict_{std::move(suite), std::move(name), true, std::nullopt} {}

    void expect(bool ok, const std::string& detail) {
        ++count_;
        if (!ok && verdict_.holds) {
            verdict_.holds = false;
            verdict_.counterexample = detail;
        }
    }
    void fail(const std::string& detail) { expect(false, detail); }
    int count() const { return count_; }
    Verdict done() const { return verdict_; }

private:
    Verdict verdict_;
    int count_ = 0;
};

int curve_precision(const VerifyConfig& config, int n, std::vector<std::string>& notes) {
    const int needed = 4 * n + 2;
    if (config.precision >= needed) return config.precision;
    notes.push_back("precision raised from " + std::to_string(config.precision) + " to " +
                    std::to_string(needed) + " for n = " + std::to_string(n));
    return needed;
}

void add_field_note(SuiteResult& r, const VerifyConfig& config) {
    r.notes.push_back("identities checked over " + config.field.name() +
                      "; they are ring identities, so algebraic closure is not needed");
}

}  // namespace

SuiteResult run_endoring(const VerifyConfig& config) {
    SuiteResult result;
    add_field_note(result, config);
    const auto& f = config.field;
    for (int n = 2; n <= config.n_max; ++n) {
        auto rng = make_rng(config, 100 + static_cast<std::uint64_t>(n));
        const ModuleList L = endoalg::truncated_summands(n);
        const std::string where = "k[x]/x^" + std::to_string(n) + " over " + f.name();

        Check unit("endoring", "is_unit matches linear-system invertibility, " + where);
        int units = 0;
        std::uniform_int_distribution<std::size_t> which(0, L.size() - 1);
        for (int s = 0; s < config.unit_samples; ++s) {
            EndoMatrix a = s % 3 == 0 ? endoalg::random_unit(L, f, rng) : endoalg::random_endomorphism(L, f, rng);
            if (s % 3 == 2) {
                const std::size_t j = which(rng);
                TruncatedSeries d = a.entry(j, j);
                d.set_coefficient(0, field::Scalar(f, 0));
                a = a.with_entry(j, j, d);
            }
            const bool claimed = endoalg::is_unit(a);
            const bool solvable = endoalg::solve_right_inverse(a).has_value();
            units += solvable ? 1 : 0;
            unit.expect(claimed == solvable, a.to_string() + ": is_unit = " + (claimed ? "true" : "false") +
                                                 ", inverse exists = " + (solvable ? "true" : "false"));
        }
        result.verdicts.push_back(unit.done());
        result.notes.push_back(where + ": " + std::to_string(units) + " of " + std::to_string(config.unit_samples) +
                               " sampled matrices were units");

        Check radical("endoring", "1 - beta alpha is a unit for alpha in the radical, " + where);
        for (int s = 0; s < config.radical_samples; ++s) {
            const EndoMatrix alpha = endoalg::random_radical(L, f, rng);
            radical.expect(endoalg::in_radical(alpha), alpha.to_string() + " not reported as radical");
            const EndoMatrix one = EndoMatrix::identity(L, f);
            for (int b = 0; b < config.radical_partners; ++b) {
                const EndoMatrix beta = endoalg::random_endomorphism(L, f, rng);
                const EndoMatrix x = one - beta * alpha;
                radical.expect(endoalg::is_unit(x) && endoalg::solve_right_inverse(x).has_value(),
                               "alpha = " + alpha.to_string() + ", beta = " + beta.to_string());
            }
        }
        result.verdicts.push_back(radical.done());

        Check elementary("endoring", "e_ij(beta) and d_j(unit) are units, e_ij(beta) e_ij(-beta) = 1, " + where);
        const EndoMatrix one = EndoMatrix::identity(L, f);
        for (std::size_t i = 0; i < L.size(); ++i) {
            for (std::size_t j = 0; j < L.size(); ++j) {
                if (i == j) {
                    const EndoMatrix d = endoalg::elementary_d(L, j, endoalg::random_local_unit(L[j], f, rng));
                    elementary.expect(endoalg::is_unit(d), d.to_string());
                    continue;
                }
                const TruncatedSeries beta = endoalg::random_hom(L[j], L[i], f, rng);
                const EndoMatrix e = endoalg::elementary_e(L, i, j, beta);
                const EndoMatrix back = endoalg::elementary_e(L, i, j, -beta);
                elementary.expect(endoalg::is_unit(e) && e * back == one, e.to_string());
            }
        }
        result.verdicts.push_back(elementary.done());
    }
    return result;
}

SuiteResult run_factorizations(const VerifyConfig& config) {
    SuiteResult result;
    add_field_note(result, config);
    const auto& f = config.field;

    auto record = [&](const std::function<endoalg::FactorizationCase()>& make, const std::string& fallback) {
        Verdict v{"factorizations", fallback, false, std::nullopt};
        try {
            const auto c = make();
            const auto fv = endoalg::verify_factorization(c);
            v.case_name = fv.label;
            v.holds = fv.holds;
            if (!fv.holds) v.counterexample = fv.identity + ": " + fv.counterexample.value_or("");
        } catch (const std::exception& e) {
            v.counterexample = e.what();
        }
        result.verdicts.push_back(std::move(v));
    };

    const std::vector<std::vector<long>> truncated_r{{1, 1}, {1, -1}, {1, 0, 2}};
    for (int n = 2; n <= config.n_max; ++n)
        for (int i = 1; i <= n - 1; ++i)
            for (const auto& coeffs : truncated_r)
                record([&] {
                    return endoalg::FactorizationCase::truncated(n, i, TruncatedSeries::from_coefficients(f, coeffs, n));
                }, "truncated(n=" + std::to_string(n) + ", i=" + std::to_string(i) + ")");

    const std::vector<std::vector<long>> curve_f{{1, 0, 1}, {1, 0, 1, 0, 1}};
    for (int n = 1; n <= config.n_max; ++n) {
        const int precision = curve_precision(config, n, result.notes);
        for (int i = 1; i <= n; ++i) {
            for (int j = i; j <= n; ++j) {
                const std::optional<int> jj = j == i ? std::nullopt : std::optional<int>(j);
                for (const auto& coeffs : curve_f)
                    record([&] {
                        return endoalg::FactorizationCase::a2n(n, i, jj,
                                                               TruncatedSeries::from_coefficients(f, coeffs, precision));
                    }, "a2n(n=" + std::to_string(n) + ", i=" + std::to_string(i) + ")");
            }
        }
    }
    result.notes.push_back("truncated cases compared exactly in k[x]/x^n; a2n cases coefficientwise to the working precision");
    return result;
}

namespace {

std::string multiplicities_text(const std::vector<int>& l) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < l.size(); ++i) os << (i ? "," : "") << l[i];
    os << ")";
    return os.str();
}

}  // namespace

SuiteResult run_tilde(const VerifyConfig& config) {
    SuiteResult result;
    add_field_note(result, config);
    const auto& f = config.field;
    auto rng = make_rng(config, 200);

    Check multiplicative("tilde", "tilde(alpha alpha') = tilde(alpha) tilde(alpha')");
    Check identity("tilde", "tilde(1) = 1 and tilde(alpha) is a unit");
    Check diagonal("tilde", "tilde(a 1_L') is diagonal with a exactly on the copies inside L'");
    Check inverse("tilde", "tilde(a 1_L')^-1 = tilde(a^-1 1_L')");
    Check uniform("tilde", "tilde(a 1_L') = e 1_{L^q} when every involved multiplicity equals q");

    const int n_top = std::max(2, std::min(config.n_max, 4));
    std::uniform_int_distribution<int> pick_n(2, n_top);
    std::uniform_int_distribution<int> pick_l(0, 3);
    for (int s = 0; s < config.random_cases; ++s) {
        const bool curve = s % 4 == 3;
        const ModuleList L = curve ? endoalg::a2n_summands(1, curve_precision(config, 1, result.notes))
                                   : endoalg::truncated_summands(pick_n(rng));
        std::vector<int> l(L.size());
        const bool force_uniform = s % 5 == 0;
        do {
            for (auto& x : l) x = pick_l(rng);
            if (force_uniform) {
                const int q = std::max(1, endoalg::tilde_q(l));
                for (auto& x : l) x = x > 0 ? q : 0;
            }
        } while (endoalg::tilde_q(l) == 0);
        const ModuleList lp = endoalg::expand_multiplicities(L, l);
        const std::string tag = std::string(curve ? "A2 curve" : "k[x]/x^" + std::to_string(L.size())) +
                                ", l = " + multiplicities_text(l);

        const EndoMatrix a = endoalg::random_unit(lp, f, rng);
        const EndoMatrix b = endoalg::random_unit(lp, f, rng);
        const EndoMatrix ta = endoalg::tilde(L, l, a);
        const EndoMatrix tb = endoalg::tilde(L, l, b);
        multiplicative.expect(endoalg::tilde(L, l, a * b) == ta * tb, tag + ", alpha = " + a.to_string());

        const EndoMatrix t1 = endoalg::tilde(L, l, EndoMatrix::identity(lp, f));
        identity.expect(t1 == EndoMatrix::identity(t1.summands(), f) && endoalg::is_unit(ta), tag);

        const TruncatedSeries unit = endoalg::random_local_unit(L.front(), f, rng);
        const EndoMatrix ts = endoalg::tilde(L, l, EndoMatrix::scalar(lp, unit));
        const int q = endoalg::tilde_q(l);
        std::vector<TruncatedSeries> expected;
        bool all_equal = true;
        for (int c = 0; c < q; ++c) {
            for (std::size_t i = 0; i < L.size(); ++i) {
                if (l[i] > 0 && l[i] != q) all_equal = false;
                expected.push_back(c < l[i] ? unit : TruncatedSeries::one(f, L[i].precision()));
            }
        }
        diagonal.expect(ts == EndoMatrix::diagonal(ts.summands(), expected), tag + ", a = " + unit.to_string());
        inverse.expect(ts * endoalg::tilde(L, l, EndoMatrix::scalar(lp, unit.inverse())) ==
                           EndoMatrix::identity(ts.summands(), f),
                       tag + ", a = " + unit.to_string());
        if (all_equal) {
            std::vector<TruncatedSeries> e;
            for (std::size_t i = 0; i < L.size(); ++i)
                e.push_back(l[i] > 0 ? unit : TruncatedSeries::one(f, L[i].precision()));
            std::vector<TruncatedSeries> block;
            for (int c = 0; c < q; ++c) block.insert(block.end(), e.begin(), e.end());
            uniform.expect(ts == EndoMatrix::diagonal(ts.summands(), block), tag + ", a = " + unit.to_string());
        }
    }
    result.notes.push_back("uniform-multiplicity scalar cases: " + std::to_string(uniform.count()) + " of " +
                           std::to_string(config.random_cases));
    result.notes.push_back("with unequal multiplicities block c carries a only on summands with l_i > c, so "
                           "tilde(a 1_L') is e_0 + ... + e_(q-1) rather than e 1_{L^q}");
    for (const Check* c : {&multiplicative, &identity, &diagonal, &inverse, &uniform}) result.verdicts.push_back(c->done());
    std::sort(result.notes.begin(), result.notes.end());
    result.notes.erase(std::unique(result.notes.begin(), result.notes.end()), result.notes.end());
    return result;
}

SuiteResult run_phi(const VerifyConfig& config) {
    SuiteResult result;
    add_field_note(result, config);
    const auto& f = config.field;
    auto rng = make_rng(config, 300);

    Check det_mult("phi", "det_evaluation(alpha beta) = det_evaluation(alpha) det_evaluation(beta)");
    Check det_unit("phi", "det_evaluation of a unit is a unit of k[[t]]");
    Check phi_mult("phi", "phi(alpha beta) = phi(alpha) phi(beta)");
    Check witness("phi", "phi(diag(a_1, ..., a_n, f a_1^-1 ... a_n^-1)) = (a_1, ..., a_n, f)");
    Check identity("phi", "phi(1) = (1, ..., 1, 1)");

    const int n_top = std::max(1, std::min(config.n_max, 3));
    for (int s = 0; s < config.random_cases; ++s) {
        const int n = 1 + s % n_top;
        const int precision = curve_precision(config, n, result.notes);
        const ModuleList L = endoalg::a2n_summands(n, precision);
        const std::string tag = "n = " + std::to_string(n) + ", N = " + std::to_string(precision);

        const EndoMatrix a = endoalg::random_unit(L, f, rng);
        const EndoMatrix b = endoalg::random_unit(L, f, rng);
        const EndoMatrix ab = a * b;
        const TruncatedSeries da = endoalg::det_evaluation(a);
        det_mult.expect(endoalg::det_evaluation(ab) == da * endoalg::det_evaluation(b), tag + ", alpha = " + a.to_string());
        det_unit.expect(da.is_unit(), tag + ", alpha = " + a.to_string());
        phi_mult.expect(endoalg::phi_map(ab) == endoalg::phi_product(endoalg::phi_map(a), endoalg::phi_map(b)),
                        tag + ", alpha = " + a.to_string() + ", beta = " + b.to_string());

        std::vector<field::Scalar> residues;
        std::vector<TruncatedSeries> diag;
        field::Scalar product(f, 1);
        for (int i = 0; i < n; ++i) {
            const auto r = field::random_nonzero_scalar(f, rng);
            residues.push_back(r);
            product *= r;
            diag.push_back(TruncatedSeries::constant(r, precision));
        }
        const TruncatedSeries unit = endoalg::random_local_unit(L.back(), f, rng);
        diag.push_back(product.inverse() * unit);
        const auto value = endoalg::phi_map(EndoMatrix::diagonal(L, diag));
        witness.expect(value.residues == residues && value.det == unit, tag + ", f = " + unit.to_string());

        const auto one = endoalg::phi_map(EndoMatrix::identity(L, f));
        identity.expect(one.det == TruncatedSeries::one(f, precision) &&
                            std::all_of(one.residues.begin(), one.residues.end(),
                                        [](const field::Scalar& x) { return x.is_one(); }),
                        tag);
    }
    for (const Check* c : {&det_mult, &det_unit, &phi_mult, &witness, &identity}) result.verdicts.push_back(c->done());
    std::sort(result.notes.begin(), result.notes.end());
    result.notes.erase(std::unique(result.notes.begin(), result.notes.end()), result.notes.end());
    return result;
}

SuiteResult run_suite(const std::string& name, const VerifyConfig& config) {
    if (config.n_max < 1) throw std::invalid_argument("n-max must be at least 1");
    if (name == "endoring") return run_endoring(config);
    if (name == "factorizations") return run_factorizations(config);
    if (name == "tilde") return run_tilde(config);
    if (name == "phi") return run_phi(config);
    if (name == "all") {
        SuiteResult all;
        for (const auto& part : {run_endoring(config), run_factorizations(config), run_tilde(config), run_phi(config)}) {
            all.verdicts.insert(all.verdicts.end(), part.verdicts.begin(), part.verdicts.end());
            for (const auto& note : part.notes)
                if (std::find(all.notes.begin(), all.notes.end(), note) == all.notes.end()) all.notes.push_back(note);
        }
        return all;
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace ccmk::verify
