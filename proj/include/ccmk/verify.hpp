#pragma once

// Verification suites over the endomorphism-ring arithmetic. Each suite
// produces a list of verdicts; a suite passes when every verdict holds.

#include "ccmk/endoalg.hpp"
#include "ccmk/field.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ccmk::verify {

struct VerifyConfig {
    int n_max = 5;
    field::Field field = field::Field::prime(7);
    std::uint64_t seed = 20240531;
    int precision = 50;
    /// Random matrices per n for the is_unit oracle comparison.
    int unit_samples = 200;
    /// Radical elements per n, each tested against radical_partners random betas.
    int radical_samples = 4;
    int radical_partners = 50;
    /// Random cases for tilde, det_evaluation and phi.
    int random_cases = 100;
};

struct Verdict {
    std::string suite;
    std::string case_name;
    bool holds = false;
    std::optional<std::string> counterexample;
};

struct SuiteResult {
    std::vector<Verdict> verdicts;
    std::vector<std::string> notes;

    bool all_hold() const;
    std::size_t failures() const;
};

const std::vector<std::string>& suite_names();

/// is_unit against the linear-system inverse on k[x]/x^n, and the radical
/// criterion 1 - beta alpha invertible.
SuiteResult run_endoring(const VerifyConfig& config);
/// Every truncated(n, i, r) and a2n(n, i, j, f) case up to n_max.
SuiteResult run_factorizations(const VerifyConfig& config);
/// Identity, multiplicativity, inverse law and the scalar form of tilde.
SuiteResult run_tilde(const VerifyConfig& config);
/// det_evaluation and phi_map on A_2n summands.
SuiteResult run_phi(const VerifyConfig& config);

/// "endoring", "factorizations", "tilde", "phi" or "all"; throws
/// std::invalid_argument otherwise.
SuiteResult run_suite(const std::string& name, const VerifyConfig& config);

}  // namespace ccmk::verify
