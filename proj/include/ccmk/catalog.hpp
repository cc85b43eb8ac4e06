#pragma once

// Tabulated data for singularity families whose MCM category carries an
// n-cluster tilting object: the indecomposable summands, the n-AR sequences
// ending in each non-free summand, and the abelianized automorphism group.
//
// Sequences are stored data. Nothing here derives AR theory from a ring
// presentation.

#include "ccmk/forms.hpp"
#include "ccmk/groups.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace ccmk::catalog {

/// The residue field is a formal algebraically closed field of this
/// characteristic (0 or a prime).
struct FieldConfig {
    unsigned long characteristic = 0;
};

struct TruncatedPoly {  // k[x]/x^n, n >= 1
    int n = 1;
};
struct A2nCurve {  // k[[t^2, t^(2n+1)]], n >= 0
    int n = 0;
};
struct A1Surface {};      // k[[s^2, st, t^2]]
struct InvariantDim3 {};  // k[[x^2, xy, xz, y^2, yz, z^2]]

/// k[[x, y]] / (f_1 ... f_n) with smooth branches f_i. Linear parts decide
/// smoothness and adjacency exactly; distinctness of branches with
/// proportional linear parts is only decided for linear forms and must
/// otherwise be asserted.
struct ReducedHypersurfaceDim1 {
    std::vector<forms::BivariatePolynomial> forms;
    bool assert_hypotheses = false;
    std::string named_case;  // "A1", "D2n(3)", ... for convenience constructors
    std::vector<unsigned long> excluded_characteristics;  // beyond 2
};

/// k[[x, y, u, v]] / (f + uv) with n branches; 2-cluster tilting object
/// U_1 + ... + U_n, no tabulated sequences.
struct HypersurfaceDim3 {
    int n = 1;
};

enum class AdeType { A, D, E6, E7, E8 };

struct ADEMetadata {
    AdeType type = AdeType::A;
    int index = 1;  // n for A_n, D_n; ignored for E types
    int dim = 1;
};

using Family = std::variant<TruncatedPoly, A2nCurve, A1Surface, InvariantDim3,
                            ReducedHypersurfaceDim1, HypersurfaceDim3, ADEMetadata>;

struct RingSpec {
    Family family;
    FieldConfig field;
};

RingSpec truncated_poly(int n);
RingSpec a2n_curve(int n);
RingSpec a1_surface();
RingSpec invariant_dim3();
RingSpec hypersurface_dim1(std::vector<forms::BivariatePolynomial> forms,
                           bool assert_hypotheses = false);
/// (x - y)(x + y)
RingSpec a1_dim1();
/// (x - y^(n-1)) y (x + y^(n-1)), n >= 2; hypotheses asserted.
RingSpec d2n_dim1(int n);
/// (x - y^n)(x + y^n); aut_ab only for n > 1 (adjacency fails).
RingSpec a2n_minus1_dim1(int n);
RingSpec hypersurface_dim3(int n);
RingSpec ade(AdeType type, int index, int dim);

RingSpec with_characteristic(RingSpec spec, unsigned long p);

/// Stable identifier, matching the CLI family names ("truncated-poly", ...).
std::string family_id(const RingSpec& spec);
/// Human-readable, e.g. "TruncatedPoly(n=3)".
std::string describe(const RingSpec& spec);
std::string ade_equation(const ADEMetadata& m);

enum class Severity { Error, Warning };

struct Diagnostic {
    Severity severity = Severity::Error;
    std::string code;
    std::string message;
};

std::vector<Diagnostic> validate(const RingSpec& spec);
bool has_errors(const std::vector<Diagnostic>& diagnostics);

class InvalidSpec : public std::runtime_error {
public:
    explicit InvalidSpec(std::vector<Diagnostic> diagnostics);
    const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

private:
    std::vector<Diagnostic> diagnostics_;
};

/// Multiplicity vector over the summand list: entry l counts copies of L_l.
using Multiplicities = std::vector<int>;

/// 0 -> C^n -> ... -> C^0 -> L_end -> 0, stored as terms[i] = C^i.
struct ArSequence {
    std::size_t end = 0;
    std::vector<Multiplicities> terms;
};

struct ClusterTiltingData {
    std::string ring;
    int cluster_n = 1;
    std::vector<std::string> summands;
    std::size_t free_index = 0;
    /// One sequence per non-free summand, in summand order; empty optional
    /// when the family has no tabulated sequences.
    std::optional<std::vector<ArSequence>> sequences;
    std::string sequences_unavailable_reason;
    /// Canonical form.
    std::optional<groups::StructuredAbelianGroup> aut_ab;
    /// Positions in aut_ab->atoms of the residue torus (k*)^(t+1).
    std::vector<std::size_t> torus_marks;
    std::vector<std::string> notes;

    std::size_t t() const { return summands.size() - 1; }
    std::vector<std::size_t> non_free() const;
};

class MetadataOnly : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Throws InvalidSpec when validate() reports errors and MetadataOnly for
/// families without summand data.
ClusterTiltingData resolve(const RingSpec& spec);

struct FamilyDescriptor {
    std::string id;
    std::string name;
    std::string parameters;
    std::string characteristic;  // e.g. "char != 2,3,5"
    bool g0_available = false;
    bool g1_available = false;
    bool aut_available = false;
    bool metadata_only = false;
    std::string availability;  // one-line summary
};

std::vector<FamilyDescriptor> list_families();

}  // namespace ccmk::catalog
