#pragma once

// Endomorphism rings of the two monomial module families
//   m^0 + m^1 + ... + m^(n-1)   over k[x]/x^n,
//   R_0 + R_1 + ... + R_n       over k[[t^2, t^(2n+1)]], R_i = k[[t^2, t^(2(n-i)+1)]],
// where every homomorphism between summands is multiplication by a series.
// Matrices follow the usual convention: entry (i, j) maps summand j to summand i.

#include "ccmk/field.hpp"
#include "ccmk/series.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccmk::endoalg {

using field::Field;
using field::Scalar;
using series::NumericalSemigroup;
using series::TruncatedSeries;

class InsufficientPrecision : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MembershipError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotAUnit : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

enum class ModuleKind { IdealPower, Overring };

class ModuleDescriptor {
public:
    /// m^i inside k[x]/x^n, 0 <= i < n.
    static ModuleDescriptor ideal_power(int n, int i);
    /// R_i over the A_2n curve at series precision N, 0 <= i <= n.
    static ModuleDescriptor overring(int n, int i, int precision);

    ModuleKind kind() const { return kind_; }
    int index() const { return index_; }
    int n() const { return n_; }
    /// Length of multiplier series: n for k[x]/x^n, N for the curve.
    int precision() const { return precision_; }

    /// Exponents of the monomials spanning the module (k-basis for m^i, the
    /// semigroup for R_i).
    bool in_support(int e) const;
    /// Minimal monomial generators over the base ring.
    std::vector<int> generators() const;
    NumericalSemigroup semigroup() const;
    /// Precision needed to decide membership of f * source inside this target.
    int conductor() const;
    std::string name() const;

    friend bool operator==(const ModuleDescriptor&, const ModuleDescriptor&) = default;

private:
    ModuleDescriptor(ModuleKind k, int n, int i, int precision)
        : kind_(k), index_(i), n_(n), precision_(precision) {}
    ModuleKind kind_;
    int index_;
    int n_;
    int precision_;
};

using ModuleList = std::vector<ModuleDescriptor>;

ModuleList truncated_summands(int n);
ModuleList a2n_summands(int n, int precision);

/// Whether multiplication by f maps source into target. Exact for k[x]/x^n;
/// for the curve requires precision >= conductor(target) + max generator of
/// source, else InsufficientPrecision.
bool hom_membership(const TruncatedSeries& f, const ModuleDescriptor& source,
                    const ModuleDescriptor& target);

/// Exponents a (below max_degree, default the precision) with t^a mapping
/// source into target and acting nontrivially.
std::vector<int> hom_monomial_basis(const ModuleDescriptor& source, const ModuleDescriptor& target,
                                    int max_degree = -1);

struct HomElement {
    ModuleDescriptor source;
    ModuleDescriptor target;
    TruncatedSeries multiplier;

    /// Throws MembershipError if the multiplier does not define a map.
    static HomElement make(const ModuleDescriptor& source, const ModuleDescriptor& target,
                           TruncatedSeries multiplier);
    static HomElement identity(const ModuleDescriptor& m, const Field& f);
    /// Inclusion of source into a larger target.
    static HomElement inclusion(const ModuleDescriptor& source, const ModuleDescriptor& target,
                                const Field& f);
};

class EndoMatrix {
public:
    /// entries row-major; each is checked with hom_membership and reduced to
    /// its canonical representative.
    EndoMatrix(ModuleList summands, std::vector<TruncatedSeries> entries);

    static EndoMatrix identity(const ModuleList& summands, const Field& f);
    static EndoMatrix zero(const ModuleList& summands, const Field& f);
    /// Multiplication by a on every summand.
    static EndoMatrix scalar(const ModuleList& summands, const TruncatedSeries& a);
    static EndoMatrix diagonal(const ModuleList& summands, const std::vector<TruncatedSeries>& d);

    std::size_t size() const { return summands_.size(); }
    const ModuleList& summands() const { return summands_; }
    const Field& field() const { return field_; }
    const TruncatedSeries& entry(std::size_t i, std::size_t j) const { return entries_[i * size() + j]; }
    HomElement hom(std::size_t i, std::size_t j) const;
    EndoMatrix with_entry(std::size_t i, std::size_t j, const TruncatedSeries& f) const;

    EndoMatrix operator-() const;
    friend EndoMatrix operator+(const EndoMatrix& a, const EndoMatrix& b);
    friend EndoMatrix operator-(const EndoMatrix& a, const EndoMatrix& b);
    friend EndoMatrix operator*(const EndoMatrix& a, const EndoMatrix& b);
    /// Exact for k[x]/x^n; coefficientwise to precision for the curve.
    friend bool operator==(const EndoMatrix& a, const EndoMatrix& b);

    std::string to_string() const;

private:
    void check_same_shape(const EndoMatrix& o) const;

    ModuleList summands_;
    Field field_;
    std::vector<TruncatedSeries> entries_;
};

/// First (i, j) where the two differ.
std::optional<std::pair<std::size_t, std::size_t>> first_difference(const EndoMatrix& a,
                                                                    const EndoMatrix& b);

/// For pairwise non-isomorphic summands: every diagonal entry is a unit of
/// its local endomorphism ring. Repeated summands are handled through the
/// residue matrices between isomorphic copies.
bool is_unit(const EndoMatrix& a);
/// Residue matrices between isomorphic copies all vanish (for distinct
/// summands: every diagonal entry is a non-unit).
bool in_radical(const EndoMatrix& a);

/// d_j(alpha): identity except alpha at (j, j). Indices are 0-based.
EndoMatrix elementary_d(const ModuleList& summands, std::size_t j, const TruncatedSeries& alpha);
/// e_ij(beta): identity plus beta at (i, j), i != j. Indices are 0-based.
EndoMatrix elementary_e(const ModuleList& summands, std::size_t i, std::size_t j,
                        const TruncatedSeries& beta);

/// L' = sum of L_i^(l_i), ordered summand by summand.
ModuleList expand_multiplicities(const ModuleList& L, const std::vector<int>& multiplicities);
/// Smallest q with L' a direct summand of L^(+q).
int tilde_q(const std::vector<int>& multiplicities);
/// psi (alpha + 1_{L''}) psi^-1 on L^(+q), block c holding the c-th copy of
/// every summand; alpha lives on expand_multiplicities(L, l).
EndoMatrix tilde(const ModuleList& L, const std::vector<int>& multiplicities, const EndoMatrix& alpha);

/// det(alpha_ij(1)) in k[[t]], for matrices over R_0..R_n.
TruncatedSeries det_evaluation(const EndoMatrix& alpha);

struct PhiValue {
    std::vector<Scalar> residues;
    TruncatedSeries det;

    friend bool operator==(const PhiValue& a, const PhiValue& b) {
        return a.residues == b.residues && a.det == b.det;
    }
};

/// (alpha_11(1), ..., alpha_nn(1) mod m, det(alpha_ij(1))); NotAUnit unless is_unit.
PhiValue phi_map(const EndoMatrix& alpha);
/// Componentwise product in (k*)^n + k[[t]]*.
PhiValue phi_product(const PhiValue& a, const PhiValue& b);

struct FactorizationCase {
    enum class Kind { Truncated, A2n };
    Kind kind;
    int n;
    /// 1-based summand index as in the displayed products.
    int i;
    /// A2n only: selects the gamma_j product instead of delta_i.
    std::optional<int> j;
    TruncatedSeries r;

    /// r in 1 + x k[x]/x^n, 1 <= i <= n-1.
    static FactorizationCase truncated(int n, int i, TruncatedSeries r);
    /// f in 1 + m_(i-1), 1 <= i <= n, i < j <= n.
    static FactorizationCase a2n(int n, int i, std::optional<int> j, TruncatedSeries f);

    std::string label() const;
};

struct FactorizationVerdict {
    std::string label;
    bool holds = false;
    /// Which identity was checked, in words.
    std::string identity;
    std::optional<std::string> counterexample;
};

/// Multiplies out the elementary product and compares it with the diagonal
/// left-hand side. InsufficientPrecision if N < 4n + 2 for the curve.
FactorizationVerdict verify_factorization(const FactorizationCase& c);

/// beta with alpha * beta = 1, found by solving the linear system over the
/// field on the monomial basis of End. Only for k[x]/x^n summands.
std::optional<EndoMatrix> solve_right_inverse(const EndoMatrix& alpha);

TruncatedSeries random_hom(const ModuleDescriptor& source, const ModuleDescriptor& target,
                           const Field& f, std::mt19937_64& rng);
/// Random unit of the local ring End(m).
TruncatedSeries random_local_unit(const ModuleDescriptor& m, const Field& f, std::mt19937_64& rng);
EndoMatrix random_endomorphism(const ModuleList& summands, const Field& f, std::mt19937_64& rng);
/// Lower unitriangular * diagonal units * upper unitriangular.
EndoMatrix random_unit(const ModuleList& summands, const Field& f, std::mt19937_64& rng);
/// Random element of the radical.
EndoMatrix random_radical(const ModuleList& summands, const Field& f, std::mt19937_64& rng);

}  // namespace ccmk::endoalg
