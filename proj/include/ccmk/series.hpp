#pragma once

// Power series truncated at a fixed precision N, with support constrained to
// a numerical semigroup <2, 2m+1> (m = 0 gives all of N). The same type
// carries elements of k[x]/x^N, where truncation is exact.

#include "ccmk/field.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ccmk::series {

/// <2, 2m+1>; m = 0 is the full monoid of naturals. The chain is nested:
/// <2, 2m+1> contains <2, 2m'+1> whenever m <= m'.
class NumericalSemigroup {
public:
    static NumericalSemigroup naturals() { return NumericalSemigroup(0); }
    static NumericalSemigroup two_generated(int m);

    int m() const { return m_; }
    bool contains(int e) const { return e >= 0 && (e % 2 == 0 || e >= 2 * m_ + 1); }
    /// Least c with every integer >= c inside.
    int conductor() const { return 2 * m_; }
    bool is_naturals() const { return m_ == 0; }
    std::string to_string() const;

    /// Smallest semigroup of the chain containing both.
    static NumericalSemigroup join(const NumericalSemigroup& a, const NumericalSemigroup& b);

    friend bool operator==(const NumericalSemigroup&, const NumericalSemigroup&) = default;

private:
    explicit NumericalSemigroup(int m) : m_(m) {}
    int m_ = 0;
};

class TruncatedSeries {
public:
    using Scalar = field::Scalar;

    TruncatedSeries(field::Field f, int precision,
                    NumericalSemigroup sg = NumericalSemigroup::naturals());

    static TruncatedSeries zero(const field::Field& f, int precision,
                                NumericalSemigroup sg = NumericalSemigroup::naturals());
    static TruncatedSeries one(const field::Field& f, int precision,
                               NumericalSemigroup sg = NumericalSemigroup::naturals());
    static TruncatedSeries constant(const Scalar& c, int precision,
                                    NumericalSemigroup sg = NumericalSemigroup::naturals());
    static TruncatedSeries monomial(const Scalar& c, int exponent, int precision,
                                    NumericalSemigroup sg = NumericalSemigroup::naturals());
    /// coeffs[e] is the coefficient of t^e; longer inputs are truncated.
    static TruncatedSeries from_coefficients(const field::Field& f, const std::vector<long>& coeffs,
                                             int precision,
                                             NumericalSemigroup sg = NumericalSemigroup::naturals());

    const field::Field& field() const { return field_; }
    int precision() const { return static_cast<int>(coeffs_.size()); }
    const NumericalSemigroup& semigroup() const { return semigroup_; }

    Scalar coefficient(int e) const;
    void set_coefficient(int e, const Scalar& c);
    Scalar constant_term() const { return coefficient(0); }
    /// Exponent of the lowest nonzero known term.
    std::optional<int> valuation() const;
    std::vector<int> support() const;
    bool is_zero() const { return !valuation().has_value(); }
    bool is_unit() const { return !constant_term().is_zero(); }

    /// Reinterprets the element inside another semigroup ring; throws if the
    /// known support leaves it.
    TruncatedSeries in_semigroup(const NumericalSemigroup& sg) const;
    TruncatedSeries truncated(int precision) const;

    TruncatedSeries inverse() const;
    TruncatedSeries operator-() const;
    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const Scalar& c, const TruncatedSeries& a);

    /// Coefficientwise to the smaller of the two precisions.
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

    std::string to_string(const std::string& var = "t") const;

private:
    void check_compatible(const TruncatedSeries& o) const;

    field::Field field_;
    NumericalSemigroup semigroup_;
    std::vector<Scalar> coeffs_;
};

}  // namespace ccmk::series
