#include "ccmk/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccmk::series {

NumericalSemigroup NumericalSemigroup::two_generated(int m) {
    if (m < 0) throw std::invalid_argument("semigroup parameter must be >= 0");
    return NumericalSemigroup(m);
}

std::string NumericalSemigroup::to_string() const {
    if (m_ == 0) return "N";
    return "<2," + std::to_string(2 * m_ + 1) + ">";
}

NumericalSemigroup NumericalSemigroup::join(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return NumericalSemigroup(std::min(a.m_, b.m_));
}

TruncatedSeries::TruncatedSeries(field::Field f, int precision, NumericalSemigroup sg)
    : field_(f), semigroup_(sg) {
    if (precision < 0) throw std::invalid_argument("negative precision");
    coeffs_.assign(static_cast<std::size_t>(precision), Scalar(field_, 0));
}

TruncatedSeries TruncatedSeries::zero(const field::Field& f, int precision, NumericalSemigroup sg) {
    return TruncatedSeries(f, precision, sg);
}

TruncatedSeries TruncatedSeries::one(const field::Field& f, int precision, NumericalSemigroup sg) {
    return constant(Scalar(f, 1), precision, sg);
}

TruncatedSeries TruncatedSeries::constant(const Scalar& c, int precision, NumericalSemigroup sg) {
    return monomial(c, 0, precision, sg);
}

TruncatedSeries TruncatedSeries::monomial(const Scalar& c, int exponent, int precision,
                                          NumericalSemigroup sg) {
    TruncatedSeries s(c.field(), precision, sg);
    if (exponent < precision) s.set_coefficient(exponent, c);
    return s;
}

TruncatedSeries TruncatedSeries::from_coefficients(const field::Field& f, const std::vector<long>& coeffs,
                                                   int precision, NumericalSemigroup sg) {
    TruncatedSeries s(f, precision, sg);
    for (std::size_t e = 0; e < coeffs.size() && static_cast<int>(e) < precision; ++e)
        s.set_coefficient(static_cast<int>(e), Scalar(f, coeffs[e]));
    return s;
}

TruncatedSeries::Scalar TruncatedSeries::coefficient(int e) const {
    if (e < 0 || e >= precision()) {
        if (e >= precision()) throw std::out_of_range("coefficient beyond precision");
        return Scalar(field_, 0);
    }
    return coeffs_[static_cast<std::size_t>(e)];
}

void TruncatedSeries::set_coefficient(int e, const Scalar& c) {
    if (e < 0 || e >= precision()) throw std::out_of_range("exponent outside [0, precision)");
    if (!(c.field() == field_)) throw std::invalid_argument("coefficient from another field");
    if (!c.is_zero() && !semigroup_.contains(e))
        throw std::invalid_argument("exponent " + std::to_string(e) + " not in " + semigroup_.to_string());
    coeffs_[static_cast<std::size_t>(e)] = c;
}

std::optional<int> TruncatedSeries::valuation() const {
    for (int e = 0; e < precision(); ++e)
        if (!coeffs_[static_cast<std::size_t>(e)].is_zero()) return e;
    return std::nullopt;
}

std::vector<int> TruncatedSeries::support() const {
    std::vector<int> out;
    for (int e = 0; e < precision(); ++e)
        if (!coeffs_[static_cast<std::size_t>(e)].is_zero()) out.push_back(e);
    return out;
}

TruncatedSeries TruncatedSeries::in_semigroup(const NumericalSemigroup& sg) const {
    TruncatedSeries s(field_, precision(), sg);
    for (int e : support()) s.set_coefficient(e, coeffs_[static_cast<std::size_t>(e)]);
    return s;
}

TruncatedSeries TruncatedSeries::truncated(int precision) const {
    TruncatedSeries s(field_, std::min(precision, this->precision()), semigroup_);
    for (int e = 0; e < s.precision(); ++e) s.coeffs_[static_cast<std::size_t>(e)] = coeffs_[static_cast<std::size_t>(e)];
    return s;
}

void TruncatedSeries::check_compatible(const TruncatedSeries& o) const {
    if (!(field_ == o.field_))
        throw std::invalid_argument("series over different fields: " + field_.name() + " vs " + o.field_.name());
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (precision() == 0) return *this;
    if (!is_unit()) throw std::domain_error("series with zero constant term is not invertible");
    const int n = precision();
    TruncatedSeries inv(field_, n, semigroup_);
    const Scalar c0inv = coeffs_[0].inverse();
    inv.coeffs_[0] = c0inv;
    // b_k = -c0^{-1} * sum_{j=1..k} a_j b_{k-j}
    for (int k = 1; k < n; ++k) {
        Scalar acc(field_, 0);
        for (int j = 1; j <= k; ++j) {
            const auto& a = coeffs_[static_cast<std::size_t>(j)];
            if (a.is_zero()) continue;
            acc += a * inv.coeffs_[static_cast<std::size_t>(k - j)];
        }
        inv.coeffs_[static_cast<std::size_t>(k)] = -(c0inv * acc);
    }
    // The inverse of a unit of a semigroup ring stays in it; the assignments
    // above bypass the check, so verify once.
    for (int e : inv.support())
        if (!semigroup_.contains(e)) throw std::logic_error("inverse left the semigroup ring");
    return inv;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries s = *this;
    for (auto& c : s.coeffs_) c = -c;
    return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    check_compatible(o);
    const int n = std::min(precision(), o.precision());
    coeffs_.resize(static_cast<std::size_t>(n));
    semigroup_ = NumericalSemigroup::join(semigroup_, o.semigroup_);
    for (int e = 0; e < n; ++e) coeffs_[static_cast<std::size_t>(e)] += o.coeffs_[static_cast<std::size_t>(e)];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    return *this += -o;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_compatible(b);
    const int n = std::min(a.precision(), b.precision());
    TruncatedSeries r(a.field_, n, NumericalSemigroup::join(a.semigroup_, b.semigroup_));
    const auto sa = a.support();
    const auto sb = b.support();
    for (int i : sa) {
        if (i >= n) break;
        for (int j : sb) {
            if (i + j >= n) break;
            r.coeffs_[static_cast<std::size_t>(i + j)] +=
                a.coeffs_[static_cast<std::size_t>(i)] * b.coeffs_[static_cast<std::size_t>(j)];
        }
    }
    return r;
}

TruncatedSeries operator*(const TruncatedSeries::Scalar& c, const TruncatedSeries& a) {
    TruncatedSeries r = a;
    for (auto& x : r.coeffs_) x = c * x;
    return r;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (!(a.field_ == b.field_)) return false;
    const int n = std::min(a.precision(), b.precision());
    for (int e = 0; e < n; ++e)
        if (!(a.coeffs_[static_cast<std::size_t>(e)] == b.coeffs_[static_cast<std::size_t>(e)])) return false;
    return true;
}

std::string TruncatedSeries::to_string(const std::string& var) const {
    std::string out;
    for (int e : support()) {
        const Scalar& c = coeffs_[static_cast<std::size_t>(e)];
        std::string cs = c.to_string();
        const bool negative = !cs.empty() && cs[0] == '-';
        if (negative) cs.erase(0, 1);
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (e == 0) {
            out += cs;
        } else {
            if (cs != "1") out += cs + "*";
            out += e == 1 ? var : var + "^" + std::to_string(e);
        }
    }
    if (out.empty()) out = "0";
    return out + " + O(" + var + "^" + std::to_string(precision()) + ")";
}

}  // namespace ccmk::series
