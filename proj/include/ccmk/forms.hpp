#pragma once

// Polynomials in x, y with rational coefficients, used to describe the
// branches f_1, ..., f_n of a plane curve singularity.
//
// Grammar (whitespace is ignored everywhere):
//   form   := [sign] term (sign term)*
//   term   := coeff ['*'] factors | factors | coeff
//   coeff  := digits ['/' digits]
//   factors:= factor (['*'] factor)*
//   factor := ('x' | 'y') ['^' (digits | '{' digits '}')]
// e.g. "x - y", "2x + 3/2 y", "x - y^3", "x+y^{2}".

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ccmk::forms {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BivariatePolynomial {
public:
    using Exponents = std::pair<int, int>;  // (deg_x, deg_y)

    BivariatePolynomial() = default;
    static BivariatePolynomial parse(const std::string& text);
    static BivariatePolynomial linear(const mpq_class& a, const mpq_class& b);

    const std::map<Exponents, mpq_class>& terms() const { return terms_; }
    mpq_class coefficient(int dx, int dy) const;
    mpq_class constant_term() const { return coefficient(0, 0); }
    /// Coefficients (a, b) of the degree-one part a x + b y.
    std::pair<mpq_class, mpq_class> linear_part() const;
    bool is_homogeneous_linear() const;
    bool is_zero() const { return terms_.empty(); }

    std::string to_string() const;

private:
    void add_term(Exponents e, const mpq_class& c);
    std::map<Exponents, mpq_class> terms_;
};

/// Comma-separated list of forms.
std::vector<BivariatePolynomial> parse_form_list(const std::string& text);

}  // namespace ccmk::forms
