#include "ccmk/field.hpp"

#include <algorithm>
#include <cctype>

namespace ccmk::field {

Field Field::prime(unsigned long p) {
    mpz_class z(p);
    if (p <= 5 || mpz_probab_prime_p(z.get_mpz_t(), 30) == 0)
        throw std::invalid_argument("verification field must be F_p with p a prime > 5, got " +
                                    std::to_string(p));
    return Field(p);
}

Field Field::parse(const std::string& name) {
    std::string s;
    for (char c : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "q" || s == "rationals" || s == "qq") return rationals();
    std::string digits = (!s.empty() && s[0] == 'f') ? s.substr(1) : s;
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw std::invalid_argument("unknown field '" + name + "' (expected q or f<prime>)");
    if (digits.size() > 9) throw std::invalid_argument("prime too large: " + name);
    return prime(std::stoul(digits));
}

std::string Field::name() const {
    return p_ == 0 ? "Q" : "F" + std::to_string(p_);
}

Scalar::Scalar(const Field& f, long v) : field_(f), value_(v) { normalize(); }
Scalar::Scalar(const Field& f, const mpq_class& v) : field_(f), value_(v) { normalize(); }

void Scalar::normalize() {
    value_.canonicalize();
    if (field_.is_rationals()) return;
    mpz_class m(field_.characteristic());
    if (value_.get_den() == 1) {
        mpz_class r = value_.get_num() % m;
        if (r < 0) r += m;
        value_.get_num() = r;
        return;
    }
    mpz_class den = value_.get_den() % m;
    if (den == 0) throw std::domain_error("denominator vanishes in " + field_.name());
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
    mpz_class r = value_.get_num() * inv % m;
    if (r < 0) r += m;
    value_ = mpq_class(r);
}

void Scalar::same_field(const Scalar& o) const {
    if (!(field_ == o.field_))
        throw std::invalid_argument("mixed fields: " + field_.name() + " vs " + o.field_.name());
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Scalar s = *this;
    s.value_ = 1 / value_;
    s.normalize();
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    s.value_ = -value_;
    s.normalize();
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    same_field(o);
    value_ += o.value_;
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    same_field(o);
    value_ -= o.value_;
    normalize();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    same_field(o);
    value_ *= o.value_;
    normalize();
    return *this;
}

std::string Scalar::to_string() const { return value_.get_str(); }

Scalar random_scalar(const Field& f, std::mt19937_64& rng, int bound) {
    if (!f.is_rationals()) {
        std::uniform_int_distribution<unsigned long> d(0, f.characteristic() - 1);
        return Scalar(f, static_cast<long>(d(rng)));
    }
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, bound);
    std::bernoulli_distribution fraction(0.25);
    long n = num(rng);
    long d = fraction(rng) ? den(rng) : 1;
    return Scalar(f, mpq_class(n, d));
}

Scalar random_nonzero_scalar(const Field& f, std::mt19937_64& rng, int bound) {
    for (;;) {
        Scalar s = random_scalar(f, rng, bound);
        if (!s.is_zero()) return s;
    }
}

}  // namespace ccmk::field
