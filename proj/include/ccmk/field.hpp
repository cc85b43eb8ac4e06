#pragma once

// Exact coefficient fields for identity checking: Q, or F_p with p > 5.

#include <gmpxx.h>

#include <random>
#include <stdexcept>
#include <string>

namespace ccmk::field {

class Field {
public:
    static Field rationals() { return Field(0); }
    /// Throws std::invalid_argument unless p is a prime > 5.
    static Field prime(unsigned long p);
    /// "q" / "Q" / "rationals", or "fP" / "FP" / "P" for a prime P.
    static Field parse(const std::string& name);

    unsigned long characteristic() const { return p_; }
    bool is_rationals() const { return p_ == 0; }
    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    explicit Field(unsigned long p) : p_(p) {}
    unsigned long p_ = 0;
};

class Scalar {
public:
    Scalar() = default;  // 0 in Q
    Scalar(const Field& f, long v);
    Scalar(const Field& f, const mpq_class& v);

    const Field& field() const { return field_; }
    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }
    /// Canonical representative: reduced fraction, or integer in [0, p).
    const mpq_class& value() const { return value_; }

    Scalar inverse() const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.field_ == b.field_ && a.value_ == b.value_;
    }

    std::string to_string() const;

private:
    void normalize();
    void same_field(const Scalar& o) const;

    Field field_ = Field::rationals();
    mpq_class value_ = 0;
};

/// Uniform over F_p; over Q a small integer or p/q with |p|,|q| <= bound.
Scalar random_scalar(const Field& f, std::mt19937_64& rng, int bound = 5);
Scalar random_nonzero_scalar(const Field& f, std::mt19937_64& rng, int bound = 5);

}  // namespace ccmk::field
