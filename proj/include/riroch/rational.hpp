#pragma once

#include <gmpxx.h>

#include <string>

#include "riroch/error.hpp"

namespace riroch {

/// Exact rational scalar over arbitrary-precision integers.
///
/// Invariants: always in lowest terms, denominator positive, zero stored
/// as 0/1. All arithmetic is exact; there is no floating point anywhere
/// in this library.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(static_cast<long>(n)) {}
    Rational(long n) : v_(n) {}
    Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& num, const mpz_class& den);
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    /// Parses "p" or "p/q" (arbitrary size, optional leading '-').
    static Rational parse(const std::string& text);

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_negative() const { return sgn(v_) < 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    Rational pow(unsigned long k) const;
    Rational abs() const { return is_negative() ? -*this : *this; }
    Rational reciprocal() const;

    /// "p" when integral, "p/q" otherwise.
    std::string str() const;

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    mpq_class v_; // canonical form maintained by mpq arithmetic
};

mpz_class factorial(unsigned long n);
mpz_class binomial(unsigned long n, unsigned long k);
mpz_class int_pow(const mpz_class& base, unsigned long k);

} // namespace riroch
