#pragma once

#include <string>
#include <vector>

#include "riroch/rational.hpp"

namespace riroch {

/// Polynomial in the formal twist variable N with rational coefficients.
/// Canonical form has no trailing zero coefficients; the zero polynomial
/// is the empty coefficient vector, so equality is structural.
class TwistPoly {
public:
    TwistPoly() = default; // zero
    TwistPoly(const Rational& constant);
    TwistPoly(long constant) : TwistPoly(Rational(constant)) {}
    TwistPoly(int constant) : TwistPoly(Rational(constant)) {}

    /// The variable N itself.
    static TwistPoly variable();
    static TwistPoly monomial(int exponent, const Rational& c);
    static TwistPoly from_coefficients(std::vector<Rational> coeffs);

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_constant() const { return degree() <= 0; }
    /// Coefficient of N^k (zero beyond the degree).
    Rational coeff(int k) const;

    TwistPoly operator-() const;
    TwistPoly& operator+=(const TwistPoly& o);
    TwistPoly& operator-=(const TwistPoly& o);
    TwistPoly& operator*=(const TwistPoly& o);
    TwistPoly& operator*=(const Rational& c);

    TwistPoly pow(unsigned k) const;

    /// Exact evaluation at N = at (ring homomorphism Q[N] -> Q).
    Rational eval(const Rational& at) const;

    friend TwistPoly operator+(TwistPoly a, const TwistPoly& b) { return a += b; }
    friend TwistPoly operator-(TwistPoly a, const TwistPoly& b) { return a -= b; }
    friend TwistPoly operator*(TwistPoly a, const TwistPoly& b) { return a *= b; }
    friend TwistPoly operator*(TwistPoly a, const Rational& c) { return a *= c; }
    friend TwistPoly operator*(const Rational& c, TwistPoly a) { return a *= c; }
    friend bool operator==(const TwistPoly& a, const TwistPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const TwistPoly& a, const TwistPoly& b) { return !(a == b); }

    /// Descending powers, explicit '*', rationals as p/q: "6*N^2 - 60*N - 20".
    std::string str(const std::string& var = "N") const;

private:
    void normalize();
    std::vector<Rational> c_; // c_[k] = coefficient of N^k
};

} // namespace riroch
