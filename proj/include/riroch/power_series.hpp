#pragma once

#include <vector>

#include "riroch/rational.hpp"

namespace riroch {

/// Univariate power series in x with rational coefficients, truncated at a
/// fixed order. Coefficient k of any operation depends only on input
/// coefficients at exponents <= k, so truncation commutes with arithmetic.
class PowerSeries {
public:
    explicit PowerSeries(int order);
    static PowerSeries constant(int order, const Rational& c);
    static PowerSeries monomial(int order, int exponent, const Rational& c = Rational(1));
    static PowerSeries from_coefficients(std::vector<Rational> coeffs);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
    Rational& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }

    /// Exponent of the lowest nonzero coefficient; order()+1 for the zero series.
    int valuation() const;
    bool is_zero() const { return valuation() > order(); }

    PowerSeries truncated(int order) const;

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const Rational& c, const PowerSeries& a);
    friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.c_ == b.c_; }

private:
    std::vector<Rational> c_; // c_[k] = coefficient of x^k; size = order+1
};

/// Formal exponential. Requires a zero constant term.
PowerSeries series_exp(const PowerSeries& s);

/// Formal logarithm. Requires constant term 1; inverse of series_exp.
PowerSeries series_log(const PowerSeries& s);

/// Division num/den. When both vanish at 0, a common factor of x is
/// cancelled first; rejected if no invertible alignment exists
/// (valuation(num) < valuation(den), or den = 0). The result order drops
/// by the cancelled valuation.
PowerSeries series_div(const PowerSeries& num, const PowerSeries& den);

} // namespace riroch
