#include "riroch/power_series.hpp"

#include <algorithm>

namespace riroch {

PowerSeries::PowerSeries(int order) {
    if (order < 0)
        throw DomainError("power series order must be non-negative");
    c_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

PowerSeries PowerSeries::constant(int order, const Rational& c) {
    PowerSeries s(order);
    s[0] = c;
    return s;
}

PowerSeries PowerSeries::monomial(int order, int exponent, const Rational& c) {
    PowerSeries s(order);
    if (exponent >= 0 && exponent <= order)
        s[exponent] = c;
    return s;
}

PowerSeries PowerSeries::from_coefficients(std::vector<Rational> coeffs) {
    if (coeffs.empty())
        throw DomainError("power series needs at least the constant coefficient");
    PowerSeries s(static_cast<int>(coeffs.size()) - 1);
    s.c_ = std::move(coeffs);
    return s;
}

int PowerSeries::valuation() const {
    for (int k = 0; k <= order(); ++k)
        if (!c_[static_cast<std::size_t>(k)].is_zero())
            return k;
    return order() + 1;
}

PowerSeries PowerSeries::truncated(int order) const {
    PowerSeries r(order);
    for (int k = 0; k <= std::min(order, this->order()); ++k)
        r[k] = (*this)[k];
    return r;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    int n = std::min(a.order(), b.order());
    PowerSeries r(n);
    for (int k = 0; k <= n; ++k)
        r[k] = a[k] + b[k];
    return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    int n = std::min(a.order(), b.order());
    PowerSeries r(n);
    for (int k = 0; k <= n; ++k)
        r[k] = a[k] - b[k];
    return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    int n = std::min(a.order(), b.order());
    PowerSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (a[i].is_zero())
            continue;
        for (int j = 0; i + j <= n; ++j)
            r[i + j] += a[i] * b[j];
    }
    return r;
}

PowerSeries operator*(const Rational& c, const PowerSeries& a) {
    PowerSeries r(a.order());
    for (int k = 0; k <= a.order(); ++k)
        r[k] = c * a[k];
    return r;
}

PowerSeries series_exp(const PowerSeries& s) {
    if (!s[0].is_zero())
        throw DomainError("series_exp requires a zero constant term");
    int n = s.order();
    // s^k has valuation >= k, so the sum below is exact at this order.
    PowerSeries result = PowerSeries::constant(n, Rational(1));
    PowerSeries term = PowerSeries::constant(n, Rational(1));
    for (int k = 1; k <= n; ++k) {
        term = term * s;
        result = result + Rational(mpz_class(1), factorial(static_cast<unsigned long>(k))) * term;
    }
    return result;
}

PowerSeries series_log(const PowerSeries& s) {
    if (s[0] != Rational(1))
        throw DomainError("series_log requires constant term 1");
    int n = s.order();
    PowerSeries u = s - PowerSeries::constant(n, Rational(1));
    PowerSeries result(n);
    PowerSeries term = PowerSeries::constant(n, Rational(1));
    for (int k = 1; k <= n; ++k) {
        term = term * u;
        Rational coeff = Rational((k % 2 == 1) ? 1L : -1L, static_cast<long>(k));
        result = result + coeff * term;
    }
    return result;
}

PowerSeries series_div(const PowerSeries& num, const PowerSeries& den) {
    int n = std::min(num.order(), den.order());
    PowerSeries a = num.truncated(n);
    PowerSeries b = den.truncated(n);
    int v = b.valuation();
    if (v > n)
        throw DomainError("division by zero series");
    if (a.valuation() < v)
        throw DomainError("series division has no invertible alignment");
    int m = n - v;
    PowerSeries na(m), nb(m);
    for (int k = 0; k <= m; ++k) {
        na[k] = a[k + v];
        nb[k] = b[k + v];
    }
    PowerSeries r(m);
    for (int k = 0; k <= m; ++k) {
        Rational acc = na[k];
        for (int j = 0; j < k; ++j)
            acc -= r[j] * nb[k - j];
        r[k] = acc / nb[0];
    }
    return r;
}

} // namespace riroch
