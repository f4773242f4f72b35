#include "riroch/bundle.hpp"

namespace riroch {

VirtualBundle::VirtualBundle(long rank, GradedClass ch) : rank_(rank), ch_(std::move(ch)) {
    if (ch_.part(0) != TwistPoly(rank))
        throw DomainError("virtual bundle rank disagrees with ch part 0");
}

VirtualBundle VirtualBundle::trivial(int dim, long rank) {
    GradedClass g(dim);
    g.part(0) = TwistPoly(rank);
    return VirtualBundle(rank, std::move(g));
}

VirtualBundle VirtualBundle::line(int dim, const TwistPoly& twist) {
    GradedClass g(dim);
    for (int k = 0; k <= dim; ++k)
        g.part(k) = twist.pow(static_cast<unsigned>(k)) *
                    Rational(mpz_class(1), factorial(static_cast<unsigned long>(k)));
    return VirtualBundle(1, std::move(g));
}

VirtualBundle sum(const VirtualBundle& a, const VirtualBundle& b) {
    return VirtualBundle(a.rank() + b.rank(), a.ch() + b.ch());
}

VirtualBundle difference(const VirtualBundle& a, const VirtualBundle& b) {
    return VirtualBundle(a.rank() - b.rank(), a.ch() - b.ch());
}

VirtualBundle tensor(const VirtualBundle& a, const VirtualBundle& b) {
    return VirtualBundle(a.rank() * b.rank(), a.ch() * b.ch());
}

VirtualBundle dual(const VirtualBundle& a) {
    GradedClass g = a.ch();
    for (int k = 1; k <= g.dim(); k += 2)
        g.part(k) = -g.part(k);
    return VirtualBundle(a.rank(), std::move(g));
}

std::vector<TwistPoly> power_sums(const VirtualBundle& a) {
    std::vector<TwistPoly> p(static_cast<std::size_t>(a.dim()) + 1);
    p[0] = TwistPoly(a.rank());
    for (int k = 1; k <= a.dim(); ++k)
        p[static_cast<std::size_t>(k)] =
            a.ch().part(k) * Rational(factorial(static_cast<unsigned long>(k)));
    return p;
}

ChernVector chern_classes(const VirtualBundle& a) {
    const auto p = power_sums(a);
    ChernVector cv;
    cv.c.assign(static_cast<std::size_t>(a.dim()) + 1, TwistPoly());
    cv.c[0] = TwistPoly(1);
    // k·e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i
    for (int k = 1; k <= a.dim(); ++k) {
        TwistPoly acc;
        for (int i = 1; i <= k; ++i) {
            TwistPoly term = cv.c[static_cast<std::size_t>(k - i)] * p[static_cast<std::size_t>(i)];
            if (i % 2 == 0)
                term = -term;
            acc += term;
        }
        cv.c[static_cast<std::size_t>(k)] = acc * Rational(1L, static_cast<long>(k));
    }
    return cv;
}

std::vector<TwistPoly> power_sums_from_chern(const ChernVector& cv) {
    const int d = cv.dim();
    std::vector<TwistPoly> p(static_cast<std::size_t>(d) + 1);
    // p_k = sum_{i=1..k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k·e_k
    for (int k = 1; k <= d; ++k) {
        TwistPoly acc;
        for (int i = 1; i < k; ++i) {
            TwistPoly term = cv.c[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(k - i)];
            if (i % 2 == 0)
                term = -term;
            acc += term;
        }
        TwistPoly last = cv.c[static_cast<std::size_t>(k)] * Rational(static_cast<long>(k));
        if (k % 2 == 0)
            last = -last;
        p[static_cast<std::size_t>(k)] = acc + last;
    }
    return p;
}

VirtualBundle sym_power(int k, const VirtualBundle& a) {
    if (k < 0 || k > 3)
        throw DomainError("symmetric powers are supported for orders 0..3 only");
    if (a.rank() < 0)
        throw DomainError("symmetric power of a negative-rank bundle");
    const int d = a.dim();
    if (k == 0)
        return VirtualBundle::trivial(d, 1);
    if (k == 1)
        return a;

    const auto p = power_sums(a);
    auto P = [&](int m) { return p[static_cast<std::size_t>(m)]; };
    std::vector<TwistPoly> q(static_cast<std::size_t>(d) + 1);

    if (k == 2) {
        // q_m = (1/2)·( sum_j C(m,j) p_j p_{m-j}  +  2^m p_m )
        for (int m = 1; m <= d; ++m) {
            TwistPoly acc;
            for (int j = 0; j <= m; ++j)
                acc += P(j) * P(m - j) *
                       Rational(binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(j)));
            acc += P(m) * Rational(int_pow(2, static_cast<unsigned long>(m)));
            q[static_cast<std::size_t>(m)] = acc * Rational(1L, 2L);
        }
    } else {
        // q_m = (1/6)·( sum_{α+β+γ=m} m!/(α!β!γ!) p_α p_β p_γ
        //             + 3·sum_j C(m,j) 2^j p_j p_{m-j}  +  2·3^m p_m )
        for (int m = 1; m <= d; ++m) {
            TwistPoly acc;
            const mpz_class mfac = factorial(static_cast<unsigned long>(m));
            for (int alpha = 0; alpha <= m; ++alpha)
                for (int beta = 0; alpha + beta <= m; ++beta) {
                    const int gamma = m - alpha - beta;
                    const Rational multinomial(mfac, factorial(static_cast<unsigned long>(alpha)) *
                                                         factorial(static_cast<unsigned long>(beta)) *
                                                         factorial(static_cast<unsigned long>(gamma)));
                    acc += P(alpha) * P(beta) * P(gamma) * multinomial;
                }
            for (int j = 0; j <= m; ++j)
                acc += P(j) * P(m - j) *
                       Rational(mpz_class(3) * binomial(static_cast<unsigned long>(m),
                                                        static_cast<unsigned long>(j)) *
                                int_pow(2, static_cast<unsigned long>(j)));
            acc += P(m) * Rational(mpz_class(2) * int_pow(3, static_cast<unsigned long>(m)));
            q[static_cast<std::size_t>(m)] = acc * Rational(1L, 6L);
        }
    }

    const mpz_class rank =
        binomial(static_cast<unsigned long>(a.rank() + k - 1), static_cast<unsigned long>(k));
    GradedClass g(d);
    g.part(0) = TwistPoly(Rational(rank));
    for (int m = 1; m <= d; ++m)
        g.part(m) = q[static_cast<std::size_t>(m)] *
                    Rational(mpz_class(1), factorial(static_cast<unsigned long>(m)));
    return VirtualBundle(rank.get_si(), std::move(g));
}

VirtualBundle determinant(const VirtualBundle& a) {
    GradedClass c1(a.dim());
    if (a.dim() >= 1)
        c1.part(1) = a.ch().part(1);
    return VirtualBundle(1, exp_nilpotent(c1));
}

PowerSeries todd_series(int order) {
    // td(x) = x / (1 - e^{-x}); both sides vanish to order 1, the division
    // cancels it, so expand one order further.
    const int n = order + 1;
    PowerSeries x = PowerSeries::monomial(n, 1);
    PowerSeries one = PowerSeries::constant(n, Rational(1));
    PowerSeries denom = one - series_exp(PowerSeries::monomial(n, 1, Rational(-1)));
    return series_div(x, denom);
}

PowerSeries todd_log_series(int order) {
    return series_log(todd_series(order));
}

GradedClass todd(const VirtualBundle& a) {
    const int d = a.dim();
    const auto p = power_sums(a);
    if (d == 0)
        return GradedClass::unit(0);
    const PowerSeries s = todd_log_series(d);
    GradedClass arg(d);
    for (int m = 1; m <= d; ++m)
        arg.part(m) = p[static_cast<std::size_t>(m)] * s[m];
    return exp_nilpotent(arg);
}

IntegralityCheck integrality_check(const GradedClass& a, long at) {
    for (int k = 0; k <= a.dim(); ++k) {
        const Rational v = a.part(k).eval(Rational(at));
        if (!v.is_integer())
            return {false, k, v};
    }
    return {true, -1, Rational(0)};
}

} // namespace riroch
