#include "riroch/oracle.hpp"

namespace riroch::oracle {

GradedClass ch(const RootBundle& b) {
    GradedClass g(b.dim);
    for (const Rational& a : b.roots)
        for (int k = 0; k <= b.dim; ++k)
            g.part(k) += TwistPoly(a.pow(static_cast<unsigned long>(k)) /
                                   Rational(factorial(static_cast<unsigned long>(k))));
    return g;
}

RootBundle sym(int k, const RootBundle& b) {
    if (k < 0 || k > 3)
        throw DomainError("oracle symmetric powers are supported for orders 0..3 only");
    RootBundle r{b.dim, {}};
    const std::size_t n = b.roots.size();
    switch (k) {
    case 0:
        r.roots.push_back(Rational(0));
        break;
    case 1:
        r.roots = b.roots;
        break;
    case 2:
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                r.roots.push_back(b.roots[i] + b.roots[j]);
        break;
    case 3:
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                for (std::size_t l = j; l < n; ++l)
                    r.roots.push_back(b.roots[i] + b.roots[j] + b.roots[l]);
        break;
    }
    return r;
}

RootBundle dual(const RootBundle& b) {
    RootBundle r{b.dim, {}};
    for (const Rational& a : b.roots)
        r.roots.push_back(-a);
    return r;
}

RootBundle sum(const RootBundle& a, const RootBundle& b) {
    RootBundle r = a;
    r.roots.insert(r.roots.end(), b.roots.begin(), b.roots.end());
    return r;
}

RootBundle tensor(const RootBundle& a, const RootBundle& b) {
    RootBundle r{a.dim, {}};
    for (const Rational& x : a.roots)
        for (const Rational& y : b.roots)
            r.roots.push_back(x + y);
    return r;
}

RootBundle det(const RootBundle& b) {
    Rational total(0);
    for (const Rational& a : b.roots)
        total += a;
    return RootBundle{b.dim, {total}};
}

GradedClass todd(const RootBundle& b) {
    const PowerSeries td = todd_series(b.dim);
    GradedClass result = GradedClass::unit(b.dim);
    for (const Rational& a : b.roots) {
        GradedClass factor(b.dim);
        for (int k = 0; k <= b.dim; ++k)
            factor.part(k) = TwistPoly(td[k] * a.pow(static_cast<unsigned long>(k)));
        result *= factor;
    }
    return result;
}

ChernVector chern(const RootBundle& b) {
    GradedClass total = GradedClass::unit(b.dim);
    for (const Rational& a : b.roots) {
        GradedClass factor = GradedClass::unit(b.dim);
        if (b.dim >= 1)
            factor.part(1) = TwistPoly(a);
        total *= factor;
    }
    ChernVector cv;
    for (int k = 0; k <= b.dim; ++k)
        cv.c.push_back(total.part(k));
    return cv;
}

} // namespace riroch::oracle
