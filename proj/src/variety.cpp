#include "riroch/variety.hpp"

#include <sstream>

namespace riroch {

CompleteIntersection::CompleteIntersection(int ambient_dim, std::vector<long> multidegrees)
    : ambient_(ambient_dim), degrees_(std::move(multidegrees)) {
    if (ambient_ < 1)
        throw ValidationError("ambient dimension must be >= 1 (got n=" + std::to_string(ambient_) +
                              ")");
    for (long d : degrees_)
        if (d < 1)
            throw ValidationError("multidegrees must be >= 1 (got " + std::to_string(d) + ")");
    if (dim() < 1)
        throw ValidationError("variety dimension must be >= 1 (got n=" + std::to_string(ambient_) +
                              ", c=" + std::to_string(codim()) + ")");
}

CompleteIntersection CompleteIntersection::projective_space(int n) {
    return CompleteIntersection(n, {});
}

mpz_class CompleteIntersection::degree() const {
    mpz_class d = 1;
    for (long di : degrees_)
        d *= di;
    return d;
}

std::string CompleteIntersection::str() const {
    std::ostringstream out;
    if (is_projective_space()) {
        out << "P(" << ambient_ << ")";
    } else {
        out << "CI(" << ambient_ << ";";
        for (std::size_t i = 0; i < degrees_.size(); ++i)
            out << (i ? "," : "") << degrees_[i];
        out << ")";
    }
    return out.str();
}

GradedClass hyperplane_class(const CompleteIntersection& x) {
    return GradedClass::hyperplane(x.dim());
}

VirtualBundle tangent_ch(const CompleteIntersection& x) {
    const int d = x.dim();
    const long rank = d;
    GradedClass g(d);
    g.part(0) = TwistPoly(rank);
    for (int k = 1; k <= d; ++k) {
        mpz_class sum_dk = 0;
        for (long di : x.multidegrees())
            sum_dk += int_pow(mpz_class(di), static_cast<unsigned long>(k));
        const mpz_class numer = mpz_class(x.ambient_dim() + 1) - sum_dk;
        g.part(k) = TwistPoly(Rational(numer, factorial(static_cast<unsigned long>(k))));
    }
    return VirtualBundle(rank, std::move(g));
}

VirtualBundle cotangent_ch(const CompleteIntersection& x) {
    return dual(tangent_ch(x));
}

VirtualBundle paper_compat_cotangent_ch(const CompleteIntersection& x) {
    if (x.ambient_dim() != 4 || x.codim() != 2)
        throw DomainError("paper-compat cotangent requires a surface in P(4) cut by two "
                          "equations; got " +
                          x.str());
    const long d1 = x.multidegrees()[0];
    const long d2 = x.multidegrees()[1];
    GradedClass g(2);
    g.part(0) = TwistPoly(2);
    g.part(1) = TwistPoly(Rational(-(5 + d1 + d2)));
    g.part(2) = TwistPoly(Rational(5 - d1 * d1 - d2 * d2, 2));
    return VirtualBundle(2, std::move(g));
}

TwistPoly integrate(const CompleteIntersection& x, const GradedClass& a) {
    if (a.dim() != x.dim())
        throw DimensionMismatch("class dimension " + std::to_string(a.dim()) +
                                " does not match variety dimension " + std::to_string(x.dim()));
    return a.part(x.dim()) * Rational(x.degree());
}

VirtualBundle line_bundle(const CompleteIntersection& x, const TwistPoly& twist) {
    return VirtualBundle::line(x.dim(), twist);
}

} // namespace riroch
