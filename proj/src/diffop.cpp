#include "riroch/diffop.hpp"

namespace riroch {

OperatorSpec atiyah_operator(const CompleteIntersection& x) {
    return OperatorSpec{1, VirtualBundle::trivial(x.dim(), 1), VirtualBundle::trivial(x.dim(), 1)};
}

VirtualBundle cotangent_for_mode(const CompleteIntersection& x, Mode mode) {
    return mode == Mode::PaperCompat ? paper_compat_cotangent_ch(x) : cotangent_ch(x);
}

GradedClass todd_for_mode(const CompleteIntersection& x, Mode mode) {
    if (mode == Mode::Default)
        return todd_tangent(x);
    if (x.ambient_dim() != 4 || x.codim() != 2)
        throw DomainError("paper-compat Todd requires a surface in P(4) cut by two equations; "
                          "got " +
                          x.str());
    // Trivial canonical class assumed; part 2 integrates to 2.
    GradedClass td = GradedClass::unit(2);
    td.part(2) = TwistPoly(Rational(mpz_class(2), x.degree()));
    return td;
}

VirtualBundle principal_parts_ch(const CompleteIntersection& x, int order, Mode mode) {
    if (order < 0 || order > 3)
        throw DomainError("principal parts are supported for orders 0..3 only");
    VirtualBundle result = VirtualBundle::trivial(x.dim(), 1);
    if (order == 0)
        return result;
    const VirtualBundle omega = cotangent_for_mode(x, mode);
    for (int k = 1; k <= order; ++k)
        result = sum(result, sym_power(k, omega));
    return result;
}

VirtualBundle symbol_class(const CompleteIntersection& x, const OperatorSpec& op, Mode mode) {
    return difference(tensor(principal_parts_ch(x, op.order, mode), op.source), op.target);
}

TwistPoly index_polynomial(const CompleteIntersection& x, const OperatorSpec& op, Mode mode) {
    const VirtualBundle symbol = symbol_class(x, op, mode);
    const VirtualBundle twisted = tensor(symbol, VirtualBundle::line(x.dim(), TwistPoly::variable()));
    return integrate(x, twisted.ch() * todd_for_mode(x, mode));
}

Rational topological_index(const CompleteIntersection& x, const OperatorSpec& op, long at,
                           Mode mode) {
    return index_polynomial(x, op, mode).eval(Rational(at));
}

} // namespace riroch
