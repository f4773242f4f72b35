#include "riroch/hrr.hpp"

namespace riroch {

GradedClass todd_tangent(const CompleteIntersection& x) {
    return todd(tangent_ch(x));
}

TwistPoly euler_characteristic(const CompleteIntersection& x, const VirtualBundle& e) {
    return integrate(x, e.ch() * todd_tangent(x));
}

} // namespace riroch
