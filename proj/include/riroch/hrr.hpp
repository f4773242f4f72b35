#pragma once

#include "riroch/variety.hpp"

namespace riroch {

/// Td(T_X), computed generically from the tangent character.
GradedClass todd_tangent(const CompleteIntersection& x);

/// Euler characteristic via Hirzebruch-Riemann-Roch:
/// χ(E) = ∫_X ch(E) ∪ Td(T_X). A polynomial in N when E carries twists.
TwistPoly euler_characteristic(const CompleteIntersection& x, const VirtualBundle& e);

} // namespace riroch
