#pragma once

#include "riroch/hrr.hpp"
#include "riroch/variety.hpp"

namespace riroch {

/// How Ω¹-derived data and the Todd class are obtained.
///
/// Default derives everything from the tangent formula. PaperCompat
/// replays the published surface computation instead: ch(Ω¹) is the
/// printed expression 2 - (5+d1+d2)·H + (5-d1²-d2²)·H²/2 and the Todd
/// class uses the trivial-canonical shortcut (Td = 1 + (2/deg)·H²).
/// PaperCompat is only defined for surfaces in P^4 cut by two equations.
enum class Mode { Default, PaperCompat };

/// Differential operator of order <= n between two K-classes, given by
/// its symbolic data only. Ellipticity is an assumption supplied by the
/// caller; it is never verified.
struct OperatorSpec {
    int order;
    VirtualBundle source;
    VirtualBundle target;
    bool elliptic = true;
};

/// The order-1 operator O_X -> O_X attached to the Atiyah extension
/// 0 -> Ω¹ -> P¹ -> O -> 0.
OperatorSpec atiyah_operator(const CompleteIntersection& x);

/// ch of the principal-parts (jet) bundle P^n: Σ_{k=0}^{n} ch(Sym^k Ω¹).
/// Orders 0..3.
VirtualBundle principal_parts_ch(const CompleteIntersection& x, int order,
                                 Mode mode = Mode::Default);

/// Symbol class of the operator, reduced to X: [P^n]·[F] - [G].
VirtualBundle symbol_class(const CompleteIntersection& x, const OperatorSpec& op,
                           Mode mode = Mode::Default);

/// Twisted index polynomial: ∫_X ch(symbol ⊗ O(N)) ∪ Td(T_X) ∈ Q[N].
TwistPoly index_polynomial(const CompleteIntersection& x, const OperatorSpec& op,
                           Mode mode = Mode::Default);

/// Index polynomial evaluated exactly at N = at.
Rational topological_index(const CompleteIntersection& x, const OperatorSpec& op, long at,
                           Mode mode = Mode::Default);

/// Mode-aware Ω¹ and Todd providers (shared with the expression evaluator).
VirtualBundle cotangent_for_mode(const CompleteIntersection& x, Mode mode);
GradedClass todd_for_mode(const CompleteIntersection& x, Mode mode);

} // namespace riroch
