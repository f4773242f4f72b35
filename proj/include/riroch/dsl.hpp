#pragma once

#include <memory>
#include <string>

#include "riroch/diffop.hpp"

namespace riroch::dsl {

/// Twist argument of O(...): restricted to affine expressions N + c or a
/// bare integer, so line-bundle characters stay polynomials of controlled
/// degree.
struct LinExp {
    bool has_n = false;
    long shift = 0;

    TwistPoly to_poly() const;
    std::string str() const;

    friend bool operator==(const LinExp& a, const LinExp& b) {
        return a.has_n == b.has_n && a.shift == b.shift;
    }
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Bundle expression AST. Jet(n, E) denotes the principal-parts bundle
/// P^n tensored with E; K abbreviates det(Omega).
struct Expr {
    enum class Kind { Line, Omega, Tangent, Canonical, Jet, Sym, Dual, Det, Add, Sub, Mul };

    Expr(Kind k) : kind(k) {}

    Kind kind;
    LinExp lin;       // Line
    int order = 0;    // Jet, Sym
    ExprPtr lhs, rhs; // unary nodes use lhs only
};

bool equal(const Expr& a, const Expr& b);

/// Canonical rendering; reparsing it yields a structurally identical tree.
std::string pretty(const Expr& e);

/// Grammar: expr := term (('+'|'-') term)*, term := factor ('*' factor)*,
/// factor := O(linexp) | Omega | T | K | Jet(int, expr) | Sym(int, expr)
///         | dual(expr) | det(expr) | (expr).
/// Whitespace-insensitive. Throws ParseError with a byte offset, or
/// ValidationError for well-formed input outside the supported limits.
ExprPtr parse_bundle(const std::string& text);

/// Grammar: "P(" int ")" | "CI(" int ";" int ("," int)* ")".
CompleteIntersection parse_variety(const std::string& text);

/// Evaluates the expression on a variety. The mode selects how Omega, T,
/// K and Jet internals are derived (see riroch::Mode).
VirtualBundle evaluate(const Expr& e, const CompleteIntersection& x, Mode mode = Mode::Default);

} // namespace riroch::dsl
