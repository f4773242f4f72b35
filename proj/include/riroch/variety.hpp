#pragma once

#include <string>
#include <vector>

#include "riroch/bundle.hpp"

namespace riroch {

/// Smooth complete intersection X ⊂ P^n of type (d_1, ..., d_c); an empty
/// degree list gives P^n itself. Only the numerical data is stored —
/// smoothness and genericity are assumed, never checked, and every
/// implemented formula depends only on (n; d_1..d_c).
class CompleteIntersection {
public:
    CompleteIntersection(int ambient_dim, std::vector<long> multidegrees);
    static CompleteIntersection projective_space(int n);

    int ambient_dim() const { return ambient_; }
    const std::vector<long>& multidegrees() const { return degrees_; }
    int codim() const { return static_cast<int>(degrees_.size()); }
    int dim() const { return ambient_ - codim(); }
    /// Product of the multidegrees (1 for P^n).
    mpz_class degree() const;
    bool is_projective_space() const { return degrees_.empty(); }

    /// Canonical display form: "P(3)" or "CI(4;2,3)".
    std::string str() const;

    friend bool operator==(const CompleteIntersection& a, const CompleteIntersection& b) {
        return a.ambient_ == b.ambient_ && a.degrees_ == b.degrees_;
    }

private:
    int ambient_;
    std::vector<long> degrees_;
};

/// H = c1(O_X(1)) at the variety's truncation dimension.
GradedClass hyperplane_class(const CompleteIntersection& x);

/// ch(T_X) = (n-c) + Σ_{k=1}^{n-c} (n+1 - Σ_i d_i^k)·H^k/k!.
VirtualBundle tangent_ch(const CompleteIntersection& x);

/// ch(Ω¹) = dual of the tangent character.
VirtualBundle cotangent_ch(const CompleteIntersection& x);

/// The published surface expression 2 - (5+d1+d2)·H + (5-d1²-d2²)·H²/2,
/// reproduced verbatim for paper-compat mode. Only valid for surfaces in
/// P^4 with two defining equations; rejected for any other shape.
VirtualBundle paper_compat_cotangent_ch(const CompleteIntersection& x);

/// Degree map: the coefficient of H^dim times deg(X).
TwistPoly integrate(const CompleteIntersection& x, const GradedClass& a);

/// Convenience: O(t) truncated at dim(X).
VirtualBundle line_bundle(const CompleteIntersection& x, const TwistPoly& twist);

} // namespace riroch
