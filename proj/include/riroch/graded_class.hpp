#pragma once

#include <string>
#include <vector>

#include "riroch/twist_poly.hpp"

namespace riroch {

/// Element of the truncated intersection ring A(X) ⊗ Q[N]: one TwistPoly
/// coefficient per power of the hyperplane class H, codimension 0..dim.
/// Products of parts landing beyond dim are discarded (H^{dim+1} = 0).
/// The truncation dimension is fixed at construction; arithmetic between
/// classes of different dimensions is rejected.
class GradedClass {
public:
    explicit GradedClass(int dim);

    /// Multiplicative unit: part 0 = 1.
    static GradedClass unit(int dim);
    /// The hyperplane class H: part 1 = 1 (needs dim >= 1).
    static GradedClass hyperplane(int dim);

    int dim() const { return dim_; }
    const TwistPoly& part(int codim) const;
    TwistPoly& part(int codim);
    bool is_zero() const;

    GradedClass operator-() const;
    GradedClass& operator+=(const GradedClass& o);
    GradedClass& operator-=(const GradedClass& o);
    GradedClass& operator*=(const GradedClass& o);
    GradedClass& operator*=(const TwistPoly& c);
    GradedClass& operator*=(const Rational& c);

    friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
    friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
    friend GradedClass operator*(GradedClass a, const GradedClass& b) { return a *= b; }
    friend GradedClass operator*(GradedClass a, const TwistPoly& c) { return a *= c; }
    friend GradedClass operator*(const TwistPoly& c, GradedClass a) { return a *= c; }
    friend GradedClass operator*(GradedClass a, const Rational& c) { return a *= c; }
    friend GradedClass operator*(const Rational& c, GradedClass a) { return a *= c; }
    friend bool operator==(const GradedClass& a, const GradedClass& b) {
        return a.dim_ == b.dim_ && a.parts_ == b.parts_;
    }
    friend bool operator!=(const GradedClass& a, const GradedClass& b) { return !(a == b); }

    /// Ascending codimension: "2 - 3*H + 3/2*H^2"; polynomial coefficients
    /// are parenthesized: "(N^2 - 4)*H^2".
    std::string str() const;

private:
    void check_same_dim(const GradedClass& o) const;
    int dim_;
    std::vector<TwistPoly> parts_; // exactly dim_+1 entries
};

/// Exponential of a class with zero part 0 (nilpotent in the truncated
/// ring, so the sum is finite and exact).
GradedClass exp_nilpotent(const GradedClass& a);

} // namespace riroch
