#pragma once

#include <vector>

#include "riroch/graded_class.hpp"
#include "riroch/power_series.hpp"

namespace riroch {

/// K-theory class with Q coefficients, represented as (rank, Chern
/// character). Formal differences are allowed, so the rank may be
/// negative. Part 0 of the character always equals the rank.
class VirtualBundle {
public:
    VirtualBundle(long rank, GradedClass ch);

    static VirtualBundle trivial(int dim, long rank);
    /// Line bundle O(t) for a twist polynomial t: part k = t^k / k!.
    static VirtualBundle line(int dim, const TwistPoly& twist);

    long rank() const { return rank_; }
    int dim() const { return ch_.dim(); }
    const GradedClass& ch() const { return ch_; }

    friend bool operator==(const VirtualBundle& a, const VirtualBundle& b) {
        return a.rank_ == b.rank_ && a.ch_ == b.ch_;
    }
    friend bool operator!=(const VirtualBundle& a, const VirtualBundle& b) { return !(a == b); }

private:
    long rank_;
    GradedClass ch_;
};

VirtualBundle sum(const VirtualBundle& a, const VirtualBundle& b);
VirtualBundle difference(const VirtualBundle& a, const VirtualBundle& b);
VirtualBundle tensor(const VirtualBundle& a, const VirtualBundle& b);

/// Dual bundle: ch_k -> (-1)^k ch_k. An involution and ring homomorphism.
VirtualBundle dual(const VirtualBundle& a);

/// Symmetric power, orders 0..3. Computed from power sums by summing the
/// m-th powers of all k-fold multiset sums of Chern roots; works for any
/// non-negative (possibly virtual) rank.
VirtualBundle sym_power(int k, const VirtualBundle& a);

/// Determinant line bundle: ch = exp(c1).
VirtualBundle determinant(const VirtualBundle& a);

/// Total Chern classes c_0 = 1, c_1, ..., c_dim as TwistPoly coefficients
/// of H-powers, obtained from the power sums p_k = k!·ch_k by Newton's
/// identities. Rank-agnostic: virtual bundles get formal Chern classes.
struct ChernVector {
    std::vector<TwistPoly> c; // c[k] multiplies H^k; c[0] = 1
    int dim() const { return static_cast<int>(c.size()) - 1; }
};

/// p_0 = rank, p_k = k!·ch_k for k = 1..dim.
std::vector<TwistPoly> power_sums(const VirtualBundle& a);
ChernVector chern_classes(const VirtualBundle& a);
/// Inverse direction of Newton's identities (p_1..p_dim from c; entry 0
/// is unused since the rank is not encoded in the Chern classes).
std::vector<TwistPoly> power_sums_from_chern(const ChernVector& cv);

/// Coefficients of td(x) = x / (1 - e^{-x}) through the given order:
/// 1, 1/2, 1/12, 0, -1/720, 0, 1/30240, ...
PowerSeries todd_series(int order);
/// Coefficients of log td(x): 1/2, -1/24, 0, 1/2880, ...
PowerSeries todd_log_series(int order);

/// Todd class of a virtual bundle via the multiplicative sequence of
/// td(x): Td(a) = exp(sum_m s_m p_m) with s_m the log td coefficients.
GradedClass todd(const VirtualBundle& a);

struct IntegralityCheck {
    bool ok;
    int codim;        // first non-integral codimension (when !ok)
    Rational witness; // its value
};

/// Substitutes N := at, then checks that every graded part is an integer.
IntegralityCheck integrality_check(const GradedClass& a, long at);

} // namespace riroch
