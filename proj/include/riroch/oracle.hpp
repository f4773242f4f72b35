#pragma once

#include <vector>

#include "riroch/bundle.hpp"

namespace riroch::oracle {

/// Splitting-principle model of a bundle: an explicit multiset of Chern
/// roots a·H with rational a. Every characteristic-class operation has a
/// direct root-level definition here, independent of the power-sum
/// formulas in the main calculus; the two are compared in property tests.
struct RootBundle {
    int dim;                     // truncation codimension
    std::vector<Rational> roots; // multiplicities included; rank = size
};

/// ch = Σ e^{root·H}, truncated.
GradedClass ch(const RootBundle& b);

/// Roots of Sym^k: all k-fold multiset sums of roots (k <= 3).
RootBundle sym(int k, const RootBundle& b);

RootBundle dual(const RootBundle& b);
RootBundle sum(const RootBundle& a, const RootBundle& b);
/// Pairwise sums of roots.
RootBundle tensor(const RootBundle& a, const RootBundle& b);
/// Single root = sum of all roots.
RootBundle det(const RootBundle& b);

/// Td = ∏ td(root·H), multiplying per-root Todd series.
GradedClass todd(const RootBundle& b);

/// Total Chern class ∏ (1 + root·H); entry k is the k-th elementary
/// symmetric polynomial of the roots.
ChernVector chern(const RootBundle& b);

} // namespace riroch::oracle
