#pragma once

#include <compare>

#include "matfix/linalg.hpp"

namespace matfix {

/// Integer label of a logarithm / Lambert W branch.
struct BranchIndex {
  int value = 0;

  constexpr BranchIndex() = default;
  constexpr explicit BranchIndex(int k) : value(k) {}

  friend constexpr auto operator<=>(BranchIndex, BranchIndex) = default;
};

/// Largest |k| accepted by the branch-indexed functions.
inline constexpr int kBranchBound = 64;

/// Principal logarithm with imaginary part in (-pi, pi]; a negative real
/// argument with signed-zero imaginary part maps to +i*pi.
Complex principal_log(Complex w);

/// Log(w) + 2*pi*i*k. Throws DomainError for w = 0 or |k| > kBranchBound.
Complex log_branch(Complex w, BranchIndex k);

/// Branch k of the Lambert W function: the solution w of w*e^w = x lying in
/// the k-th region of the standard partition of the w-plane.
///
/// Branch cuts follow the usual convention: (-inf, -1/e] for k = 0, and
/// (-inf, 0) for k != 0. A point exactly on a cut takes the limit from above.
/// Iteration is Halley's method from a regime-dependent starting point; the
/// converged value is checked to lie in the requested branch.
///
/// Throws DomainError for x = 0 with k != 0, and ConvergenceError (carrying
/// the last iterate and its residual) if Halley does not settle in branch k.
Complex lambert_w(Complex x, BranchIndex k);

/// Index of the Lambert W branch whose range contains w.
///
/// The range of W_k is bounded by the curves Re w = -Im w * cot(Im w); the
/// real ray w < -1 belongs to k = -1 and the ray w >= -1 to k = 0.
int lambert_w_branch_of(Complex w);

/// Non-unit eigenvalue consistent with exponent z on branch k:
/// lambda = -W_k(-z e^{-z}) / z, which solves e^{z(lambda - 1)} = lambda.
/// Throws DomainError for z = 0.
Complex lambda_from_z(Complex z, BranchIndex k);

}  // namespace matfix
