#pragma once

#include <cstddef>
#include <vector>

#include "matfix/linalg.hpp"

namespace matfix {

/// Householder QR of an m x n matrix (m >= n), optionally with column pivoting.
///
/// A P = Q R, where P permutes columns so that |R(0,0)| >= |R(1,1)| >= ...
/// when pivoting is enabled.
class HouseholderQr {
 public:
  explicit HouseholderQr(const Matrix& a, bool pivot = false);

  /// n x n upper triangular factor.
  Matrix r() const;
  /// m x m unitary factor.
  Matrix q() const;
  /// Column order: column j of A P is column perm()[j] of A.
  const std::vector<std::size_t>& perm() const { return perm_; }

  /// Number of diagonal entries of R above rel_tol * |R(0,0)|.
  std::size_t rank(double rel_tol) const;

  /// max |R(i,i)| / min |R(i,i)|; infinity when a diagonal entry is zero.
  double condition_estimate() const;

  /// Least-squares solution of A x = b for a single column b (length m).
  /// Returns x in the original column order.
  std::vector<Complex> solve_least_squares(const std::vector<Complex>& b) const;

 private:
  void apply_qh(std::vector<Complex>& v) const;

  std::size_t m_ = 0;
  std::size_t n_ = 0;
  Matrix qr_;                                // R in the upper triangle
  std::vector<std::vector<Complex>> house_;  // reflector vectors v_k (length m - k)
  std::vector<Complex> beta_;                // H_k = I - beta_k v_k v_k^*
  std::vector<std::size_t> perm_;
};

}  // namespace matfix
