#pragma once

#include <cstddef>
#include <vector>

#include "matfix/linalg.hpp"

namespace matfix {

/// Matrix exponential by scaling and squaring with the degree-13 diagonal
/// Pade approximant. Throws OverflowError when the result is not finite.
Matrix expm(const Matrix& a);

/// e^{zB} = cosh(z) I + sinh(z) B for involutory B (B^2 = I).
/// Throws PreconditionError when B fails is_involutory(B, tol).
Matrix expm_involutory(const Matrix& b, Complex z, double tol = 1e-10);

/// Largest r such that {I, A, ..., A^r} is linearly independent.
///
/// Rank of the matrix whose columns are vec(A^j) / ||A^j||_F, j = 0..n-1,
/// by column-pivoted QR with threshold rel_tol * |R(0,0)|.
std::size_t power_basis_degree(const Matrix& a, double rel_tol = 1e-10);

struct PowerBasisExpansion {
  std::size_t degree_r = 0;
  std::vector<Complex> coefficients;  // c_0 .. c_r
  double residual = 0.0;              // ||sum c_j A^j - e^{zA}||_F
  double condition_estimate = 1.0;    // of the (column-normalised) power basis
  bool ill_conditioned = false;       // condition_estimate > 1e12
  /// alpha with A = alpha I; only meaningful when degree_r == 0.
  Complex identity_multiple{};
};

/// Least-squares coordinates of expm(zA) in the basis {I, A, ..., A^r}.
PowerBasisExpansion expand_exp_in_powers(const Matrix& a, Complex z, double rel_tol = 1e-10);

/// e^{zA} = e^z A holds iff c_1 = e^z and every other c_j vanishes.
///
/// Deviations are measured against tol * max(1, |e^z|). For r = 0 (A = alpha I)
/// the single condition is c_0 = alpha e^z, which holds for every z when A = I.
bool solution_coefficient_check(const PowerBasisExpansion& expansion, Complex z, double tol = 1e-9);

}  // namespace matfix
