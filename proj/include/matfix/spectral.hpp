#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "matfix/linalg.hpp"

namespace matfix {

/// Default radius for treating two computed eigenvalues as one.
inline constexpr double kDefaultGroupingTol = 1e-8;

struct SpectrumReport {
  /// All n eigenvalues with multiplicity, sorted by decreasing modulus, then
  /// decreasing real part, then decreasing imaginary part.
  std::vector<Complex> eigenvalues;
  double normal_defect = 0.0;  // ||AA* - A*A||_F
  std::size_t unit_eigenvalue_count = 0;
};

struct EigenCluster {
  Complex representative;  // cluster mean
  std::size_t multiplicity = 0;
  bool unit = false;  // representative within tolerance of 1
};

/// Orders eigenvalues as documented on SpectrumReport::eigenvalues.
bool spectral_order(Complex a, Complex b);

/// Eigenvalues of a square matrix: Householder reduction to upper Hessenberg
/// form followed by single-shift complex QR with Wilkinson shifts.
/// Throws ConvergenceError naming the undeflated block if the iteration cap
/// (100 n sweeps) is exceeded.
SpectrumReport eigenvalues(const Matrix& a, double grouping_tol = kDefaultGroupingTol);

/// Upper Hessenberg matrix unitarily similar to a.
Matrix hessenberg(const Matrix& a);

/// Clusters eigenvalues by transitive closure of |x - y| <= tol.
/// The unit cluster (if any) comes first; the rest follow spectral_order of
/// their representatives.
std::vector<EigenCluster> group_eigenvalues(const SpectrumReport& report,
                                            double tol = kDefaultGroupingTol);
std::vector<EigenCluster> group_eigenvalues(const std::vector<Complex>& values,
                                            double tol = kDefaultGroupingTol);

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the phases
/// of diag(R) folded into Q. Deterministic in (n, seed).
Matrix random_unitary(std::size_t n, std::uint64_t seed);

/// U diag(eigenvalues) U* with U = random_unitary(n, seed).
Matrix assemble_normal(const std::vector<Complex>& eigenvalues, std::uint64_t seed);

}  // namespace matfix
