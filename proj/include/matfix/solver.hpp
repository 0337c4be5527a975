#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "matfix/linalg.hpp"
#include "matfix/specfun.hpp"
#include "matfix/spectral.hpp"

namespace matfix {

// Solutions (A, z) of exp(z (A - I)) = A, equivalently e^{zA} = e^z A.

enum class SolutionKind { AllZ, Discrete, Empty };

enum class Classification { Identity, NormalCase2, NonnormalInvolutory, NonnormalGeneral, Unipotent };

std::string_view to_string(SolutionKind kind);
std::string_view to_string(Classification c);

/// Inclusive range of anchor branch indices searched by solve_z.
struct BranchRange {
  int min = -8;
  int max = 8;
};

struct SolverOptions {
  double tol = 1e-9;               // verification, relative to max(1, ||A||_F)
  double integrality_tol = 1e-6;   // distance of k_j from an integer
  double grouping_tol = kDefaultGroupingTol;
  BranchRange branches{};
};

struct VerifyResult {
  bool ok = false;
  double residual = 0.0;  // ||expm(z (A - I)) - A||_F
};

/// Residual test of exp(z (A - I)) = A: ok iff residual <= tol * max(1, ||A||_F).
/// An overflowing exponential counts as a failed verification.
VerifyResult verify(const Matrix& a, Complex z, double tol = 1e-9);

/// z = log_branch(lambda, k) / (lambda - 1). Throws DomainError when
/// |lambda - 1| <= unit_tol: a unit eigenvalue places no constraint on z.
Complex candidate_z_from_eigenvalue(Complex lambda, BranchIndex k,
                                    double unit_tol = kDefaultGroupingTol);

struct IntegralityResult {
  bool is_integer = false;
  Complex k_value;      // the implied branch number, exact when consistent
  BranchIndex nearest;  // round(Re k_value)
};

/// Branch number k_j that lambda_j must use for the z fixed by (lambda_anchor, k_anchor):
///   k_j = [ (lambda_j - 1)/(lambda_anchor - 1) (Log lambda_anchor + 2 pi i k_anchor) - Log lambda_j ] / (2 pi i)
/// with principal logarithms. Integer within tol in both parts iff consistent.
IntegralityResult branch_integrality(Complex lambda_anchor, BranchIndex k_anchor, Complex lambda_j,
                                     double tol = 1e-6);

struct SolutionWitness {
  Complex z;
  BranchIndex anchor_branch;
  /// Branch numbers k_j of the non-unit eigenvalue clusters, anchor first.
  std::vector<BranchIndex> per_eigenvalue_branches;
  double residual = 0.0;
};

struct SolutionSet {
  SolutionKind kind = SolutionKind::Empty;
  Classification classification = Classification::NonnormalGeneral;
  std::vector<SolutionWitness> solutions;
  BranchRange searched{};
  std::vector<EigenCluster> clusters;  // empty for the identity case
  Complex anchor_eigenvalue{};         // meaningful when a non-unit cluster exists
};

/// Finds every z (within the anchor branch range) solving exp(z (A - I)) = A.
///
/// Eigenvalue conditions only generate and filter candidates; each reported
/// z has passed verify(). Propagates ConvergenceError from the eigenvalue
/// engine.
SolutionSet solve_z(const Matrix& a, const SolverOptions& options = {});

struct ConstructedSolution {
  Matrix matrix;
  std::vector<Complex> eigenvalues;
  VerifyResult verification;
};

/// Normal matrix solving the equation for the given z: eigenvalues
/// lambda_from_z(z, k) for each branch choice, plus unit_count ones, placed
/// in a Haar-random eigenbasis. Throws DomainError for z = 0.
ConstructedSolution construct_normal_solution(Complex z, const std::vector<BranchIndex>& branches,
                                              std::size_t unit_count, std::uint64_t seed,
                                              double tol = 1e-9);

/// Builds a solution for z and checks that solve_z recovers z within tol.
bool roundtrip_check(Complex z, const std::vector<BranchIndex>& branches, std::uint64_t seed,
                     double tol, std::size_t unit_count = 1, const SolverOptions& options = {});

}  // namespace matfix
