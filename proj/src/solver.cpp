#include "matfix/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "matfix/errors.hpp"
#include "matfix/matfun.hpp"

namespace matfix {

namespace {

using std::numbers::pi;

constexpr double kStructureTol = 1e-10;
constexpr double kNilpotentTol = 1e-10;
// Eigenvalues this close to the negative real axis are put on it, so the
// principal logarithm (and hence the anchor branch labels) does not depend
// on the sign of roundoff in the imaginary part.
constexpr double kAxisSnap = 1e-12;

Complex snap_to_negative_axis(Complex l) {
  if (l.real() < 0.0 && std::abs(l.imag()) <= kAxisSnap * std::max(1.0, std::abs(l))) {
    return {l.real(), 0.0};
  }
  return l;
}

Classification classify_non_identity(const Matrix& a) {
  if (is_normal(a, kStructureTol).normal) return Classification::NormalCase2;
  if (is_involutory(a, kStructureTol)) return Classification::NonnormalInvolutory;
  return Classification::NonnormalGeneral;
}

bool numerically_nilpotent(const Matrix& n) {
  const double nn = frobenius_norm(n);
  if (nn == 0.0) return true;
  const Matrix scaled = scale(n, 1.0 / nn);
  return frobenius_norm(power(scaled, static_cast<unsigned>(n.rows()))) <= kNilpotentTol;
}

// Scalar least-squares fit z N ~ log(I + N) for nilpotent N, where the
// logarithm is the terminating series N - N^2/2 + N^3/3 - ...
Complex unipotent_exponent(const Matrix& n) {
  Matrix log_term = n;
  Matrix term = n;
  for (std::size_t m = 2; m <= n.rows(); ++m) {
    term = term * n;
    const double sign = (m % 2 == 0) ? -1.0 : 1.0;
    log_term += scale(term, sign / static_cast<double>(m));
  }
  Complex num{};
  double den = 0.0;
  for (std::size_t i = 0; i < n.entries().size(); ++i) {
    num += std::conj(n.entries()[i]) * log_term.entries()[i];
    den += std::norm(n.entries()[i]);
  }
  return num / den;
}

}  // namespace

std::string_view to_string(SolutionKind kind) {
  switch (kind) {
    case SolutionKind::AllZ: return "ALL_Z";
    case SolutionKind::Discrete: return "DISCRETE";
    case SolutionKind::Empty: return "EMPTY";
  }
  return "?";
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::Identity: return "IDENTITY";
    case Classification::NormalCase2: return "NORMAL_CASE2";
    case Classification::NonnormalInvolutory: return "NONNORMAL_INVOLUTORY";
    case Classification::NonnormalGeneral: return "NONNORMAL_GENERAL";
    case Classification::Unipotent: return "UNIPOTENT";
  }
  return "?";
}

VerifyResult verify(const Matrix& a, Complex z, double tol) {
  if (!a.is_square()) throw ShapeError("verify: square matrix required");
  Matrix shifted = a;
  for (std::size_t i = 0; i < a.rows(); ++i) shifted(i, i) -= 1.0;
  double residual;
  try {
    residual = frobenius_norm(expm(z * shifted) - a);
  } catch (const OverflowError&) {
    return {false, std::numeric_limits<double>::infinity()};
  }
  return {residual <= tol * std::max(1.0, frobenius_norm(a)), residual};
}

Complex candidate_z_from_eigenvalue(Complex lambda, BranchIndex k, double unit_tol) {
  if (std::abs(lambda - 1.0) <= unit_tol) {
    throw DomainError("candidate_z_from_eigenvalue: lambda = 1 constrains nothing");
  }
  return log_branch(lambda, k) / (lambda - 1.0);
}

IntegralityResult branch_integrality(Complex lambda_anchor, BranchIndex k_anchor, Complex lambda_j,
                                     double tol) {
  const Complex two_pi_i{0.0, 2.0 * pi};
  const Complex anchor_log = log_branch(lambda_anchor, k_anchor);
  const Complex kj =
      ((lambda_j - 1.0) / (lambda_anchor - 1.0) * anchor_log - principal_log(lambda_j)) / two_pi_i;
  const double nearest = std::round(kj.real());
  IntegralityResult out;
  out.k_value = kj;
  out.nearest = BranchIndex(static_cast<int>(nearest));
  out.is_integer = std::abs(kj.real() - nearest) <= tol && std::abs(kj.imag()) <= tol;
  return out;
}

SolutionSet solve_z(const Matrix& a, const SolverOptions& options) {
  if (!a.is_square()) throw ShapeError("solve_z: square matrix required");
  if (options.branches.min > options.branches.max) {
    throw PreconditionError("solve_z: empty branch range");
  }
  const std::size_t n = a.rows();
  const double fa = frobenius_norm(a);

  SolutionSet out;
  out.searched = options.branches;

  const Matrix nil = a - identity(n);
  if (frobenius_norm(nil) <= options.tol * std::max(1.0, fa)) {
    out.kind = SolutionKind::AllZ;
    out.classification = Classification::Identity;
    return out;
  }

  const SpectrumReport report = eigenvalues(a, options.grouping_tol);
  out.clusters = group_eigenvalues(report, options.grouping_tol);
  const bool all_unit = std::all_of(out.clusters.begin(), out.clusters.end(),
                                    [](const EigenCluster& c) { return c.unit; });

  if (all_unit || numerically_nilpotent(nil)) {
    out.classification = Classification::Unipotent;
    const Complex z = unipotent_exponent(nil);
    const VerifyResult v = verify(a, z, options.tol);
    if (v.ok) {
      out.kind = SolutionKind::Discrete;
      out.solutions.push_back({z, BranchIndex(0), {}, v.residual});
    } else {
      out.kind = SolutionKind::Empty;
    }
    return out;
  }

  out.classification = classify_non_identity(a);

  // det(A) = e^{z (tr A - n)} != 0: a singular matrix has no solution.
  for (const EigenCluster& c : out.clusters) {
    if (std::abs(c.representative) <= options.grouping_tol * std::max(1.0, fa)) {
      out.kind = SolutionKind::Empty;
      return out;
    }
  }

  std::vector<Complex> non_unit;
  for (const EigenCluster& c : out.clusters)
    if (!c.unit) non_unit.push_back(snap_to_negative_axis(c.representative));
  const Complex anchor = non_unit.front();
  out.anchor_eigenvalue = anchor;

  for (int k = options.branches.min; k <= options.branches.max; ++k) {
    const Complex z = candidate_z_from_eigenvalue(anchor, BranchIndex(k), options.grouping_tol);
    if (z == Complex{}) continue;

    SolutionWitness w;
    w.z = z;
    w.anchor_branch = BranchIndex(k);
    w.per_eigenvalue_branches.push_back(BranchIndex(k));
    bool consistent = true;
    for (std::size_t j = 1; j < non_unit.size() && consistent; ++j) {
      const IntegralityResult ir =
          branch_integrality(anchor, BranchIndex(k), non_unit[j], options.integrality_tol);
      consistent = ir.is_integer;
      w.per_eigenvalue_branches.push_back(ir.nearest);
    }
    if (!consistent) continue;

    // The eigenvalue conditions are necessary only; the residual decides.
    const VerifyResult v = verify(a, z, options.tol);
    if (!v.ok) continue;
    w.residual = v.residual;
    out.solutions.push_back(std::move(w));
  }
  out.kind = out.solutions.empty() ? SolutionKind::Empty : SolutionKind::Discrete;
  return out;
}

ConstructedSolution construct_normal_solution(Complex z, const std::vector<BranchIndex>& branches,
                                              std::size_t unit_count, std::uint64_t seed,
                                              double tol) {
  if (z == Complex{}) throw DomainError("construct_normal_solution: z = 0 admits only A = I");
  if (branches.empty() && unit_count == 0) {
    throw PreconditionError("construct_normal_solution: matrix dimension would be zero");
  }
  ConstructedSolution out;
  for (const BranchIndex k : branches) out.eigenvalues.push_back(lambda_from_z(z, k));
  out.eigenvalues.insert(out.eigenvalues.end(), unit_count, Complex{1.0});
  out.matrix = assemble_normal(out.eigenvalues, seed);
  out.verification = verify(out.matrix, z, tol);
  return out;
}

bool roundtrip_check(Complex z, const std::vector<BranchIndex>& branches, std::uint64_t seed,
                     double tol, std::size_t unit_count, const SolverOptions& options) {
  const ConstructedSolution built = construct_normal_solution(z, branches, unit_count, seed, options.tol);
  if (!built.verification.ok) return false;
  const SolutionSet set = solve_z(built.matrix, options);
  if (set.kind == SolutionKind::AllZ) return true;
  return std::any_of(set.solutions.begin(), set.solutions.end(), [&](const SolutionWitness& w) {
    return std::abs(w.z - z) <= tol;
  });
}

}  // namespace matfix
