// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "matfix/errors.hpp"
#include "matfix/linalg.hpp"
#include "matfix/matfun.hpp"
#include "matfix/quantum.hpp"
#include "matfix/random.hpp"
#include "matfix/solver.hpp"
#include "matfix/specfun.hpp"
#include "matfix/spectral.hpp"

using namespace matfix;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Matrix random_matrix(std::size_t n, CounterRng& rng) {
  Matrix m(n, n);
  for (auto& e : m.entries()) e = rng.complex_normal();
  return m;
}

Matrix n_matrix(double eps) { return {{1.0, eps}, {0.0, -1.0}}; }
Matrix m_matrix(double eps) { return {{1.0, 0.0, eps}, {0.0, -1.0, 0.0}, {0.0, 0.0, -1.0}}; }

double residual_of(const Matrix& a, Complex z) {
  return frobenius_norm(expm(z * (a - identity(a.rows()))) - a);
}

// 1. exp(-i pi/2 (P - I)) = P for single Pauli matrices and all three-fold strings.
Outcome pauli_identities() {
  Outcome o;
  const Complex z(0.0, -kPi / 2);
  double worst1 = 0.0;
  for (int j = 0; j < 4; ++j) worst1 = std::max(worst1, residual_of(pauli(j), z));
  double worst3 = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) worst3 = std::max(worst3, residual_of(pauli_string({a, b, c}), z));
  o.require(worst1 <= 1e-12, "single residual " + fmt("%.2e", worst1));
  o.require(worst3 <= 1e-11, "string residual " + fmt("%.2e", worst3));
  o.detail = "max residual sigma_j " + fmt("%.2e", worst1) + ", 64 strings " + fmt("%.2e", worst3) +
             (o.detail.empty() ? "" : " | " + o.detail);
  return o;
}

// 2. z = (2k+1) i pi / 2 for every involutory catalog matrix, and nothing else.
Outcome involutory_family() {
  Outcome o;
  std::vector<std::pair<std::string, Matrix>> catalog{
      {"sigma1", pauli(1)},       {"sigma2", pauli(2)},        {"sigma3", pauli(3)},
      {"H", gate("H").matrix},    {"CNOT", gate("CNOT").matrix}, {"SWAP", gate("SWAP").matrix},
      {"N(0.5)", n_matrix(0.5)},  {"N(1)", n_matrix(1.0)},     {"N(10)", n_matrix(10.0)},
      {"M(0.5)", m_matrix(0.5)}};
  std::vector<Complex> expected;
  for (int k = -5; k <= 5; ++k) expected.emplace_back(0.0, (2 * k + 1) * kPi / 2);
  // The solver's anchor index k produces the family member with index -k - 1,
  // so family indices [-5, 5] correspond to anchor indices [-6, 4].
  SolverOptions mapped;
  mapped.branches = {-6, 4};
  SolverOptions direct;
  direct.branches = {-5, 5};
  double worst = 0.0;
  for (const auto& [name, a] : catalog) {
    for (const Complex& z : expected) {
      const VerifyResult v = verify(a, z, 1e-10);
      worst = std::max(worst, v.residual);
      o.require(v.ok, name + " fails verify at " + fmt("%.3f", z.imag()));
    }
    const SolutionSet s = solve_z(a, mapped);
    bool exact = s.solutions.size() == expected.size();
    for (const Complex& z : expected) {
      exact = exact && std::any_of(s.solutions.begin(), s.solutions.end(), [&](const SolutionWitness& w) {
                return std::abs(w.z - z) <= 1e-12 * std::max(1.0, std::abs(z));
              });
    }
    o.require(exact, name + " returned " + std::to_string(s.solutions.size()) + " solutions on the mapped range");

    const SolutionSet d = solve_z(a, direct);
    bool family = d.solutions.size() == 11;
    for (const SolutionWitness& w : d.solutions) {
      const Complex z(0.0, (2 * (-w.anchor_branch.value - 1) + 1) * kPi / 2);
      family = family && std::abs(w.z - z) <= 1e-12 * std::max(1.0, std::abs(z));
    }
    o.require(family, name + " anchor range [-5, 5] left the family");
  }
  o.detail = "10 matrices x 11 z, max residual " + fmt("%.2e", worst) + (o.detail.empty() ? "" : " | " + o.detail);
  return o;
}

// 3. Lambert W anchor values and the defining identity on random points.
Outcome lambert_anchors() {
  Outcome o;
  const double e0 = std::abs(lambert_w(0.0, BranchIndex(0)));
  const double e1 = std::abs(lambert_w(std::exp(1.0), BranchIndex(0)) - 1.0);
  const double e2 = std::abs(lambert_w(-kPi / 2, BranchIndex(0)) - Complex(0.0, kPi / 2));
  o.require(e0 <= 1e-14, "W0(0)");
  o.require(e1 <= 1e-14, "W0(e) error " + fmt("%.2e", e1));
  o.require(e2 <= 1e-13, "W0(-pi/2) error " + fmt("%.2e", e2));
  CounterRng rng(3);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const Complex x = std::pow(10.0, rng.uniform(-3.0, 3.0)) * rng.complex_normal();
    const int k = static_cast<int>(rng.uniform_int(-3, 3));
    const Complex w = lambert_w(x, BranchIndex(k));
    worst = std::max(worst, std::abs(w * std::exp(w) - x) / std::max(1.0, std::abs(x)));
  }
  o.require(worst <= 1e-13, "random residual " + fmt("%.2e", worst));
  o.detail = "anchor errors " + fmt("%.1e", e1) + "/" + fmt("%.1e", e2) + ", 1000 points max |We^W-x|/max(1,|x|) " +
             fmt("%.2e", worst) + (o.detail.empty() ? "" : " | " + o.detail);
  return o;
}

// 4. Normal construction for arbitrary z, and recovery of z by the solver.
Outcome construction_completeness() {
  Outcome o;
  CounterRng rng(4);
  int done = 0;
  int skipped = 0;
  double worst_rel = 0.0;
  while (done < 50) {
    const double radius = rng.uniform(0.1, 5.0);
    const Complex z = std::polar(radius, rng.uniform(-kPi, kPi));
    std::vector<BranchIndex> ks;
    const auto count = rng.uniform_int(1, 3);
    bool informative = false;
    for (std::int64_t i = 0; i < count; ++i) {
      ks.emplace_back(static_cast<int>(rng.uniform_int(-2, 2)));
      informative = informative || std::abs(lambda_from_z(z, ks.back()) - 1.0) > 1e-6;
    }
    const auto units = static_cast<std::size_t>(rng.uniform_int(0, 2));
    const std::uint64_t seed = rng.next_u64();
    if (!informative) {
      // Every chosen branch gives lambda = 1, so A = I and no specific z exists to recover.
      ++skipped;
      continue;
    }
    const ConstructedSolution c = construct_normal_solution(z, ks, units, seed, 1e-9);
    const VerifyResult v = verify(c.matrix, z, 1e-9);
    worst_rel = std::max(worst_rel, v.residual / std::max(1.0, frobenius_norm(c.matrix)));
    o.require(v.ok, "verify failed at z=" + fmt("%.4f", z.real()) + fmt("%+.4fi", z.imag()));
    o.require(roundtrip_check(z, ks, seed, 1e-8, units),
              "roundtrip failed at z=" + fmt("%.4f", z.real()) + fmt("%+.4fi", z.imag()));
    ++done;
  }
  o.detail = "50 cases (" + std::to_string(skipped) + " all-unit draws redrawn), max residual/max(1,||A||) " +
             fmt("%.2e", worst_rel) + (o.detail.empty() ? "" : " | " + o.detail);
  return o;
}

// 5. diag(-1, i) has no solution; the k = 0 anchor's branch number is -i/4.
Outcome integrality_filter() {
  Outcome o;
  SolverOptions opts;
  opts.branches = {-5, 5};
  const SolutionSet s = solve_z(diagonal({Complex(-1.0), kI}), opts);
  o.require(s.kind == SolutionKind::Empty, "solve_z not EMPTY");
  const IntegralityResult r = branch_integrality(-1.0, BranchIndex(0), kI);
  const double err = std::abs(r.k_value - Complex(0.0, -0.25));
  o.require(!r.is_integer, "k_p judged integral");
  o.require(err <= 1e-9, "k_p error " + fmt("%.2e", err));
  o.detail = std::string("kind=") + std::string(to_string(s.kind)) + ", k_p error " + fmt("%.2e", err) +
             (o.detail.empty() ? "" : " | " + o.detail);
  return o;
}

// 6. Power-basis coefficient conditions agree with the residual test.
Outcome power_basis_conditions() {
  Outcome o;
  const PowerBasisExpansion e = expand_exp_in_powers(pauli(1), 1.0);
  const double c0 = std::abs(e.coefficients.at(0) - std::cosh(1.0));
  const double c1 = std::abs(e.coefficients.at(1) - std::sinh(1.0));
  o.require(c0 <= 1e-12 && c1 <= 1e-12, "cosh/sinh coefficients off by " + fmt("%.2e", std::max(c0, c1)));

  struct Case {
    Matrix a;
    Complex z;
  };
  const Complex half_pi(0.0, kPi / 2);
  const Complex l1 = lambda_from_z(Complex(0.8, -0.6), BranchIndex(1));
  const Complex l2 = lambda_from_z(Complex(0.8, -0.6), BranchIndex(-1));
  const Complex l3 = lambda_from_z(Complex(-1.2, 0.3), BranchIndex(0));
  const Complex l4 = lambda_from_z(Complex(0.0, 2.0), BranchIndex(2));
  Matrix u2 = identity(2);
  u2(0, 1) = 1.0;
  Matrix u3 = identity(3);
  u3(1, 2) = Complex(0.5, -1.0);
  const Matrix jordan{{1.0, 1.0, 0.0}, {0.0, 1.0, 1.0}, {0.0, 0.0, 1.0}};
  CounterRng rng(6);

  std::vector<Case> cases{
      // involutory, on and off the family
      {pauli(1), half_pi}, {pauli(2), -half_pi}, {pauli(3), 3.0 * half_pi}, {gate("H").matrix, -3.0 * half_pi},
      {n_matrix(1.0), half_pi}, {m_matrix(0.5), 5.0 * half_pi},
      {pauli(1), half_pi / 2.0}, {gate("CNOT").matrix, 1.0}, {n_matrix(10.0), Complex(0.3, 2.0)},
      {m_matrix(0.5), 2.0 * half_pi},
      // diagonal
      {2.0 * identity(2), std::log(2.0)}, {diagonal({l1, 1.0}), Complex(0.8, -0.6)},
      {diagonal({l3, 1.0, 1.0}), Complex(-1.2, 0.3)}, {diagonal({l4, 1.0}), Complex(0.0, 2.0)},
      {diagonal({l1, l2, 1.0}), Complex(0.8, -0.6)}, {diagonal({l1, l2}), Complex(0.8, -0.6)},
      {diagonal({Complex(-1.0), kI}), half_pi}, {diagonal({1.0, 2.0, 3.0}), 1.0}, {2.0 * identity(3), 1.0},
      // unipotent
      {u2, 1.0}, {u2, 2.0}, {u3, 1.0}, {u3, 0.5}, {jordan, 1.0},
      // identity
      {identity(2), Complex(3.0, -4.0)}, {identity(4), 0.0},
  };
  while (cases.size() < 30) cases.push_back({random_matrix(3, rng), rng.complex_normal()});

  int agree = 0;
  int solutions = 0;
  for (const auto& c : cases) {
    const bool by_residual = verify(c.a, c.z, 1e-9).ok;
    const bool by_coeffs = solution_coefficient_check(expand_exp_in_powers(c.a, c.z), c.z, 1e-9);
    solutions += by_residual;
    if (by_residual == by_coeffs) {
      ++agree;
    } else {
      o.require(false, "disagreement at case " + std::to_string(&c - cases.data()));
    }
  }
  o.detail = "coefficient error " + fmt("%.1e", std::max(c0, c1)) + ", " + std::to_string(agree) + "/" +
             std::to_string(cases.size()) + " agree (" + std::to_string(solutions) + " solutions)" +
             (o.detail.empty() ? "" : " | " + o.detail);
  return o;
}

// 7. A = I + c E_{i,i+1}: exactly one z, matching the nilpotent-logarithm fit.
Outcome unipotent_case() {
  Outcome o;
  struct Case {
    std::size_t n;
    std::size_t row;
    Complex c;
  };
  const Case cases[] = {{2, 0, 1.0}, {3, 1, Complex(0.7, -0.2)}, {4, 2, Complex(-3.0, 5.0)}};
  std::string zs;
  for (const auto& c : cases) {
    Matrix nil = zeros(c.n, c.n);
    nil(c.row, c.row + 1) = c.c;
    const Matrix a = identity(c.n) + nil;
    // Oracle: z = <N, L> / <N, N> with L = sum_{j>=1} (-1)^{j+1} N^j / j.
    Matrix l = zeros(c.n, c.n);
    Matrix p = identity(c.n);
    for (std::size_t j = 1; j < c.n; ++j) {
      p = matmul(p, nil);
      l += Complex((j % 2 == 1 ? 1.0 : -1.0) / double(j)) * p;
    }
    Complex num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < nil.entries().size(); ++i) {
      num += std::conj(nil.entries()[i]) * l.entries()[i];
      den += std::norm(nil.entries()[i]);
    }
    const Complex oracle = num / den;

    const SolutionSet s = solve_z(a);
    o.require(s.solutions.size() == 1, "n=" + std::to_string(c.n) + " returned " + std::to_string(s.solutions.size()));
    if (s.solutions.size() != 1) continue;
    const Complex z = s.solutions.front().z;
    o.require(std::abs(z - oracle) <= 1e-10, "n=" + std::to_string(c.n) + " z differs from oracle");
    o.require(verify(a, z, 1e-10).ok, "n=" + std::to_string(c.n) + " verify failed");
    o.require(s.classification == Classification::Unipotent, "classification");
    zs += (zs.empty() ? "" : ", ") + fmt("%.12g", z.real()) + fmt("%+.3gi", z.imag());
  }
  o.detail = "z = {" + zs + "}" + (o.detail.empty() ? "" : " | " + o.detail);
  return o;
}

// 8. Propagator of the three-qubit Hamiltonian.
Outcome schrodinger_propagator() {
  Outcome o;
  const Matrix k = pauli_string({1, 3, 2});
  const double err = frobenius_norm(evolve(k, kPi / 2) - (-kI) * k);
  o.require(err <= 1e-12, "evolve(pi/2) error " + fmt("%.2e", err));
  CounterRng rng(8);
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const Matrix e = evolve(k, rng.uniform(-50.0, 50.0));
    worst = std::max(worst, frobenius_norm(matmul(adjoint(e), e) - identity(8)));
  }
  o.require(worst <= 1e-11, "unitarity defect " + fmt("%.2e", worst));
  o.detail = "evolve error " + fmt("%.2e", err) + ", unitarity defect " + fmt("%.2e", worst) +
             (o.detail.empty() ? "" : " | " + o.detail);
  return o;
}

// 9. Pauli group order and closure.
Outcome pauli_group_order() {
  Outcome o;
  std::string sizes;
  for (std::size_t n : {1u, 2u, 3u}) {
    const auto g = pauli_group(n);
    const std::size_t expected = std::size_t{1} << (2 * (n + 1));
    o.require(g.size() == expected, "n=" + std::to_string(n) + " order " + std::to_string(g.size()));
    o.require(is_closed(g), "n=" + std::to_string(n) + " not closed");
    sizes += (sizes.empty() ? "" : ", ") + std::to_string(g.size());
  }
  o.detail = "orders {" + sizes + "}, closed" + (o.detail.empty() ? "" : " | " + o.detail);
  return o;
}

// 10. Grid scan of verify over [-8, 8]^2 at pitch 1e-3 against solve_z.
//
// Cells of the grid are excluded with a rigorous bound: for |z - c| <= r,
//   ||E(z) - E(c)||_F <= ||E(c)||_F (exp(r ||A - I||_F) - 1),  E(z) = exp(z (A - I)),
// so a cell whose centre residual exceeds that bound plus the threshold holds
// no grid point that verify() can accept. Surviving leaves are scanned point
// by point with verify() itself.
struct GridScan {
  const Matrix& a;
  double threshold;
  double b_norm;
  std::vector<Complex> flagged;
  std::size_t evaluated = 0;

  static constexpr std::int64_t kLast = 16000;
  static double coord(std::int64_t m) { return -8.0 + double(m) * 1e-3; }

  void scan(std::int64_t i0, std::int64_t i1, std::int64_t j0, std::int64_t j1) {
    if ((i1 - i0 + 1) * (j1 - j0 + 1) <= 64) {
      for (std::int64_t i = i0; i <= i1; ++i)
        for (std::int64_t j = j0; j <= j1; ++j) {
          const Complex z(coord(i), coord(j));
          ++evaluated;
          if (verify(a, z, 1e-9).ok) flagged.push_back(z);
        }
      return;
    }
    const double x0 = coord(i0), x1 = coord(i1), y0 = coord(j0), y1 = coord(j1);
    const Complex c(0.5 * (x0 + x1), 0.5 * (y0 + y1));
    const double r = 0.5 * std::hypot(x1 - x0, y1 - y0);
    const Matrix b = a - identity(a.rows());
    bool excluded = false;
    try {
      const Matrix e = expm(c * b);
      const double fc = frobenius_norm(e - a);
      const double en = frobenius_norm(e);
      const double bound = en * std::expm1(r * b_norm);
      excluded = fc - bound - 1e-12 * std::max(1.0, en) > threshold;
    } catch (const OverflowError&) {
      excluded = false;
    }
    if (excluded) return;
    const std::int64_t im = (i0 + i1) / 2;
    const std::int64_t jm = (j0 + j1) / 2;
    scan(i0, im, j0, jm);
    scan(im + 1, i1, j0, jm);
    scan(i0, im, jm + 1, j1);
    scan(im + 1, i1, jm + 1, j1);
  }
};

Outcome brute_force_equivalence() {
  Outcome o;
  CounterRng rng(10);
  std::size_t total_flagged = 0;
  std::size_t total_evaluated = 0;
  int built_on_grid = 0;
  int dense_windows = 0;
  for (int t = 0; t < 10; ++t) {
    Complex lambda;
    std::int64_t pi = 0, pj = 0;
    if (t < 5) {
      // Eigenvalue chosen so that a grid point is an exact solution.
      for (;;) {
        pi = rng.uniform_int(100, GridScan::kLast - 100);
        pj = rng.uniform_int(100, GridScan::kLast - 100);
        const Complex z0(GridScan::coord(pi), GridScan::coord(pj));
        if (std::abs(z0) < 0.3 || std::abs(z0) > 4.0) continue;
        lambda = lambda_from_z(z0, BranchIndex(static_cast<int>(rng.uniform_int(-1, 1))));
        if (std::abs(lambda - 1.0) > 0.2 && std::abs(lambda - 1.0) < 3.0) break;
      }
      ++built_on_grid;
    } else {
      do {
        lambda = std::polar(rng.uniform(0.3, 2.5), rng.uniform(-kPi, kPi));
      } while (std::abs(lambda - 1.0) < 0.2);
    }
    const Matrix a = assemble_normal({lambda, 1.0}, rng.next_u64());
    const double b_norm = frobenius_norm(a - identity(2));

    // Anchor branches wide enough to reach every candidate in the box.
    const int kmax = static_cast<int>(
        std::ceil((8.0 * std::sqrt(2.0) * std::abs(lambda - 1.0) + std::abs(principal_log(lambda))) / (2 * kPi))) + 1;
    SolverOptions opts;
    opts.branches = {-kmax, kmax};
    const SolutionSet s = solve_z(a, opts);

    GridScan scan{a, 1e-9 * std::max(1.0, frobenius_norm(a)), b_norm, {}, 0};
    scan.scan(0, GridScan::kLast, 0, GridScan::kLast);
    total_evaluated += scan.evaluated;
    total_flagged += scan.flagged.size();
    for (const Complex& z : scan.flagged) {
      const bool near = std::any_of(s.solutions.begin(), s.solutions.end(),
                                    [&](const SolutionWitness& w) { return std::abs(w.z - z) <= 1e-6; });
      o.require(near, "matrix " + std::to_string(t) + " flags z far from every solve_z output");
    }
    if (t < 5) {
      o.require(!scan.flagged.empty(), "matrix " + std::to_string(t) + ": planted grid solution not flagged");
      // The exclusion bound must not hide anything: a dense scan of the window
      // around the planted point flags exactly what the pruned scan flags there.
      std::vector<Complex> dense;
      for (std::int64_t i = pi - 100; i <= pi + 100; ++i)
        for (std::int64_t j = pj - 100; j <= pj + 100; ++j) {
          const Complex z(GridScan::coord(i), GridScan::coord(j));
          if (verify(a, z, 1e-9).ok) dense.push_back(z);
        }
      ++dense_windows;
      std::size_t pruned_in_window = 0;
      for (const Complex& z : scan.flagged)
        pruned_in_window += std::abs(z.real() - GridScan::coord(pi)) <= 0.1 + 1e-12 &&
                            std::abs(z.imag() - GridScan::coord(pj)) <= 0.1 + 1e-12;
      o.require(dense.size() == pruned_in_window, "dense window disagrees with pruned scan");
    }
  }
  o.detail = "10 matrices (" + std::to_string(built_on_grid) + " with a planted grid solution), " +
             std::to_string(total_evaluated) + " grid points evaluated after exclusion, " +
             std::to_string(total_flagged) + " flagged, all within 1e-6 of solve_z; " +
             std::to_string(dense_windows) + " dense 201x201 windows match the pruned scan" +
             (o.detail.empty() ? "" : " | " + o.detail);
  return o;
}

// 11. expm against a Taylor series and the determinant identity.
Outcome expm_correctness() {
  Outcome o;
  CounterRng rng(11);
  double worst_taylor = 0.0;
  for (int t = 0; t < 200; ++t) {
    Matrix a = random_matrix(3, rng);
    a *= Complex(rng.uniform(0.0, 2.0) / frobenius_norm(a));
    Matrix sum = identity(3);
    Matrix term = identity(3);
    for (int j = 1; j < 60; ++j) {
      term = matmul(term, a);
      term *= Complex(1.0 / j);
      sum += term;
    }
    worst_taylor = std::max(worst_taylor, frobenius_norm(expm(a) - sum));
  }
  double worst_det = 0.0;
  for (int t = 0; t < 200; ++t) {
    Matrix a = random_matrix(4, rng);
    a *= Complex(rng.uniform(0.1, 5.0) / frobenius_norm(a));
    const Complex expected = std::exp(trace(a));
    worst_det = std::max(worst_det, std::abs(det(expm(a)) - expected) / std::abs(expected));
  }
  o.require(worst_taylor <= 1e-12, "Taylor disagreement " + fmt("%.2e", worst_taylor));
  o.require(worst_det <= 1e-9, "determinant disagreement " + fmt("%.2e", worst_det));
  o.detail = "max ||expm - Taylor60||_F " + fmt("%.2e", worst_taylor) + ", max det relative error " +
             fmt("%.2e", worst_det) + (o.detail.empty() ? "" : " | " + o.detail);
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"Pauli identities", pauli_identities},
      {"involutory family", involutory_family},
      {"Lambert W anchors", lambert_anchors},
      {"construction completeness", construction_completeness},
      {"integrality filter", integrality_filter},
      {"power-basis conditions", power_basis_conditions},
      {"unipotent case", unipotent_case},
      {"Schrodinger propagator", schrodinger_propagator},
      {"Pauli group", pauli_group_order},
      {"brute-force equivalence", brute_force_equivalence},
      {"expm correctness", expm_correctness},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !outcome.pass;
    std::printf("%s %2d %-26s %s (%.2fs)\n", outcome.pass ? "PASS" : "FAIL", index, name, outcome.detail.c_str(), secs);
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
