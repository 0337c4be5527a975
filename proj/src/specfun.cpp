#include "matfix/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "matfix/errors.hpp"

namespace matfix {

namespace {

using std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kHalleyCap = 100;

void check_branch_bound(BranchIndex k) {
  if (k.value > kBranchBound || k.value < -kBranchBound) {
    throw DomainError("branch index " + std::to_string(k.value) + " exceeds bound " +
                      std::to_string(kBranchBound));
  }
}

// Places points on the real axis on the upper side of any cut.
Complex from_above(Complex x) {
  if (x.imag() == 0.0) return {x.real(), 0.0};
  return x;
}

struct HalleyResult {
  Complex w;
  double residual;
  bool converged;
};

HalleyResult halley(Complex x, Complex w) {
  const double floor = 8.0 * kEps * std::max(1.0, std::abs(x));
  double residual = std::numeric_limits<double>::infinity();
  for (int it = 0; it < kHalleyCap; ++it) {
    const Complex ew = std::exp(w);
    const Complex f = w * ew - x;
    residual = std::abs(f);
    if (residual == 0.0) return {w, 0.0, true};
    const Complex wp1 = w + 1.0;
    Complex step;
    if (wp1 == Complex{}) {
      // Halley is undefined at the branch point; take a Newton step off it.
      w += Complex{1e-8, 1e-8};
      continue;
    }
    const Complex denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    step = f / denom;
    if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
    w -= step;
    if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(w))) {
      return {w, std::abs(w * std::exp(w) - x), true};
    }
    // Rounding-limited: the residual cannot improve any further.
    if (residual <= floor) {
      return {w, std::abs(w * std::exp(w) - x), true};
    }
  }
  return {w, residual, false};
}

// Branch-point series W = -1 + s*p - p^2/3 + s*11/72 p^3, p = sqrt(2(e x + 1)).
Complex branch_point_guess(Complex x, double sign) {
  const Complex p = std::sqrt(2.0 * (std::numbers::e * x + 1.0));
  return -1.0 + sign * p - p * p / 3.0 + sign * (11.0 / 72.0) * p * p * p;
}

Complex asymptotic_guess(Complex x, BranchIndex k) {
  const Complex l1 = log_branch(x, k);
  if (l1 == Complex{}) return {};
  return l1 - std::log(l1);
}

// True when w, or a point within a relative distance of 1e-9, lies in branch k.
// Values on a region boundary are accepted for either neighbouring branch.
bool near_branch(Complex w, int k) {
  if (lambert_w_branch_of(w) == k) return true;
  const double r = 1e-9 * std::max(1.0, std::abs(w));
  static constexpr std::array<Complex, 8> dirs = {
      Complex{1, 0}, Complex{-1, 0}, Complex{0, 1}, Complex{0, -1},
      Complex{1, 1}, Complex{1, -1}, Complex{-1, 1}, Complex{-1, -1}};
  for (const Complex& d : dirs)
    if (lambert_w_branch_of(w + r * d) == k) return true;
  return false;
}

}  // namespace

Complex principal_log(Complex w) {
  Complex l = std::log(from_above(w));
  if (l.imag() <= -pi) l.imag(pi);
  return l;
}

Complex log_branch(Complex w, BranchIndex k) {
  check_branch_bound(k);
  if (w == Complex{}) throw DomainError("log_branch: logarithm of zero");
  return principal_log(w) + Complex{0.0, 2.0 * pi * k.value};
}

int lambert_w_branch_of(Complex w) {
  const double a = w.real();
  const double b = w.imag();
  if (b == 0.0) return a >= -1.0 ? 0 : -1;
  const double bb = std::abs(b);
  const auto band = static_cast<long>(std::floor(bb / pi));
  const long j = band / 2;
  long k;
  if (band % 2 == 1) {
    k = j + 1;
  } else {
    const double curve = -bb / std::tan(bb);
    // Curve points are images of the negative real axis; taking the limit
    // from above assigns them to the branch on their lower side.
    const bool right = b > 0.0 ? a >= curve : a > curve;
    k = right ? j : j + 1;
  }
  return static_cast<int>(b > 0.0 ? k : -k);
}

Complex lambert_w(Complex x, BranchIndex k) {
  check_branch_bound(k);
  x = from_above(x);
  if (x == Complex{}) {
    if (k.value == 0) return {};
    throw DomainError("lambert_w: W_k(0) is defined only for k = 0");
  }
  const double inv_e = std::exp(-1.0);
  if ((k.value == 0 || k.value == -1) && x.imag() == 0.0 && x.real() == -inv_e) {
    return {-1.0, 0.0};
  }

  std::array<std::optional<Complex>, 4> guesses;
  const bool near_bp = std::abs(x + inv_e) < 0.3;
  if (near_bp && k.value == 0) {
    guesses[0] = branch_point_guess(x, 1.0);
  } else if (near_bp && ((k.value == -1 && x.imag() >= 0.0) || (k.value == 1 && x.imag() < 0.0))) {
    guesses[0] = branch_point_guess(x, -1.0);
  } else if (k.value == 0 && std::abs(x) < 0.3) {
    guesses[0] = x - x * x + 1.5 * x * x * x;
  }
  guesses[1] = asymptotic_guess(x, k);
  // Fallbacks for the moderate-|x| region where neither expansion is sharp.
  guesses[2] = k.value == 0 ? std::log(1.0 + x) : log_branch(x, k);
  guesses[3] = Complex{k.value == 0 ? 0.5 : -2.0, 2.0 * pi * k.value + (x.imag() >= 0 ? 0.5 : -0.5)};

  HalleyResult last{{}, std::numeric_limits<double>::infinity(), false};
  for (const auto& g : guesses) {
    if (!g) continue;
    const HalleyResult r = halley(x, *g);
    last = r;
    if (r.converged && r.residual <= 1e-13 * std::max(1.0, std::abs(x)) && near_branch(r.w, k.value)) {
      return r.w;
    }
  }
  throw ConvergenceError("lambert_w: no convergence in branch " + std::to_string(k.value) +
                             " for x = (" + std::to_string(x.real()) + ", " +
                             std::to_string(x.imag()) + ")",
                         last.w, last.residual);
}

Complex lambda_from_z(Complex z, BranchIndex k) {
  if (z == Complex{}) throw DomainError("lambda_from_z: z = 0 admits only A = I");
  const Complex w = lambert_w(-z * std::exp(-z), k);
  const Complex lambda = -w / z;
  const double residual = std::abs(std::exp(z * (lambda - 1.0)) - lambda);
  if (residual > 1e-10 * std::max(1.0, std::abs(lambda))) {
    throw ConvergenceError("lambda_from_z: eigenvalue residual too large", lambda, residual);
  }
  return lambda;
}

}  // namespace matfix
