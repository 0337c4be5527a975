#include "matfix/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "matfix/errors.hpp"
#include "matfix/qr.hpp"
#include "matfix/random.hpp"

namespace matfix {

namespace {

constexpr double kDeflationTol = 1e-14;

Complex wilkinson_shift(Complex a, Complex b, Complex c, Complex d) {
  // Eigenvalue of [[a, b], [c, d]] closer to d.
  const Complex half_tr = 0.5 * (a + d);
  const Complex disc = std::sqrt(0.25 * (a - d) * (a - d) + b * c);
  const Complex l1 = half_tr + disc;
  const Complex l2 = half_tr - disc;
  return std::abs(l1 - d) <= std::abs(l2 - d) ? l1 : l2;
}

void qr_sweep(Matrix& h, std::size_t lo, std::size_t hi, Complex mu) {
  const std::size_t m = hi - lo;
  std::vector<double> cs(m);
  std::vector<Complex> sn(m);
  for (std::size_t j = lo; j <= hi; ++j) h(j, j) -= mu;
  for (std::size_t j = lo; j < hi; ++j) {
    const Complex a = h(j, j);
    const Complex b = h(j + 1, j);
    const double r = std::hypot(std::abs(a), std::abs(b));
    double c;
    Complex s;
    if (r == 0.0) {
      c = 1.0;
      s = 0.0;
    } else if (std::abs(a) == 0.0) {
      c = 0.0;
      s = 1.0;
    } else {
      c = std::abs(a) / r;
      s = (a / std::abs(a)) * std::conj(b) / r;
    }
    cs[j - lo] = c;
    sn[j - lo] = s;
    for (std::size_t col = j; col <= hi; ++col) {
      const Complex x = h(j, col);
      const Complex y = h(j + 1, col);
      h(j, col) = c * x + s * y;
      h(j + 1, col) = -std::conj(s) * x + c * y;
    }
  }
  for (std::size_t j = lo; j < hi; ++j) {
    const double c = cs[j - lo];
    const Complex s = sn[j - lo];
    const std::size_t last = std::min(j + 2, hi);
    for (std::size_t row = lo; row <= last; ++row) {
      const Complex x = h(row, j);
      const Complex y = h(row, j + 1);
      h(row, j) = x * c + y * std::conj(s);
      h(row, j + 1) = -x * s + y * c;
    }
  }
  for (std::size_t j = lo; j <= hi; ++j) h(j, j) += mu;
}

}  // namespace

bool spectral_order(Complex a, Complex b) {
  const double ma = std::abs(a);
  const double mb = std::abs(b);
  if (ma != mb) return ma > mb;
  if (a.real() != b.real()) return a.real() > b.real();
  return a.imag() > b.imag();
}

Matrix hessenberg(const Matrix& a) {
  if (!a.is_square()) throw ShapeError("hessenberg: square matrix required");
  Matrix h = a;
  const std::size_t n = h.rows();
  for (std::size_t k = 0; k + 2 < n; ++k) {
    std::vector<Complex> v(n - k - 1);
    double tail = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) {
      v[i - k - 1] = h(i, k);
      if (i > k + 1) tail += std::norm(h(i, k));
    }
    if (tail == 0.0) continue;
    const double xnorm = std::sqrt(tail + std::norm(v[0]));
    const Complex phase = std::abs(v[0]) == 0.0 ? Complex{1.0} : v[0] / std::abs(v[0]);
    const Complex alpha = -phase * xnorm;
    v[0] -= alpha;
    double vn2 = 0.0;
    for (const Complex& c : v) vn2 += std::norm(c);
    const double beta = 2.0 / vn2;
    // Left: rows k+1.., all columns from k.
    for (std::size_t j = k; j < n; ++j) {
      Complex s{};
      for (std::size_t i = k + 1; i < n; ++i) s += std::conj(v[i - k - 1]) * h(i, j);
      s *= beta;
      for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= s * v[i - k - 1];
    }
    // Right: columns k+1.., all rows.
    for (std::size_t i = 0; i < n; ++i) {
      Complex s{};
      for (std::size_t j = k + 1; j < n; ++j) s += h(i, j) * v[j - k - 1];
      s *= beta;
      for (std::size_t j = k + 1; j < n; ++j) h(i, j) -= s * std::conj(v[j - k - 1]);
    }
    h(k + 1, k) = alpha;
    for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
  }
  return h;
}

SpectrumReport eigenvalues(const Matrix& a, double grouping_tol) {
  if (!a.is_square()) throw ShapeError("eigenvalues: square matrix required");
  const std::size_t n = a.rows();
  Matrix h = hessenberg(a);
  const double hnorm = frobenius_norm(h);
  std::vector<Complex> eig(n);

  const std::size_t cap = 100 * n;
  std::size_t total = 0;
  std::size_t stalled = 0;
  std::size_t hi = n - 1;
  while (true) {
    if (hi == 0) {
      eig[0] = h(0, 0);
      break;
    }
    std::size_t lo = hi;
    while (lo > 0) {
      double s = std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo));
      if (s == 0.0) s = hnorm;
      if (std::abs(h(lo, lo - 1)) <= kDeflationTol * s) {
        h(lo, lo - 1) = 0.0;
        break;
      }
      --lo;
    }
    if (lo == hi) {
      eig[hi] = h(hi, hi);
      --hi;
      stalled = 0;
      continue;
    }
    if (++total > cap) {
      throw ConvergenceError("eigenvalues: QR iteration did not converge; undeflated block rows " +
                             std::to_string(lo) + ".." + std::to_string(hi));
    }
    ++stalled;
    Complex mu;
    if (stalled % 10 == 0) {
      mu = h(hi, hi) + 0.75 * std::abs(h(hi, hi - 1));
    } else {
      mu = wilkinson_shift(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
    }
    qr_sweep(h, lo, hi, mu);
  }

  std::sort(eig.begin(), eig.end(), spectral_order);
  SpectrumReport report;
  report.eigenvalues = std::move(eig);
  report.normal_defect = is_normal(a, 0.0).defect;
  report.unit_eigenvalue_count = static_cast<std::size_t>(
      std::count_if(report.eigenvalues.begin(), report.eigenvalues.end(),
                    [&](Complex l) { return std::abs(l - 1.0) <= grouping_tol; }));
  return report;
}

std::vector<EigenCluster> group_eigenvalues(const std::vector<Complex>& values, double tol) {
  const std::size_t n = values.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(values[i] - values[j]) <= tol) parent[find(i)] = find(j);

  std::vector<EigenCluster> clusters;
  std::vector<std::size_t> root_of_cluster;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    auto it = std::find(root_of_cluster.begin(), root_of_cluster.end(), r);
    if (it == root_of_cluster.end()) {
      root_of_cluster.push_back(r);
      clusters.push_back({values[i], 1, false});
    } else {
      auto& c = clusters[static_cast<std::size_t>(it - root_of_cluster.begin())];
      c.representative += values[i];
      ++c.multiplicity;
    }
  }
  for (auto& c : clusters) {
    c.representative /= static_cast<double>(c.multiplicity);
    c.unit = std::abs(c.representative - 1.0) <= tol;
  }
  std::sort(clusters.begin(), clusters.end(), [](const EigenCluster& x, const EigenCluster& y) {
    if (x.unit != y.unit) return x.unit;
    return spectral_order(x.representative, y.representative);
  });
  return clusters;
}

std::vector<EigenCluster> group_eigenvalues(const SpectrumReport& report, double tol) {
  return group_eigenvalues(report.eigenvalues, tol);
}

Matrix random_unitary(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw ShapeError("random_unitary: n must be at least 1");
  CounterRng rng(seed);
  Matrix g(n, n);
  for (auto& v : g.entries()) v = rng.complex_normal();
  const HouseholderQr qr(g);
  Matrix q = qr.q();
  const Matrix r = qr.r();
  for (std::size_t j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    const Complex phase = mag == 0.0 ? Complex{1.0} : r(j, j) / mag;
    for (std::size_t i = 0; i < n; ++i) q(i, j) *= phase;
  }
  return q;
}

Matrix assemble_normal(const std::vector<Complex>& eigenvalues, std::uint64_t seed) {
  const Matrix u = random_unitary(eigenvalues.size(), seed);
  return u * diagonal(eigenvalues) * adjoint(u);
}

}  // namespace matfix
