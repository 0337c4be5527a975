#include "matfix/qr.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "matfix/errors.hpp"

namespace matfix {

HouseholderQr::HouseholderQr(const Matrix& a, bool pivot)
    : m_(a.rows()), n_(a.cols()), qr_(a), beta_(a.cols()), perm_(a.cols()) {
  if (m_ < n_) throw ShapeError("HouseholderQr: requires rows >= cols");
  std::iota(perm_.begin(), perm_.end(), std::size_t{0});
  house_.resize(n_);

  std::vector<double> colnorm2(n_, 0.0);
  auto refresh_norms = [&](std::size_t from) {
    for (std::size_t j = from; j < n_; ++j) {
      double s = 0.0;
      for (std::size_t i = from; i < m_; ++i) s += std::norm(qr_(i, j));
      colnorm2[j] = s;
    }
  };

  for (std::size_t k = 0; k < n_; ++k) {
    if (pivot) {
      // Recomputed each step; matrices here are tiny, and downdating loses accuracy.
      refresh_norms(k);
      std::size_t best = k;
      for (std::size_t j = k + 1; j < n_; ++j)
        if (colnorm2[j] > colnorm2[best]) best = j;
      if (best != k) {
        for (std::size_t i = 0; i < m_; ++i) std::swap(qr_(i, k), qr_(i, best));
        std::swap(perm_[k], perm_[best]);
      }
    }

    std::vector<Complex>& v = house_[k];
    v.assign(m_ - k, Complex{});
    double xnorm2 = 0.0;
    for (std::size_t i = k; i < m_; ++i) {
      v[i - k] = qr_(i, k);
      xnorm2 += std::norm(v[i - k]);
    }
    double tail2 = xnorm2 - std::norm(v[0]);
    if (tail2 <= 0.0 && m_ - k > 1) {
      tail2 = 0.0;
      for (std::size_t i = 1; i < v.size(); ++i) tail2 += std::norm(v[i]);
    }
    if (tail2 == 0.0) {
      beta_[k] = 0.0;  // already upper triangular in this column
      continue;
    }
    const double xnorm = std::sqrt(xnorm2);
    const Complex x0 = v[0];
    const Complex phase = std::abs(x0) == 0.0 ? Complex{1.0} : x0 / std::abs(x0);
    const Complex alpha = -phase * xnorm;
    v[0] = x0 - alpha;
    double vnorm2 = 0.0;
    for (const Complex& c : v) vnorm2 += std::norm(c);
    beta_[k] = 2.0 / vnorm2;

    for (std::size_t j = k; j < n_; ++j) {
      Complex s{};
      for (std::size_t i = k; i < m_; ++i) s += std::conj(v[i - k]) * qr_(i, j);
      s *= beta_[k];
      for (std::size_t i = k; i < m_; ++i) qr_(i, j) -= s * v[i - k];
    }
    qr_(k, k) = alpha;
    for (std::size_t i = k + 1; i < m_; ++i) qr_(i, k) = 0.0;
  }
}

Matrix HouseholderQr::r() const {
  Matrix r(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j) r(i, j) = qr_(i, j);
  return r;
}

Matrix HouseholderQr::q() const {
  Matrix q = identity(m_);
  // Q = H_0 H_1 ... H_{n-1}; apply from the right-most reflector outward.
  for (std::size_t kk = n_; kk-- > 0;) {
    if (beta_[kk] == Complex{}) continue;
    const std::vector<Complex>& v = house_[kk];
    for (std::size_t j = 0; j < m_; ++j) {
      Complex s{};
      for (std::size_t i = kk; i < m_; ++i) s += std::conj(v[i - kk]) * q(i, j);
      s *= beta_[kk];
      for (std::size_t i = kk; i < m_; ++i) q(i, j) -= s * v[i - kk];
    }
  }
  return q;
}

std::size_t HouseholderQr::rank(double rel_tol) const {
  if (n_ == 0) return 0;
  const double lead = std::abs(qr_(0, 0));
  if (lead == 0.0) return 0;
  std::size_t r = 0;
  for (std::size_t i = 0; i < n_; ++i)
    if (std::abs(qr_(i, i)) > rel_tol * lead) ++r;
  return r;
}

double HouseholderQr::condition_estimate() const {
  double hi = 0.0;
  double lo = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n_; ++i) {
    const double d = std::abs(qr_(i, i));
    hi = std::max(hi, d);
    lo = std::min(lo, d);
  }
  if (lo == 0.0) return std::numeric_limits<double>::infinity();
  return hi / lo;
}

void HouseholderQr::apply_qh(std::vector<Complex>& b) const {
  for (std::size_t k = 0; k < n_; ++k) {
    if (beta_[k] == Complex{}) continue;
    const std::vector<Complex>& v = house_[k];
    Complex s{};
    for (std::size_t i = k; i < m_; ++i) s += std::conj(v[i - k]) * b[i];
    s *= beta_[k];
    for (std::size_t i = k; i < m_; ++i) b[i] -= s * v[i - k];
  }
}

std::vector<Complex> HouseholderQr::solve_least_squares(const std::vector<Complex>& b) const {
  if (b.size() != m_) throw ShapeError("solve_least_squares: rhs length mismatch");
  std::vector<Complex> y = b;
  apply_qh(y);
  std::vector<Complex> x_perm(n_);
  for (std::size_t ii = n_; ii-- > 0;) {
    Complex s = y[ii];
    for (std::size_t j = ii + 1; j < n_; ++j) s -= qr_(ii, j) * x_perm[j];
    if (qr_(ii, ii) == Complex{}) throw DomainError("solve_least_squares: rank-deficient system");
    x_perm[ii] = s / qr_(ii, ii);
  }
  std::vector<Complex> x(n_);
  for (std::size_t j = 0; j < n_; ++j) x[perm_[j]] = x_perm[j];
  return x;
}

}  // namespace matfix
