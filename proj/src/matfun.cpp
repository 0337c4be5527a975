#include "matfix/matfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "matfix/errors.hpp"
#include "matfix/qr.hpp"

namespace matfix {

namespace {

constexpr std::array<double, 14> kPade13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0};

// theta_13: largest ||A||_1 for which the unscaled [13/13] approximant is
// accurate to unit roundoff.
constexpr double kTheta13 = 5.37;

std::vector<Complex> vec(const Matrix& m) {
  return {m.entries().begin(), m.entries().end()};
}

// Columns vec(A^j) / ||A^j||_F, j = 0..count-1, plus the norms used.
Matrix power_columns(const Matrix& a, std::size_t count, std::vector<double>& norms) {
  const std::size_t n = a.rows();
  Matrix cols(n * n, count);
  norms.assign(count, 0.0);
  Matrix p = identity(n);
  for (std::size_t j = 0; j < count; ++j) {
    if (j > 0) p = p * a;
    const double nrm = frobenius_norm(p);
    norms[j] = nrm;
    const double inv = nrm == 0.0 ? 0.0 : 1.0 / nrm;
    for (std::size_t i = 0; i < n * n; ++i) cols(i, j) = p.entries()[i] * inv;
  }
  return cols;
}

}  // namespace

Matrix expm(const Matrix& a) {
  if (!a.is_square()) throw ShapeError("expm: square matrix required");
  const std::size_t n = a.rows();
  const double anorm = norm1(a);
  if (!std::isfinite(anorm)) throw OverflowError("expm: input norm is not finite");

  int s = 0;
  if (anorm > kTheta13) s = std::max(0, static_cast<int>(std::ceil(std::log2(anorm / kTheta13))));
  if (s > 1000) throw OverflowError("expm: norm too large to scale");
  const Matrix as = scale(a, std::ldexp(1.0, -s));

  const Matrix& b = as;
  const Matrix id = identity(n);
  const Matrix b2 = b * b;
  const Matrix b4 = b2 * b2;
  const Matrix b6 = b4 * b2;
  const auto& c = kPade13;
  Matrix u_inner = b6 * (c[13] * b6 + c[11] * b4 + c[9] * b2);
  u_inner += c[7] * b6 + c[5] * b4 + c[3] * b2 + c[1] * id;
  const Matrix u = b * u_inner;
  Matrix v = b6 * (c[12] * b6 + c[10] * b4 + c[8] * b2);
  v += c[6] * b6 + c[4] * b4 + c[2] * b2 + c[0] * id;

  Matrix r = solve(v - u, v + u);
  for (int i = 0; i < s; ++i) {
    r = r * r;
    if (!r.all_finite()) break;
  }
  if (!r.all_finite()) throw OverflowError("expm: result overflows double precision");
  return r;
}

Matrix expm_involutory(const Matrix& b, Complex z, double tol) {
  if (!is_involutory(b, tol)) throw PreconditionError("expm_involutory: matrix is not involutory");
  Matrix e = std::sinh(z) * b;
  const Complex ch = std::cosh(z);
  for (std::size_t i = 0; i < b.rows(); ++i) e(i, i) += ch;
  return e;
}

std::size_t power_basis_degree(const Matrix& a, double rel_tol) {
  if (!a.is_square()) throw ShapeError("power_basis_degree: square matrix required");
  std::vector<double> norms;
  const Matrix cols = power_columns(a, a.rows(), norms);
  const HouseholderQr qr(cols, /*pivot=*/true);
  const std::size_t rank = qr.rank(rel_tol);
  return rank == 0 ? 0 : rank - 1;
}

PowerBasisExpansion expand_exp_in_powers(const Matrix& a, Complex z, double rel_tol) {
  if (!a.is_square()) throw ShapeError("expand_exp_in_powers: square matrix required");
  const std::size_t n = a.rows();
  PowerBasisExpansion out;
  out.degree_r = power_basis_degree(a, rel_tol);
  const std::size_t count = out.degree_r + 1;

  std::vector<double> norms;
  const Matrix cols = power_columns(a, count, norms);
  const Matrix e = expm(z * a);
  const HouseholderQr qr(cols, /*pivot=*/true);
  out.condition_estimate = qr.condition_estimate();
  out.ill_conditioned = out.condition_estimate > 1e12;

  const std::vector<Complex> x = qr.solve_least_squares(vec(e));
  out.coefficients.resize(count);
  for (std::size_t j = 0; j < count; ++j) out.coefficients[j] = norms[j] == 0.0 ? 0.0 : x[j] / norms[j];

  Matrix recon(n, n);
  Matrix p = identity(n);
  for (std::size_t j = 0; j < count; ++j) {
    if (j > 0) p = p * a;
    recon += out.coefficients[j] * p;
  }
  out.residual = frobenius_norm(recon - e);
  if (out.degree_r == 0) out.identity_multiple = trace(a) / static_cast<double>(n);
  return out;
}

bool solution_coefficient_check(const PowerBasisExpansion& expansion, Complex z, double tol) {
  const Complex ez = std::exp(z);
  const double bound = tol * std::max(1.0, std::abs(ez));
  const auto& c = expansion.coefficients;
  if (expansion.degree_r == 0) {
    const Complex alpha = expansion.identity_multiple;
    return std::abs(c[0] - alpha * ez) <= bound * std::max(1.0, std::abs(alpha));
  }
  for (std::size_t j = 0; j < c.size(); ++j) {
    const Complex target = j == 1 ? ez : Complex{};
    if (std::abs(c[j] - target) > bound) return false;
  }
  return true;
}

}  // namespace matfix
