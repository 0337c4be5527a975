#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace matfix {

using Complex = std::complex<double>;

/// Dense row-major complex matrix.
///
/// Matrices in this library are small (n <= 64), so storage is a single
/// contiguous vector and every operation returns a new value. Entries must
/// be finite; the constructors reject NaN and Inf.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Complex> entries() const { return data_; }
  std::span<Complex> entries() { return data_; }

  bool all_finite() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(Complex c);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

Matrix identity(std::size_t n);
Matrix zeros(std::size_t rows, std::size_t cols);
Matrix diagonal(std::span<const Complex> values);
Matrix diagonal(std::initializer_list<Complex> values);

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, Complex c);

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix operator*(Complex c, const Matrix& a);
Matrix operator*(const Matrix& a, Complex c);

Matrix adjoint(const Matrix& a);
Matrix transpose(const Matrix& a);

Complex trace(const Matrix& a);

/// Determinant by LU with partial pivoting. An exactly zero pivot yields 0.
Complex det(const Matrix& a);

Matrix kron(const Matrix& a, const Matrix& b);
Matrix direct_sum(const Matrix& a, const Matrix& b);

double frobenius_norm(const Matrix& a);
/// Maximum absolute column sum.
double norm1(const Matrix& a);

/// Solves a * x = b for square a by LU with partial pivoting.
/// Throws DomainError when a is exactly singular.
Matrix solve(const Matrix& a, const Matrix& b);
Matrix inverse(const Matrix& a);

/// a^p for p >= 0 by repeated squaring.
Matrix power(const Matrix& a, unsigned p);

struct NormalityResult {
  bool normal;
  double defect;  // ||A A* - A* A||_F
};

/// ||AA* - A*A||_F <= tol * max(1, ||A||_F^2).
NormalityResult is_normal(const Matrix& a, double tol);

/// ||A^2 - I||_F <= tol * max(1, ||A||_F^2).
bool is_involutory(const Matrix& a, double tol);

/// Largest entrywise modulus difference; convenient in tests.
double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace matfix
