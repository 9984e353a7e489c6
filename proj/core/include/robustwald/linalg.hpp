#ifndef ROBUSTWALD_LINALG_HPP
#define ROBUSTWALD_LINALG_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "robustwald/errors.hpp"

namespace rw {

using Vector = std::vector<double>;

// Dense row-major matrix. Dimensions here stay small (p <= 6 for the models,
// design matrices a bit larger), so no sparsity or blocking.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double value = 0.0)
      : rows_(rows), cols_(cols), a_(rows * cols, value) {}

  static Matrix identity(std::size_t n);
  static Matrix diag(const Vector& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Matrix transpose() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(double s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, double s) { return a *= s; }
  friend Matrix operator*(double s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> a_;
};

Vector operator*(const Matrix& m, const Vector& v);

double dot(const Vector& a, const Vector& b);
Matrix outer(const Vector& a, const Vector& b);
double trace(const Matrix& m);

// v^T m v for square m.
double quad_form(const Matrix& m, const Vector& v);

// Max relative asymmetry |a_ij - a_ji| / max(1, |a_ij|).
double asymmetry(const Matrix& m);

// Lower-triangular Cholesky factor of an SPD matrix; throws NumericalError
// (mentioning `role`) if the matrix is not positive-definite.
Matrix cholesky(const Matrix& m, const std::string& role = "matrix");

// Solve m x = b given the Cholesky factor of m.
Vector cholesky_solve(const Matrix& chol_lower, const Vector& b);

// Inverse of a symmetric positive-definite matrix. Rejects condition
// numbers >= 1e12, naming `role` in the error message.
Matrix invert_spd(const Matrix& m, const std::string& role = "matrix");

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, descending.
std::vector<double> symmetric_eigenvalues(Matrix m);

// Eigenvalues of b^{-1} a for symmetric a and SPD b (the pencil a v = l b v),
// reduced via the Cholesky factor of b, sorted descending.
std::vector<double> generalized_eigenvalues(const Matrix& a, const Matrix& b);

}  // namespace rw

#endif
