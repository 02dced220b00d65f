#pragma once

#include <gmpxx.h>

#include <Eigen/Dense>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "eigenframe/graphcore/graph.hpp"

namespace eigenframe {

using ExactVector = std::vector<mpq_class>;

/// Dense row-major matrix of rationals. Entries are kept in lowest terms with a
/// positive denominator (GMP arithmetic maintains this; set() canonicalizes).
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_integers(std::initializer_list<std::initializer_list<long>> rows);
  /// Columns of the result are the given vectors (all of length `rows`).
  static ExactMatrix from_columns(std::size_t rows, std::span<const ExactVector> columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  const mpq_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  mpq_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, mpq_class value);

  ExactMatrix transpose() const;
  bool is_symmetric() const;
  bool is_zero() const;
  mpq_class trace() const;
  ExactVector column(std::size_t j) const;
  ExactMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  ExactMatrix select_columns(std::span<const std::size_t> cols) const;

  Eigen::MatrixXd to_double() const;

  ExactMatrix& operator+=(const ExactMatrix& other);
  ExactMatrix& operator-=(const ExactMatrix& other);
  ExactMatrix& operator*=(const mpq_class& scalar);

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const mpq_class& s) { return a *= s; }
  friend ExactMatrix operator*(const mpq_class& s, ExactMatrix a) { return a *= s; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpq_class> data_;
};

/// Entrywise (Hadamard) product.
ExactMatrix hadamard(const ExactMatrix& a, const ExactMatrix& b);

ExactVector operator*(const ExactMatrix& m, const ExactVector& v);

/// 0/1 adjacency matrix of g.
ExactMatrix adjacency_matrix(const Graph& g);
Eigen::MatrixXd adjacency_matrix_double(const Graph& g);

/// Largest absolute row sum (the Gershgorin radius bound for symmetric input).
mpq_class max_abs_row_sum(const ExactMatrix& m);

// --- elimination -----------------------------------------------------------

/// Basis of Ker m from fraction-free (Bareiss) Gauss-Jordan elimination. Each
/// basis vector is integral, primitive (gcd 1) and has a positive leading
/// entry; there is one vector per non-pivot column. Empty when m is injective.
std::vector<ExactVector> nullspace(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

/// Exact inverse; throws InvalidArgument when m is singular or not square.
ExactMatrix inverse(const ExactMatrix& m);

/// Columns of m that form a basis of its column space (first pivot columns).
std::vector<std::size_t> pivot_columns(const ExactMatrix& m);

/// Orthogonal projector onto Ker m: E = B (B^T B)^{-1} B^T for a kernel basis B.
ExactMatrix projector_onto_nullspace(const ExactMatrix& m);

// --- characteristic polynomial / PSD ---------------------------------------

/// Coefficients c_0..c_n of det(xI - m) (so c_n = 1) via the Faddeev-LeVerrier
/// recurrence in exact arithmetic.
std::vector<mpq_class> characteristic_polynomial(const ExactMatrix& m);

/// Exact positive-semidefiniteness of a symmetric rational matrix: all roots of
/// det(xI - m) are real, so m is PSD iff (-1)^{n-k} c_k >= 0 for every k.
/// Throws InvalidArgument for asymmetric input.
bool is_psd_exact(const ExactMatrix& m);

}  // namespace eigenframe
