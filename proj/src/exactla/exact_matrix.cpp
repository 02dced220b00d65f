#include "eigenframe/exactla/exact_matrix.hpp"

#include <algorithm>
#include <string>

#include "eigenframe/error.hpp"

namespace eigenframe {
namespace {

void require_same_shape(const ExactMatrix& a, const ExactMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidArgument(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                          std::to_string(b.cols()));
  }
}

}  // namespace

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_integers(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  ExactMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw InvalidArgument("ragged integer matrix literal");
    std::size_t j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

ExactMatrix ExactMatrix::from_columns(std::size_t rows, std::span<const ExactVector> columns) {
  ExactMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw InvalidArgument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

void ExactMatrix::set(std::size_t i, std::size_t j, mpq_class value) {
  value.canonicalize();
  data_[i * cols_ + j] = std::move(value);
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool ExactMatrix::is_symmetric() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool ExactMatrix::is_zero() const {
  for (const auto& v : data_)
    if (sgn(v) != 0) return false;
  return true;
}

mpq_class ExactMatrix::trace() const {
  mpq_class t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

ExactVector ExactMatrix::column(std::size_t j) const {
  ExactVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

ExactMatrix ExactMatrix::submatrix(std::span<const std::size_t> rows,
                                   std::span<const std::size_t> cols) const {
  ExactMatrix s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
  return s;
}

ExactMatrix ExactMatrix::select_columns(std::span<const std::size_t> cols) const {
  ExactMatrix s(rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(i, cols[j]);
  return s;
}

Eigen::MatrixXd ExactMatrix::to_double() const {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(rows_), static_cast<Eigen::Index>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = (*this)(i, j).get_d();
  return out;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const mpq_class& scalar) {
  for (auto& v : data_) v *= scalar;
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) {
    throw InvalidArgument("matrix product: inner dimensions " + std::to_string(a.cols()) +
                          " and " + std::to_string(b.rows()) + " differ");
  }
  ExactMatrix c(a.rows(), b.cols());
  mpq_class term;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const mpq_class& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const mpq_class& bkj = b(k, j);
        if (sgn(bkj) == 0) continue;
        term = aik * bkj;
        c(i, j) += term;
      }
    }
  }
  return c;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

ExactMatrix hadamard(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_shape(a, b, "hadamard");
  ExactMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) * b(i, j);
  return c;
}

ExactVector operator*(const ExactMatrix& m, const ExactVector& v) {
  if (m.cols() != v.size()) throw InvalidArgument("matrix-vector product: size mismatch");
  ExactVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0 && sgn(v[j]) != 0) out[i] += m(i, j) * v[j];
  return out;
}

ExactMatrix adjacency_matrix(const Graph& g) {
  ExactMatrix a(g.order(), g.order());
  for (const Edge& e : g.edges()) {
    a(e.u, e.v) = 1;
    a(e.v, e.u) = 1;
  }
  return a;
}

Eigen::MatrixXd adjacency_matrix_double(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    a(e.u, e.v) = 1.0;
    a(e.v, e.u) = 1.0;
  }
  return a;
}

mpq_class max_abs_row_sum(const ExactMatrix& m) {
  mpq_class best = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpq_class sum = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) sum += abs(m(i, j));
    if (sum > best) best = sum;
  }
  return best;
}

}  // namespace eigenframe
