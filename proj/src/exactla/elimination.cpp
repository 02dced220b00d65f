// Fraction-free (Bareiss) Gauss-Jordan elimination over the integers.
//
// Rows are first scaled by the lcm of their denominators. Every elimination
// step replaces a_ij by (p * a_ij - a_ic * a_rj) / prev, where p is the new
// pivot and prev the previous one. The division is exact, every intermediate
// entry is a minor of the input and all pivots of the final form are equal.

#include <algorithm>
#include <string>

#include "eigenframe/error.hpp"
#include "eigenframe/exactla/exact_matrix.hpp"

namespace eigenframe {
namespace {

using IntegerRows = std::vector<std::vector<mpz_class>>;

struct Echelon {
  IntegerRows rows;
  std::vector<std::size_t> pivots;
  mpz_class pivot_value = 1;
};

IntegerRows clear_denominators(const ExactMatrix& m, std::vector<mpz_class>* scales = nullptr) {
  IntegerRows rows(m.rows(), std::vector<mpz_class>(m.cols()));
  if (scales) scales->assign(m.rows(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class scale = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).get_den_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      rows[i][j] = m(i, j).get_num() * (scale / m(i, j).get_den());
    }
    if (scales) (*scales)[i] = scale;
  }
  return rows;
}

Echelon bareiss_gauss_jordan(IntegerRows rows, std::size_t cols) {
  Echelon out;
  mpz_class prev = 1;
  mpz_class lhs, rhs;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const mpz_class pivot = rows[r][c];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      const mpz_class factor = rows[i][c];
      auto& row = rows[i];
      for (std::size_t j = 0; j < cols; ++j) {
        if (j == c) continue;
        lhs = pivot * row[j];
        if (sgn(factor) != 0 && sgn(rows[r][j]) != 0) {
          rhs = factor * rows[r][j];
          lhs -= rhs;
        }
        mpz_divexact(row[j].get_mpz_t(), lhs.get_mpz_t(), prev.get_mpz_t());
      }
      row[c] = 0;
    }
    prev = pivot;
    out.pivots.push_back(c);
    ++r;
  }
  out.pivot_value = prev;
  out.rows = std::move(rows);
  return out;
}

}  // namespace

std::vector<ExactVector> nullspace(const ExactMatrix& m) {
  const Echelon ech = bareiss_gauss_jordan(clear_denominators(m), m.cols());
  std::vector<char> is_pivot(m.cols(), 0);
  for (std::size_t c : ech.pivots) is_pivot[c] = 1;

  std::vector<ExactVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<mpz_class> v(m.cols(), 0);
    v[f] = ech.pivot_value;
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = -ech.rows[i][f];

    mpz_class g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    const auto lead = std::find_if(v.begin(), v.end(), [](const mpz_class& x) { return sgn(x) != 0; });
    if (sgn(*lead) < 0) g = -g;

    ExactVector q(m.cols());
    for (std::size_t j = 0; j < v.size(); ++j) q[j] = mpq_class(v[j] / g);
    const ExactVector image = m * q;
    for (const auto& x : image) {
      if (sgn(x) != 0) throw InternalError("Bareiss nullspace vector fails m*v = 0");
    }
    basis.push_back(std::move(q));
  }
  return basis;
}

std::size_t rank(const ExactMatrix& m) {
  return bareiss_gauss_jordan(clear_denominators(m), m.cols()).pivots.size();
}

std::vector<std::size_t> pivot_columns(const ExactMatrix& m) {
  return bareiss_gauss_jordan(clear_denominators(m), m.cols()).pivots;
}

ExactMatrix inverse(const ExactMatrix& m) {
  if (!m.square()) throw InvalidArgument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<mpz_class> scales;
  IntegerRows rows = clear_denominators(m, &scales);
  // [S m | S] reduces to [D I | D m^{-1}].
  for (std::size_t i = 0; i < n; ++i) {
    rows[i].resize(2 * n, 0);
    rows[i][n + i] = scales[i];
  }
  const Echelon ech = bareiss_gauss_jordan(std::move(rows), 2 * n);
  if (n > 0 && (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1)) {
    throw InvalidArgument("inverse of a singular matrix");
  }
  ExactMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.set(i, j, mpq_class(ech.rows[i][n + j], ech.pivot_value));
  return inv;
}

ExactMatrix projector_onto_nullspace(const ExactMatrix& m) {
  const std::size_t n = m.cols();
  const auto basis = nullspace(m);
  if (basis.empty()) return ExactMatrix(n, n);
  const ExactMatrix b = ExactMatrix::from_columns(n, basis);
  const ExactMatrix bt = b.transpose();
  return b * inverse(bt * b) * bt;
}

}  // namespace eigenframe
