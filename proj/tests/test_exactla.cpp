#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "eigenframe/error.hpp"
#include "eigenframe/exactla/exact_matrix.hpp"
#include "eigenframe/exactla/modular.hpp"
#include "eigenframe/exactla/spectrum.hpp"
#include "eigenframe/exactla/value.hpp"
#include "eigenframe/graphcore/generators.hpp"
#include "eigenframe/graphcore/graph6.hpp"
#include "support/oracles.hpp"

using namespace eigenframe;

namespace {

oracle::Rows rows_of(const ExactMatrix& m) {
  oracle::Rows r(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = m(i, j);
  return r;
}

ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int rank_cap) {
  std::uniform_int_distribution<int> small(-3, 3);
  ExactMatrix left(rows, static_cast<std::size_t>(rank_cap)), right(static_cast<std::size_t>(rank_cap), cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (int k = 0; k < rank_cap; ++k) left.set(i, static_cast<std::size_t>(k), mpq_class(small(rng)) / (1 + (small(rng) + 3) % 3));
  for (int k = 0; k < rank_cap; ++k)
    for (std::size_t j = 0; j < cols; ++j) right(static_cast<std::size_t>(k), j) = small(rng);
  return left * right;
}

}  // namespace

TEST_CASE("values") {
  CHECK(format_rational(parse_rational("6/4")) == "3/2");
  CHECK(format_rational(mpq_class(-4)) == "-4");
  CHECK(parse_rational("-6/4") == mpq_class(-3, 2));
  CHECK(parse_rational("2.5") == mpq_class(5, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("x"), InvalidArgument);
  CHECK(Value(mpq_class(5, 2)).str() == "5/2");
  CHECK(round12(1.0 / 3.0) == doctest::Approx(0.333333333333).epsilon(1e-13));
}

TEST_CASE("nullspace examples") {
  const auto ones = nullspace(ExactMatrix::from_integers({{1, 1}, {1, 1}}));
  REQUIRE(ones.size() == 1);
  CHECK(ones[0] == ExactVector{1, -1});
  CHECK(nullspace(ExactMatrix::identity(3)).empty());
  const ExactMatrix j3 = adjacency_matrix(complete_graph(3)) + ExactMatrix::identity(3);
  CHECK(nullspace(j3).size() == 2);
  CHECK(rank(j3) == 1);
}

TEST_CASE("nullspace against textbook elimination") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t rows = 1 + trial % 7, cols = 1 + (trial * 5) % 8;
    const ExactMatrix m = random_matrix(rng, rows, cols, 1 + trial % 4);
    const auto basis = nullspace(m);
    const std::size_t r = oracle::rank(rows_of(m));
    CHECK(basis.size() == cols - r);
    CHECK(rank(m) == r);
    for (const auto& v : basis) {
      for (const auto& x : m * v) CHECK(x == 0);
    }
    if (!basis.empty()) CHECK(oracle::rank(rows_of(ExactMatrix::from_columns(cols, basis).transpose())) == basis.size());
  }
}

TEST_CASE("inverse") {
  const ExactMatrix m = ExactMatrix::from_integers({{2, 1}, {1, 1}});
  CHECK(inverse(m) * m == ExactMatrix::identity(2));
  CHECK_THROWS_AS(inverse(ExactMatrix::from_integers({{1, 1}, {1, 1}})), InvalidArgument);
  CHECK(inverse(ExactMatrix(0, 0)).rows() == 0);
}

TEST_CASE("modular solver agrees with Bareiss") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 2 + trial % 9, cols = 2 + (trial * 7) % 11;
    ExactMatrix m = random_matrix(rng, rows, cols, 1 + trial % 5);
    for (std::size_t i = 0; i < rows; ++i) {
      mpz_class l = 1;
      for (std::size_t j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
      for (std::size_t j = 0; j < cols; ++j) m.set(i, j, m(i, j) * l);
    }
    const auto sol = solve_homogeneous(to_sparse_system(m));
    const auto bar = nullspace(m);
    CHECK(sol.rank == cols - bar.size());
    CHECK(sol.basis.size() == bar.size());
    for (const auto& v : sol.basis) {
      for (const auto& x : m * v) CHECK(x == 0);
    }
    CHECK(rank_mod_prime(to_sparse_system(m)) <= sol.rank);
  }
  CHECK_THROWS_AS(to_sparse_system(ExactMatrix::from_integers({{1}}) * mpq_class(1, 2)), InvalidArgument);
}

TEST_CASE("characteristic polynomial and PSD") {
  const auto c = characteristic_polynomial(ExactMatrix::from_integers({{2, 1}, {1, 2}}));
  CHECK(c == std::vector<mpq_class>{3, -4, 1});
  CHECK(is_psd_exact(ExactMatrix::identity(2)));
  CHECK_FALSE(is_psd_exact(ExactMatrix::from_integers({{1, 2}, {2, 1}})));
  const ExactMatrix j3 = adjacency_matrix(complete_graph(3)) + ExactMatrix::identity(3);
  CHECK(is_psd_exact(j3));
  CHECK(is_psd_exact(ExactMatrix::from_integers({{0, 0}, {0, 0}})));
  CHECK_FALSE(is_psd_exact(ExactMatrix::from_integers({{0, 1}, {1, 0}})));
  CHECK_THROWS_AS(is_psd_exact(ExactMatrix::from_integers({{0, 1}, {0, 0}})), InvalidArgument);
}

TEST_CASE("PSD test agrees with a Jacobi oracle") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> small(-2, 2);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 6;
    ExactMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b(i, j) = small(rng);
    ExactMatrix m = b * b.transpose();
    if (trial % 2) m -= ExactMatrix::identity(n) * (mpq_class(small(rng) + 2) / 3);
    std::vector<std::vector<double>> d(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = m(i, j).get_d();
    const double lmin = oracle::jacobi_eigenvalues(d).front();
    if (std::abs(lmin) > 1e-9) CHECK(is_psd_exact(m) == (lmin > 0));
  }
}

TEST_CASE("projector onto a nullspace") {
  CHECK(projector_onto_nullspace(ExactMatrix(2, 2)) == ExactMatrix::identity(2));
  CHECK(projector_onto_nullspace(ExactMatrix::identity(3)).is_zero());
  const ExactMatrix m = adjacency_matrix(complete_graph(4)) + ExactMatrix::identity(4);
  const ExactMatrix e = projector_onto_nullspace(m);
  CHECK(e * e == e);
  CHECK((m * e).is_zero());
  ExactMatrix expected = ExactMatrix::identity(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) expected(i, j) -= mpq_class(1, 4);
  CHECK(e == expected);
}

TEST_CASE("integer least eigenvalue") {
  const auto k4 = integer_least_eigenvalue(complete_graph(4));
  REQUIRE(k4.has_value());
  CHECK(k4->tau.exact() == -1);
  CHECK(k4->tau_multiplicity == 3);

  const auto pet = integer_least_eigenvalue(kneser(5, 2));
  REQUIRE(pet.has_value());
  CHECK(pet->tau.exact() == -2);
  CHECK(pet->tau_multiplicity == 4);
  CHECK(rank(adjacency_matrix(kneser(5, 2)) + ExactMatrix::identity(10) * mpq_class(2)) == 6);

  CHECK_FALSE(integer_least_eigenvalue(cycle(5)).has_value());
  CHECK_THROWS_AS(integer_least_eigenvalue(ExactMatrix::from_integers({{1, 0}, {0, 0}})), InvalidArgument);
}

TEST_CASE("integer least eigenvalue on the small-graph corpus") {
  const auto lines = oracle::read_lines(EIGENFRAME_TEST_DATA "/connected_le7.g6");
  for (std::size_t i = 1; i < lines.size(); i += 3) {
    const Graph g = parse_graph6(lines[i]);
    long tau = 0;
    const bool integral = oracle::integral_least_eigenvalue(g, tau);
    const auto s = integer_least_eigenvalue(g);
    REQUIRE(s.has_value() == integral);
    if (!integral) continue;
    CHECK(s->tau.exact() == tau);
    const ExactMatrix shifted = adjacency_matrix(g) - ExactMatrix::identity(g.order()) * mpq_class(tau);
    CHECK(s->tau_multiplicity == g.order() - oracle::rank(rows_of(shifted)));
    std::size_t total = 0;
    for (const auto& ev : s->eigenvalues) total += ev.multiplicity;
    CHECK(total == g.order());
  }
}

TEST_CASE("cayley spectra") {
  const Spectrum k4 = cayley_spectrum({2, {1, 2, 3}});
  CHECK(k4.tau.exact() == -1);
  CHECK(k4.tau_multiplicity == 3);
  REQUIRE(k4.eigenvalues.size() == 2);
  CHECK(k4.eigenvalues[1].value.exact() == 3);

  const Spectrum c4 = cayley_spectrum({2, {1, 2}});
  REQUIRE(c4.eigenvalues.size() == 3);
  CHECK(c4.eigenvalues[0].value.exact() == -2);
  CHECK(c4.eigenvalues[1].value.exact() == 0);
  CHECK(c4.eigenvalues[1].multiplicity == 2);
  CHECK(c4.eigenvalues[2].value.exact() == 2);
  CHECK(c4.tau_multiplicity == 1);

  const Spectrum q3 = cayley_spectrum({3, {1, 2, 4}});
  CHECK(q3.tau.exact() == -3);
  CHECK(q3.tau_multiplicity == 1);
  const ExactMatrix shifted = adjacency_matrix(hypercube(3)) + ExactMatrix::identity(8) * mpq_class(3);
  for (const auto& v : q3.tau_basis)
    for (const auto& x : shifted * v) CHECK(x == 0);
}

TEST_CASE("floating least eigenspace") {
  const Spectrum c5 = floating_least_eigenspace(adjacency_matrix_double(cycle(5)));
  CHECK(c5.tau.approx() == doctest::Approx(-(1 + std::sqrt(5.0)) / 2).epsilon(1e-10));
  CHECK(std::abs(c5.tau.approx() - 2 * std::cos(4 * std::numbers::pi / 5)) < 1e-9);
  CHECK(c5.tau_multiplicity == 2);
  CHECK((c5.tau_basis_floating.transpose() * c5.tau_basis_floating - Eigen::MatrixXd::Identity(2, 2)).norm() <
        1e-10);

  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(3, 3);
  d.diagonal() << 1, 2, 3;
  const Spectrum ds = floating_least_eigenspace(d);
  CHECK(ds.tau.approx() == doctest::Approx(1.0));
  CHECK(ds.tau_multiplicity == 1);

  const Spectrum c7 = floating_least_eigenspace(adjacency_matrix_double(cycle(7)));
  CHECK(std::abs(c7.tau.approx() - 2 * std::cos(6 * std::numbers::pi / 7)) < 1e-9);
  CHECK(c7.tau_multiplicity == 2);
}

TEST_CASE("graph spectrum backends") {
  CHECK(graph_spectrum(cycle(5)).backend == Backend::floating);
  CHECK(graph_spectrum(kneser(5, 2)).backend == Backend::exact);
  CHECK(graph_spectrum(kneser(5, 2), SpectralBackend::floating).backend == Backend::floating);
  CHECK_THROWS_AS(graph_spectrum(cycle(5), SpectralBackend::exact), Unsupported);
}
