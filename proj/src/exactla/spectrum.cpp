#include "eigenframe/exactla/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <string>

#include "eigenframe/error.hpp"
#include "eigenframe/exactla/modular.hpp"

namespace eigenframe {
namespace {

struct Cluster {
  double mean = 0.0;
  std::size_t first = 0;
  std::size_t count = 0;
};

std::vector<Cluster> cluster(const Eigen::VectorXd& values, std::size_t from, double tol) {
  std::vector<Cluster> out;
  for (std::size_t i = from; i < static_cast<std::size_t>(values.size()); ++i) {
    const double v = values(static_cast<Eigen::Index>(i));
    if (!out.empty()) {
      const double last = values(static_cast<Eigen::Index>(i - 1));
      if (std::abs(v - last) <= tol) {
        auto& c = out.back();
        c.mean = (c.mean * static_cast<double>(c.count) + v) / static_cast<double>(c.count + 1);
        ++c.count;
        continue;
      }
    }
    out.push_back({v, i, 1});
  }
  return out;
}

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solve(const Eigen::MatrixXd& a, bool vectors) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
      a, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw NumericalError("symmetric eigensolver did not converge",
                         30L * static_cast<long>(a.rows()));
  }
  return es;
}

SparseIntegerSystem shifted(const ExactMatrix& a, long k) {
  SparseIntegerSystem sys;
  sys.cols = a.cols();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    SparseIntegerSystem::Row row;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      long v = sgn(a(i, j)) != 0 ? 1 : 0;
      if (i == j) v -= k;
      if (v != 0) row.emplace_back(static_cast<std::uint32_t>(j), v);
    }
    sys.add_row(std::move(row));
  }
  return sys;
}

bool singular(const SparseIntegerSystem& sys) {
  if (rank_mod_prime(sys) == sys.cols) return false;
  return solve_homogeneous(sys).rank < sys.cols;
}

}  // namespace

std::size_t Spectrum::order() const {
  std::size_t n = 0;
  for (const auto& e : eigenvalues) n += e.multiplicity;
  return n;
}

std::optional<Spectrum> integer_least_eigenvalue(const ExactMatrix& a) {
  if (!a.square() || a.rows() == 0) throw InvalidArgument("adjacency matrix must be square and nonempty");
  if (!a.is_symmetric()) throw InvalidArgument("adjacency matrix is not symmetric");
  const std::size_t n = a.rows();
  long delta = 0;
  for (std::size_t i = 0; i < n; ++i) {
    long deg = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class& x = a(i, j);
      if (sgn(x) == 0) continue;
      if (x != 1 || i == j) throw InvalidArgument("not a 0/1 adjacency matrix with zero diagonal");
      ++deg;
    }
    delta = std::max(delta, deg);
  }

  const auto es = solve(a.to_double(), false);
  const Eigen::VectorXd& values = es.eigenvalues();
  const double estimate = values(0);
  long k0 = std::lround(estimate);
  if (std::abs(estimate - static_cast<double>(k0)) > 1e-6) return std::nullopt;

  for (long k = -delta; k < k0; ++k) {
    if (singular(shifted(a, k))) {
      k0 = k;
      break;
    }
  }
  HomogeneousSolution kernel = solve_homogeneous(shifted(a, k0));
  const std::size_t d = n - kernel.rank;
  if (d == 0) return std::nullopt;

  Spectrum s;
  s.backend = Backend::exact;
  s.tolerance = kDefaultEigenTolerance;
  s.tau = Value::integer(k0);
  s.tau_multiplicity = d;
  s.tau_basis = std::move(kernel.basis);
  s.eigenvalues.push_back({s.tau, d});
  for (const auto& c : cluster(values, d, kDefaultEigenTolerance)) {
    const double r = std::round(c.mean);
    s.eigenvalues.push_back({std::abs(c.mean - r) <= 1e-9 ? Value(r) : Value(c.mean), c.count});
  }
  return s;
}

std::optional<Spectrum> integer_least_eigenvalue(const Graph& g) {
  return integer_least_eigenvalue(adjacency_matrix(g));
}

Spectrum cayley_spectrum(const CayleySpec& raw) {
  const CayleySpec spec = normalized(raw);
  const std::uint32_t n = 1u << spec.n;
  std::vector<long> lambda(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    long sum = 0;
    for (std::uint32_t c : spec.connection_set) sum += (std::popcount(v & c) & 1) ? -1 : 1;
    lambda[v] = sum;
  }
  std::map<long, std::size_t> mult;
  for (long l : lambda) ++mult[l];

  Spectrum s;
  s.backend = Backend::exact;
  for (const auto& [value, m] : mult) s.eigenvalues.push_back({Value::integer(value), m});
  const long tau = mult.begin()->first;
  s.tau = Value::integer(tau);
  s.tau_multiplicity = mult.begin()->second;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (lambda[v] != tau) continue;
    ExactVector chi(n);
    for (std::uint32_t x = 0; x < n; ++x) chi[x] = (std::popcount(v & x) & 1) ? -1 : 1;
    s.tau_basis.push_back(std::move(chi));
  }
  return s;
}

Spectrum floating_least_eigenspace(const Eigen::MatrixXd& a, double tol) {
  if (!(tol > 0)) throw InvalidArgument("tolerance must be positive");
  if (a.rows() != a.cols() || a.rows() == 0) throw InvalidArgument("matrix must be square and nonempty");
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw InvalidArgument("matrix is not symmetric");
  }
  const auto es = solve(a, true);
  const auto clusters = cluster(es.eigenvalues(), 0, tol);

  Spectrum s;
  s.backend = Backend::floating;
  s.tolerance = tol;
  for (const auto& c : clusters) s.eigenvalues.push_back({Value(c.mean), c.count});
  s.tau = Value(clusters.front().mean);
  s.tau_multiplicity = clusters.front().count;
  s.tau_basis_floating = es.eigenvectors().leftCols(static_cast<Eigen::Index>(s.tau_multiplicity));
  return s;
}

Spectrum graph_spectrum(const Graph& g, SpectralBackend choice, double tol) {
  if (g.empty()) throw InvalidArgument("graph has no vertices");
  if (choice == SpectralBackend::floating) return floating_least_eigenspace(adjacency_matrix_double(g), tol);
  if (auto exact = integer_least_eigenvalue(g)) return std::move(*exact);
  if (choice == SpectralBackend::exact) {
    throw Unsupported("least eigenvalue is not an integer; use the floating backend");
  }
  return floating_least_eigenspace(adjacency_matrix_double(g), tol);
}

}  // namespace eigenframe
