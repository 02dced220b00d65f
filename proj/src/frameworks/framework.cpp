#include "eigenframe/frameworks/framework.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eigenframe/error.hpp"
#include "eigenframe/exactla/value.hpp"
#include "eigenframe/graphcore/generators.hpp"
#include "eigenframe/graphcore/subspaces.hpp"

namespace eigenframe {
namespace {

std::size_t numeric_rank(const Eigen::MatrixXd& gram) {
  if (gram.rows() == 0) return 0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram, Eigen::EigenvaluesOnly);
  const double top = es.eigenvalues().cwiseAbs().maxCoeff();
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (std::abs(es.eigenvalues()(i)) > 1e-9 * std::max(1.0, top)) ++r;
  return r;
}

bool same_tensegrity_support(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edges() == b.edges();
}

bool is_perfect_square(const mpq_class& q) {
  return sgn(q) >= 0 && mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t());
}

mpq_class rational_sqrt(const mpq_class& q) {
  mpz_class num, den;
  mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
  mpq_class out(num, den);
  out.canonicalize();
  return out;
}

mpq_class dot(const ExactVector& a, const ExactVector& b) {
  mpq_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

std::vector<ExactVector> gram_schmidt(const std::vector<ExactVector>& basis, std::vector<mpq_class>& norms) {
  std::vector<ExactVector> out;
  norms.clear();
  for (const auto& v : basis) {
    ExactVector u = v;
    for (std::size_t k = 0; k < out.size(); ++k) {
      const mpq_class c = dot(v, out[k]) / norms[k];
      if (sgn(c) == 0) continue;
      for (std::size_t i = 0; i < u.size(); ++i) u[i] -= c * out[k][i];
    }
    norms.push_back(dot(u, u));
    out.push_back(std::move(u));
  }
  return out;
}

}  // namespace

Framework Framework::from_points(Graph g, ExactMatrix points, std::optional<Spectrum> spectrum) {
  Framework f;
  f.graph_ = std::move(g);
  f.check_graph("framework matrix", points.rows());
  f.backend_ = Backend::exact;
  f.has_points_ = true;
  f.gram_ = points * points.transpose();
  f.points_ = std::move(points);
  f.gram_double_ = f.gram_.to_double();
  f.dimension_ = rank(f.gram_);
  f.spectrum_ = std::move(spectrum);
  return f;
}

Framework Framework::from_gram(Graph g, ExactMatrix gram, std::optional<Spectrum> spectrum) {
  Framework f;
  f.graph_ = std::move(g);
  f.check_graph("Gram matrix", gram.rows());
  if (!gram.is_symmetric()) throw InvalidArgument("Gram matrix is not symmetric");
  f.backend_ = Backend::exact;
  f.gram_ = std::move(gram);
  f.gram_double_ = f.gram_.to_double();
  f.dimension_ = rank(f.gram_);
  f.spectrum_ = std::move(spectrum);
  return f;
}

Framework Framework::from_points(Graph g, Eigen::MatrixXd points, std::optional<Spectrum> spectrum) {
  Framework f;
  f.graph_ = std::move(g);
  f.check_graph("framework matrix", static_cast<std::size_t>(points.rows()));
  f.backend_ = Backend::floating;
  f.has_points_ = true;
  f.gram_double_ = points * points.transpose();
  f.points_double_ = std::move(points);
  f.dimension_ = numeric_rank(f.gram_double_);
  f.spectrum_ = std::move(spectrum);
  return f;
}

Framework Framework::from_gram(Graph g, Eigen::MatrixXd gram, std::optional<Spectrum> spectrum) {
  Framework f;
  f.graph_ = std::move(g);
  f.check_graph("Gram matrix", static_cast<std::size_t>(gram.rows()));
  if (gram.rows() != gram.cols() || (gram - gram.transpose()).cwiseAbs().maxCoeff() > kGramTolerance) {
    throw InvalidArgument("Gram matrix is not symmetric");
  }
  f.backend_ = Backend::floating;
  f.gram_double_ = std::move(gram);
  f.dimension_ = numeric_rank(f.gram_double_);
  f.spectrum_ = std::move(spectrum);
  return f;
}

void Framework::check_graph(const char* what, std::size_t rows) const {
  if (rows != graph_.order()) {
    throw InvalidArgument(std::string(what) + " has " + std::to_string(rows) + " rows for a graph on " +
                          std::to_string(graph_.order()) + " vertices");
  }
}

const ExactMatrix& Framework::points() const {
  if (backend_ != Backend::exact || !has_points_) throw InvalidArgument("framework has no exact points");
  return points_;
}

const ExactMatrix& Framework::gram() const {
  if (backend_ != Backend::exact) throw InvalidArgument("framework is floating");
  return gram_;
}

const Eigen::MatrixXd& Framework::points_floating() const {
  if (backend_ != Backend::floating || !has_points_) throw InvalidArgument("framework has no floating points");
  return points_double_;
}

Framework Framework::relabelled(Graph g) const {
  if (!same_tensegrity_support(graph_, g)) throw InvalidArgument("relabelling must keep vertices and edges");
  Framework f = *this;
  f.graph_ = std::move(g);
  return f;
}

ExactMatrix least_eigenspace_projector(const Spectrum& s) {
  if (s.backend != Backend::exact) throw InvalidArgument("projector needs an exact spectrum");
  std::vector<mpq_class> norms;
  const auto u = gram_schmidt(s.tau_basis, norms);
  const std::size_t n = s.tau_basis.empty() ? s.order() : s.tau_basis.front().size();
  ExactMatrix e(n, n);
  for (std::size_t k = 0; k < u.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(u[k][i]) == 0) continue;
      const mpq_class left = u[k][i] / norms[k];
      for (std::size_t j = 0; j < n; ++j)
        if (sgn(u[k][j]) != 0) e(i, j) += left * u[k][j];
    }
  }
  return e;
}

Framework least_eigenvalue_framework(const Graph& g, const Spectrum& s) {
  if (g.empty()) throw InvalidArgument("least eigenvalue framework of the empty graph");
  if (s.backend == Backend::floating) {
    if (static_cast<std::size_t>(s.tau_basis_floating.rows()) != g.order()) {
      throw InvalidArgument("spectrum does not match the graph");
    }
    return Framework::from_points(g, s.tau_basis_floating, s);
  }
  if (s.tau_basis.empty() || s.tau_basis.front().size() != g.order()) {
    throw InvalidArgument("spectrum does not match the graph");
  }
  std::vector<mpq_class> norms;
  const auto u = gram_schmidt(s.tau_basis, norms);
  const bool rational = std::all_of(norms.begin(), norms.end(), is_perfect_square);
  if (rational) {
    ExactMatrix p(g.order(), u.size());
    for (std::size_t k = 0; k < u.size(); ++k) {
      const mpq_class inv = 1 / rational_sqrt(norms[k]);
      for (std::size_t i = 0; i < g.order(); ++i) p(i, k) = u[k][i] * inv;
    }
    return Framework::from_points(g, std::move(p), s);
  }
  ExactMatrix e = least_eigenspace_projector(s);
  return Framework::from_points(g, std::move(e), s);
}

Framework least_eigenvalue_framework(const Graph& g, SpectralBackend backend, double tol) {
  return least_eigenvalue_framework(g, graph_spectrum(g, backend, tol));
}

Framework kneser_framework(int n, int r) {
  if (r < 1 || n < 2 * r + 1) throw InvalidArgument("Kneser framework needs n >= 2r + 1 and r >= 1");
  const Graph g = kneser(n, r);
  const auto sets = kneser_vertices(n, r);
  const long alpha = r - n, beta = r;
  ExactMatrix p(sets.size(), static_cast<std::size_t>(n));
  for (std::size_t s = 0; s < sets.size(); ++s)
    for (int e = 0; e < n; ++e) p(s, static_cast<std::size_t>(e)) = ((sets[s] >> e) & 1) ? alpha : beta;
  return Framework::from_points(g, std::move(p));
}

Framework qkneser_framework(int q, int n, int r) {
  if (r < 1 || n < 2 * r + 1) throw InvalidArgument("q-Kneser framework needs n >= 2r + 1 and r >= 1");
  const Graph g = q_kneser(q, n, r);
  const auto spaces = enumerate_subspaces(q, n, r);
  const auto lines = enumerate_subspaces(q, n, 1);
  const long alpha = q_integer(q, r) - q_integer(q, n), beta = q_integer(q, r);
  ExactMatrix p(spaces.size(), lines.size());
  for (std::size_t s = 0; s < spaces.size(); ++s)
    for (std::size_t l = 0; l < lines.size(); ++l) p(s, l) = contains(spaces[s], lines[l], q) ? alpha : beta;
  return Framework::from_points(g, std::move(p));
}

bool dominates(const Framework& p, const Framework& q, double tol) {
  if (!same_tensegrity_support(p.graph(), q.graph())) {
    throw InvalidArgument("dominates: frameworks live on different graphs");
  }
  const Graph& g = p.graph();
  const std::size_t n = g.order();
  if (p.backend() == Backend::exact && q.backend() == Backend::exact) {
    const ExactMatrix& a = p.gram();
    const ExactMatrix& b = q.gram();
    for (std::size_t i = 0; i < n; ++i)
      if (a(i, i) != b(i, i)) return false;
    for (const Edge& e : g.edges()) {
      const mpq_class& x = a(e.u, e.v);
      const mpq_class& y = b(e.u, e.v);
      switch (g.label(e.u, e.v)) {
        case EdgeLabel::bar:
          if (x != y) return false;
          break;
        case EdgeLabel::cable:
          if (y < x) return false;
          break;
        case EdgeLabel::strut:
          if (y > x) return false;
          break;
      }
    }
    return true;
  }
  const Eigen::MatrixXd& a = p.gram_floating();
  const Eigen::MatrixXd& b = q.gram_floating();
  for (std::size_t i = 0; i < n; ++i) {
    const auto k = static_cast<Eigen::Index>(i);
    if (std::abs(a(k, k) - b(k, k)) > tol) return false;
  }
  for (const Edge& e : g.edges()) {
    const double x = a(e.u, e.v), y = b(e.u, e.v);
    switch (g.label(e.u, e.v)) {
      case EdgeLabel::bar:
        if (std::abs(x - y) > tol) return false;
        break;
      case EdgeLabel::cable:
        if (y < x - tol) return false;
        break;
      case EdgeLabel::strut:
        if (y > x + tol) return false;
        break;
    }
  }
  return true;
}

bool congruent(const Framework& p, const Framework& q, double tol) {
  if (p.order() != q.order()) throw InvalidArgument("congruent: frameworks of different sizes");
  if (p.backend() == Backend::exact && q.backend() == Backend::exact) return p.gram() == q.gram();
  return (p.gram_floating() - q.gram_floating()).cwiseAbs().maxCoeff() <= tol;
}

nlohmann::json framework_json(const Framework& p) {
  nlohmann::json out;
  const std::size_t n = p.order();
  out["n"] = n;
  out["d"] = p.dimension();
  out["backend"] = to_string(p.backend());
  nlohmann::json gram = nlohmann::json::array();
  for (std::size_t i = 0; i < n; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < n; ++j) {
      if (p.backend() == Backend::exact) {
        row.push_back(format_rational(p.gram()(i, j)));
      } else {
        row.push_back(round12(p.gram_floating()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))));
      }
    }
    gram.push_back(std::move(row));
  }
  out["gram"] = std::move(gram);
  if (p.spectrum()) {
    const Value& tau = p.spectrum()->tau;
    if (tau.is_exact()) {
      out["tau"] = format_rational(tau.exact());
    } else {
      out["tau"] = round12(tau.approx());
    }
    out["tau_multiplicity"] = p.spectrum()->tau_multiplicity;
  } else {
    out["tau"] = nullptr;
    out["tau_multiplicity"] = nullptr;
  }
  return out;
}

}  // namespace eigenframe
