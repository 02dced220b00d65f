#include "eigenframe/uccheck/phi.hpp"

#include <cmath>

#include "eigenframe/error.hpp"
#include "eigenframe/uccheck/xspace.hpp"

namespace eigenframe {
namespace {

bool vanishes_on_closed_neighbourhoods(const Graph& g, const ExactMatrix& x) {
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (sgn(x(i, i)) != 0) return false;
    for (Vertex j : g.neighbors(static_cast<Vertex>(i)))
      if (sgn(x(i, j)) != 0) return false;
  }
  return true;
}

bool equal_on_closed_neighbourhoods(const Graph& g, const ExactMatrix& a, const ExactMatrix& b) {
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (a(i, i) != b(i, i)) return false;
    for (Vertex j : g.neighbors(static_cast<Vertex>(i)))
      if (a(i, j) != b(i, j)) return false;
  }
  return true;
}

}  // namespace

PhiMap::PhiMap(const Framework& lef) : graph_(lef.graph()), backend_(lef.backend()) {
  if (!lef.has_points()) throw InvalidArgument("phi needs a framework with explicit points");
  if (backend_ == Backend::floating) {
    pf_ = lef.points_floating();
    d_ = static_cast<std::size_t>(pf_.cols());
    return;
  }
  const ExactMatrix& p = lef.points();
  const auto pivots = pivot_columns(p);
  pb_ = p.select_columns(pivots);
  pbt_ = pb_.transpose();
  gram_inv_ = inverse(pbt_ * pb_);
  d_ = pivots.size();
}

bool PhiMap::in_rspace(const ExactMatrix& r) const {
  if (r.rows() != d_ || r.cols() != d_ || !r.is_symmetric()) return false;
  return vanishes_on_closed_neighbourhoods(graph_, pb_ * r * pbt_);
}

ExactMatrix PhiMap::phi(const ExactMatrix& r) const {
  if (backend_ != Backend::exact) throw InvalidArgument("exact phi on a floating framework");
  if (r.rows() != d_ || r.cols() != d_ || !r.is_symmetric()) {
    throw InvalidArgument("R must be a symmetric " + std::to_string(d_) + "x" + std::to_string(d_) + " matrix");
  }
  ExactMatrix x = pb_ * r * pbt_;
  if (!vanishes_on_closed_neighbourhoods(graph_, x)) throw InvalidArgument("R is not in R(G)");
  return x;
}

ExactMatrix PhiMap::phi_inverse(const ExactMatrix& x) const {
  if (backend_ != Backend::exact) throw InvalidArgument("exact phi on a floating framework");
  if (x.rows() != graph_.order() || x.cols() != graph_.order()) throw InvalidArgument("X has the wrong size");
  return gram_inv_ * (pbt_ * x * pb_) * gram_inv_;
}

Eigen::MatrixXd PhiMap::phi(const Eigen::MatrixXd& r) const {
  if (backend_ == Backend::exact) return pb_.to_double() * r * pbt_.to_double();
  return pf_ * r * pf_.transpose();
}

Eigen::MatrixXd PhiMap::phi_inverse(const Eigen::MatrixXd& x) const {
  if (backend_ == Backend::exact) {
    const Eigen::MatrixXd gi = gram_inv_.to_double();
    return gi * pbt_.to_double() * x * pb_.to_double() * gi;
  }
  return pf_.transpose() * x * pf_;
}

Framework dominated_frameworks(const Framework& p, const ExactMatrix& x, std::optional<mpq_class> c) {
  if (p.backend() != Backend::exact) throw InvalidArgument("exact dominated framework needs an exact framework");
  if (!p.spectrum() || !p.spectrum()->tau.is_exact()) throw InvalidArgument("framework carries no exact tau");
  const Graph& g = p.graph();
  if (!in_xspace(g, p.spectrum()->tau.exact(), x)) throw InvalidArgument("x is not in X(G)");
  if (x.is_zero()) return p;
  const mpq_class scale = c ? *c : mpq_class(1) / max_abs_row_sum(x);
  if (sgn(scale) <= 0) throw InvalidArgument("scale must be positive");

  ExactMatrix gram = p.gram() + x * scale;
  if (!is_psd_exact(gram)) throw InternalError("P P^T + c X is not PSD; the scale is too large");
  Framework q = Framework::from_gram(g, std::move(gram), p.spectrum());
  if (!dominates(p, q) || !equal_on_closed_neighbourhoods(g, p.gram(), q.gram())) {
    throw InternalError("dominated framework disagrees with p on i ~= j");
  }
  return q;
}

Framework dominated_frameworks(const Framework& p, const Eigen::MatrixXd& x, std::optional<double> c) {
  const Graph& g = p.graph();
  const auto n = static_cast<Eigen::Index>(g.order());
  if (x.rows() != n || x.cols() != n) throw InvalidArgument("x has the wrong size");
  if (!p.spectrum()) throw InvalidArgument("framework carries no spectrum");
  Eigen::MatrixXd m = adjacency_matrix_double(g);
  m.diagonal().array() -= p.spectrum()->tau.approx();
  const double size = std::max(1.0, x.cwiseAbs().maxCoeff());
  if ((m * x).cwiseAbs().maxCoeff() > 1e-7 * size || (x - x.transpose()).cwiseAbs().maxCoeff() > 1e-9 * size) {
    throw InvalidArgument("x is not in X(G)");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(x(i, i)) > 1e-9 * size) throw InvalidArgument("x is not in X(G)");
    for (Vertex j : g.neighbors(static_cast<Vertex>(i)))
      if (std::abs(x(i, j)) > 1e-9 * size) throw InvalidArgument("x is not in X(G)");
  }
  const double row_sum = x.cwiseAbs().rowwise().sum().maxCoeff();
  if (row_sum == 0.0) return p;
  const double scale = c ? *c : 1.0 / row_sum;
  if (!(scale > 0)) throw InvalidArgument("scale must be positive");

  Eigen::MatrixXd gram = p.gram_floating() + scale * x;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram, Eigen::EigenvaluesOnly);
  if (es.eigenvalues()(0) < -kGramTolerance) throw InternalError("P P^T + c X is not PSD; the scale is too large");
  Framework q = Framework::from_gram(g, std::move(gram), p.spectrum());
  if (!dominates(p, q)) throw InternalError("dominated framework disagrees with p on i ~= j");
  return q;
}

}  // namespace eigenframe
