#include "eigenframe/uccheck/xspace.hpp"

#include <cmath>

#include "eigenframe/error.hpp"
#include "eigenframe/exactla/modular.hpp"
#include "eigenframe/graphcore/graph6.hpp"
#include "eigenframe/uccheck/conditions.hpp"

namespace eigenframe {
namespace {

// unknown index of the pair {a, b}, or -1 when a == b or a ~ b.
std::vector<long> unknown_index(const Graph& g, const std::vector<Edge>& pairs) {
  const std::size_t n = g.order();
  std::vector<long> index(n * n, -1);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    index[pairs[k].u * n + pairs[k].v] = static_cast<long>(k);
    index[pairs[k].v * n + pairs[k].u] = static_cast<long>(k);
  }
  return index;
}

XSpaceBasis exact_xspace(const Graph& g, const Spectrum& s) {
  const mpq_class& tau = s.tau.exact();
  if (tau.get_den() != 1 || !tau.get_num().fits_slong_p()) {
    throw Unsupported("exact X(G) needs an integral tau");
  }
  const long t = tau.get_num().get_si();
  const std::size_t n = g.order();
  const auto pairs = xspace_unknowns(g);
  const auto index = unknown_index(g, pairs);

  XSpaceBasis out;
  out.backend = Backend::exact;
  out.tau = s.tau;
  out.unknowns = pairs.size();
  if (pairs.empty()) return out;

  // Row (r, c): sum over k in N[r] of (A - tau I)_{rk} X_{kc}.
  SparseIntegerSystem sys;
  sys.cols = pairs.size();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      SparseIntegerSystem::Row row;
      if (const long u = index[r * n + c]; u >= 0) row.emplace_back(static_cast<std::uint32_t>(u), -t);
      for (Vertex k : g.neighbors(static_cast<Vertex>(r))) {
        if (const long u = index[k * n + c]; u >= 0) row.emplace_back(static_cast<std::uint32_t>(u), 1);
      }
      sys.add_row(std::move(row));
    }
  }
  const HomogeneousSolution sol = solve_homogeneous(sys);
  out.dim = sol.basis.size();
  for (const auto& v : sol.basis) {
    ExactMatrix x(n, n);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (sgn(v[k]) == 0) continue;
      x(pairs[k].u, pairs[k].v) = v[k];
      x(pairs[k].v, pairs[k].u) = v[k];
    }
    out.basis.push_back(std::move(x));
  }
  return out;
}

XSpaceBasis floating_xspace(const Graph& g, const Spectrum& s) {
  const double tau = s.tau.approx();
  const std::size_t n = g.order();
  const auto pairs = xspace_unknowns(g);
  const auto index = unknown_index(g, pairs);

  XSpaceBasis out;
  out.backend = Backend::floating;
  out.tau = s.tau;
  out.unknowns = pairs.size();
  if (pairs.empty()) return out;

  const auto rows = static_cast<Eigen::Index>(n * n);
  const auto cols = static_cast<Eigen::Index>(pairs.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rows, cols);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const auto row = static_cast<Eigen::Index>(r * n + c);
      if (const long u = index[r * n + c]; u >= 0) m(row, u) -= tau;
      for (Vertex k : g.neighbors(static_cast<Vertex>(r))) {
        if (const long u = index[k * n + c]; u >= 0) m(row, u) += 1.0;
      }
    }
  }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinV);
  const Eigen::VectorXd& sigma = svd.singularValues();
  const double top = sigma(0);
  out.singular_margin = top > 0 ? sigma(sigma.size() - 1) / top : 0.0;
  Eigen::Index rank = 0;
  while (rank < sigma.size() && sigma(rank) > kSingularValueThreshold * top) ++rank;
  out.dim = static_cast<std::size_t>(cols - rank);
  for (Eigen::Index k = rank; k < cols; ++k) {
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t u = 0; u < pairs.size(); ++u) {
      const double v = svd.matrixV()(static_cast<Eigen::Index>(u), k);
      x(pairs[u].u, pairs[u].v) = v;
      x(pairs[u].v, pairs[u].u) = v;
    }
    out.basis_floating.push_back(std::move(x));
  }
  return out;
}

}  // namespace

std::vector<Edge> xspace_unknowns(const Graph& g) {
  std::vector<Edge> pairs;
  for (Vertex i = 0; i < g.order(); ++i)
    for (Vertex j = i + 1; j < g.order(); ++j)
      if (!g.adjacent(i, j)) pairs.push_back({i, j});
  return pairs;
}

XSpaceBasis xspace(const Graph& g, const Spectrum& s) {
  if (g.empty()) throw InvalidArgument("X(G) of the empty graph");
  return s.backend == Backend::exact ? exact_xspace(g, s) : floating_xspace(g, s);
}

bool in_xspace(const Graph& g, const mpq_class& tau, const ExactMatrix& x) {
  const std::size_t n = g.order();
  if (x.rows() != n || x.cols() != n || !x.is_symmetric()) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x(i, i)) != 0) return false;
    for (Vertex j : g.neighbors(static_cast<Vertex>(i)))
      if (sgn(x(i, j)) != 0) return false;
  }
  ExactMatrix m = adjacency_matrix(g);
  for (std::size_t i = 0; i < n; ++i) m(i, i) -= tau;
  return (m * x).is_zero();
}

UcVerdict is_universally_completable(const Graph& g, const Spectrum& s) {
  if (g.has_cables()) throw Unsupported("universal completability test needs a tensegrity without cables");
  UcVerdict v;
  v.spectrum = s;
  v.x = xspace(g, s);
  v.universally_completable = v.x.dim == 0;
  v.numerical = s.backend == Backend::floating;
  return v;
}

UcVerdict is_universally_completable(const Graph& g, SpectralBackend backend, double tol) {
  if (g.has_cables()) throw Unsupported("universal completability test needs a tensegrity without cables");
  return is_universally_completable(g, graph_spectrum(g, backend, tol));
}

nlohmann::json verdict_json(const Graph& g, const UcVerdict& v) {
  nlohmann::json out;
  out["graph6"] = emit_graph6(g);
  if (v.spectrum.tau.is_exact()) {
    out["tau"] = format_rational(v.spectrum.tau.exact());
  } else {
    out["tau"] = round12(v.spectrum.tau.approx());
  }
  out["tau_mult"] = v.spectrum.tau_multiplicity;
  out["x_dim"] = v.x.dim;
  out["verdict"] = v.universally_completable ? "UC" : "not-UC";
  out["backend"] = to_string(v.spectrum.backend);
  out["numerical"] = v.numerical;
  if (v.spectrum.backend == Backend::floating && std::isfinite(v.x.singular_margin)) {
    out["sv_margin"] = round12(v.x.singular_margin);
  } else {
    out["sv_margin"] = nullptr;
  }
  nlohmann::json cond;
  cond["neighborhood"] = neighborhood_condition(g, v.spectrum).holds;
  cond["clique"] = clique_condition_any(g, v.spectrum);
  cond["split"] = is_split(g).has_value();
  out["conditions"] = std::move(cond);
  return out;
}

}  // namespace eigenframe
