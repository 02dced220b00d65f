#include "eigenframe/uccheck/conditions.hpp"

#include <algorithm>
#include <cmath>

#include "eigenframe/error.hpp"
#include "eigenframe/exactla/modular.hpp"

namespace eigenframe {
namespace {

// Is the principal submatrix of A - tau I on `keep` invertible?
bool principal_invertible(const Graph& g, const Spectrum& s, const std::vector<Vertex>& keep) {
  if (keep.empty()) return true;
  const Graph h = induced_subgraph(g, keep);
  const std::size_t m = h.order();
  if (s.backend == Backend::exact) {
    const long t = s.tau.exact().get_num().get_si();
    SparseIntegerSystem sys;
    sys.cols = m;
    for (Vertex i = 0; i < m; ++i) {
      SparseIntegerSystem::Row row;
      row.emplace_back(i, -t);
      for (Vertex j : h.neighbors(i)) row.emplace_back(j, 1);
      std::sort(row.begin(), row.end());
      sys.add_row(std::move(row));
    }
    if (rank_mod_prime(sys) == m) return true;
    return solve_homogeneous(sys).rank == m;
  }
  Eigen::MatrixXd a = adjacency_matrix_double(h);
  a.diagonal().array() -= s.tau.approx();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().minCoeff() > kConditionMargin;
}

void bron_kerbosch(const Graph& g, std::vector<Vertex>& r, std::vector<Vertex> p, std::vector<Vertex> x,
                   std::vector<std::vector<Vertex>>& out) {
  if (p.empty() && x.empty()) {
    auto c = r;
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
    return;
  }
  // Pivot with the most neighbours in p.
  Vertex pivot = p.empty() ? x.front() : p.front();
  std::size_t best = 0;
  for (const auto* set : {&p, &x}) {
    for (Vertex u : *set) {
      const auto cnt = static_cast<std::size_t>(
          std::count_if(p.begin(), p.end(), [&](Vertex w) { return g.adjacent(u, w); }));
      if (cnt >= best) {
        best = cnt;
        pivot = u;
      }
    }
  }
  const std::vector<Vertex> candidates = [&] {
    std::vector<Vertex> c;
    for (Vertex v : p)
      if (!g.adjacent(pivot, v)) c.push_back(v);
    return c;
  }();
  for (Vertex v : candidates) {
    std::vector<Vertex> np, nx;
    for (Vertex w : p)
      if (g.adjacent(v, w)) np.push_back(w);
    for (Vertex w : x)
      if (g.adjacent(v, w)) nx.push_back(w);
    r.push_back(v);
    bron_kerbosch(g, r, std::move(np), std::move(nx), out);
    r.pop_back();
    std::erase(p, v);
    x.push_back(v);
  }
}

}  // namespace

NeighborhoodResult neighborhood_condition(const Graph& g, const Spectrum& s) {
  if (g.has_cables()) throw Unsupported("neighborhood condition needs a tensegrity without cables");
  NeighborhoodResult out;
  for (Vertex i = 0; i < g.order(); ++i) {
    std::vector<Vertex> keep;
    for (Vertex j = 0; j < g.order(); ++j)
      if (j != i && !g.adjacent(i, j)) keep.push_back(j);
    bool ok = true;
    if (keep.empty()) {
      ok = s.tau.is_exact() ? sgn(s.tau.exact()) < 0 : s.tau.approx() < -kConditionMargin;
    } else if (s.backend == Backend::exact) {
      ok = principal_invertible(g, s, keep);
    } else {
      const Eigen::MatrixXd a = adjacency_matrix_double(induced_subgraph(g, keep));
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
      ok = es.eigenvalues()(0) > s.tau.approx() + kConditionMargin;
    }
    if (!ok) {
      out.failing_vertex = i;
      return out;
    }
  }
  out.holds = true;
  return out;
}

bool clique_condition(const Graph& g, const Spectrum& s, std::span<const Vertex> clique) {
  if (g.has_cables()) throw Unsupported("clique condition needs a tensegrity without cables");
  std::vector<char> in(g.order(), 0);
  for (std::size_t a = 0; a < clique.size(); ++a) {
    if (clique[a] >= g.order()) throw InvalidArgument("clique vertex out of range");
    for (std::size_t b = a + 1; b < clique.size(); ++b)
      if (!g.adjacent(clique[a], clique[b])) throw InvalidArgument("vertex set is not a clique");
    in[clique[a]] = 1;
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!in[v]) keep.push_back(v);
  return principal_invertible(g, s, keep);
}

bool clique_condition_any(const Graph& g, const Spectrum& s) {
  for (const auto& c : maximal_cliques(g))
    if (clique_condition(g, s, c)) return true;
  return false;
}

std::vector<std::vector<Vertex>> maximal_cliques(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> r, p(g.order());
  for (Vertex v = 0; v < g.order(); ++v) p[v] = v;
  if (!p.empty()) bron_kerbosch(g, r, std::move(p), {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace eigenframe
