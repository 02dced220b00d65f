#include "invariants.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "eigenframe/exactla/exact_matrix.hpp"
#include "eigenframe/exactla/spectrum.hpp"
#include "eigenframe/frameworks/framework.hpp"
#include "eigenframe/frameworks/stress.hpp"
#include "eigenframe/graphcore/generators.hpp"
#include "eigenframe/graphcore/graph6.hpp"
#include "eigenframe/survey/orbits.hpp"
#include "eigenframe/uccheck/conditions.hpp"
#include "eigenframe/uccheck/phi.hpp"
#include "eigenframe/uccheck/xspace.hpp"
#include "eigenframe/vectorcolor/vector_coloring.hpp"
#include "oracles.hpp"

namespace invariants {

using namespace eigenframe;

namespace {

constexpr double kTol = 1e-8;

std::string describe(const Graph& g, std::size_t index, const std::string& what) {
  std::ostringstream s;
  s << "run " << index << " (" << emit_graph6(g) << "): " << what;
  return s.str();
}

bool agrees_on_support(const Graph& g, const ExactMatrix& a, const ExactMatrix& b) {
  for (std::size_t i = 0; i < g.order(); ++i)
    if (a(i, i) != b(i, i)) return false;
  for (const Edge& e : g.edges())
    if (a(e.u, e.v) != b(e.u, e.v)) return false;
  return true;
}

bool agrees_on_support(const Graph& g, const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, double tol) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    if (std::abs(a(i, i) - b(i, i)) > tol) return false;
  for (const Edge& e : g.edges())
    if (std::abs(a(e.u, e.v) - b(e.u, e.v)) > tol) return false;
  return true;
}

void exact_run(const Graph& g, const Spectrum& s, std::size_t index, std::mt19937_64& rng, Outcome& out) {
  auto fail = [&](const std::string& what) { out.failures.push_back(describe(g, index, what)); };
  const std::size_t n = g.order();
  const ExactMatrix a = adjacency_matrix(g);
  const mpq_class tau = s.tau.exact();

  const ExactMatrix e = least_eigenspace_projector(s);
  if (!(e * e == e)) fail("E^2 != E");
  if (!(e.transpose() == e)) fail("E not symmetric");
  if (e.trace() != static_cast<long>(s.tau_multiplicity)) fail("trace E != d");

  const Framework lef = least_eigenvalue_framework(g, s);
  const ExactMatrix& p = lef.points();
  if (!(a * p == p * tau)) fail("A P != tau P");
  if (!(lef.gram() == e)) fail("LEF Gram != E_tau");

  const StressMatrix z = canonical_stress(g, s);
  if (!z.conditions.all()) fail("stress condition fails: " + z.conditions.first_failure());
  const StressConditions again = check_stress(lef, a - ExactMatrix::identity(n) * tau);
  if (!again.all()) fail("stress of the LEF fails: " + again.first_failure());

  const XSpaceBasis x = xspace(g, s);
  if (x.dim == 0) return;
  const PhiMap phi(lef);
  std::uniform_int_distribution<int> coef(-3, 3);
  ExactMatrix combo(n, n);
  for (const auto& b : x.basis) {
    if (!in_xspace(g, tau, b)) fail("basis element outside X(G)");
    combo += b * mpq_class(coef(rng));
    const ExactMatrix r = phi.phi_inverse(b);
    if (!phi.in_rspace(r)) fail("phi^-1(X) outside R(G)");
    if (!(phi.phi(r) == b)) fail("phi(phi^-1(X)) != X");
    if (!(phi.phi_inverse(phi.phi(r)) == r)) fail("phi^-1(phi(R)) != R");
  }
  if (!(phi.phi(phi.phi_inverse(combo)) == combo)) fail("phi round trip fails on a combination");
  const ExactMatrix& pick = x.basis[static_cast<std::size_t>(rng() % x.basis.size())];
  const Framework q = dominated_frameworks(lef, pick);
  if (!dominates(lef, q)) fail("dominated framework not dominated");
  if (!agrees_on_support(g, q.gram(), lef.gram())) fail("dominated Gram differs on i ~= j");
  if (!is_psd_exact(q.gram())) fail("dominated Gram not PSD");
  if (!combo.is_zero()) {
    const Framework qc = dominated_frameworks(lef, combo);
    if (!agrees_on_support(g, qc.gram(), lef.gram())) fail("dominated Gram differs on i ~= j");
  }
}

void floating_run(const Graph& g, const Spectrum& s, std::size_t index, std::mt19937_64& rng, Outcome& out) {
  auto fail = [&](const std::string& what) { out.failures.push_back(describe(g, index, what)); };
  const Eigen::MatrixXd a = adjacency_matrix_double(g);
  const Eigen::MatrixXd& p = s.tau_basis_floating;
  const Eigen::MatrixXd e = p * p.transpose();
  if ((e * e - e).cwiseAbs().maxCoeff() > kTol) fail("E^2 != E");
  if ((a * p - s.tau.approx() * p).cwiseAbs().maxCoeff() > kTol) fail("A P != tau P");

  const Eigen::MatrixXd z = a - s.tau.approx() * Eigen::MatrixXd::Identity(a.rows(), a.cols());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(z, Eigen::EigenvaluesOnly);
  if (es.eigenvalues()(0) < -kTol) fail("A - tau I not PSD");
  if ((z * p).cwiseAbs().maxCoeff() > kTol) fail("Z P != 0");
  std::size_t corank = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) corank += std::abs(es.eigenvalues()(i)) < 1e-7;
  if (corank != s.tau_multiplicity) fail("corank Z != d");

  const Framework lef = least_eigenvalue_framework(g, s);
  const XSpaceBasis x = xspace(g, s);
  if (x.dim == 0) return;
  const PhiMap phi(lef);
  std::normal_distribution<double> normal;
  Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(a.rows(), a.cols());
  for (const auto& b : x.basis_floating) {
    combo += normal(rng) * b;
    const Eigen::MatrixXd r = phi.phi_inverse(b);
    if ((phi.phi(r) - b).cwiseAbs().maxCoeff() > kTol) fail("phi(phi^-1(X)) != X");
    if ((phi.phi_inverse(phi.phi(r)) - r).cwiseAbs().maxCoeff() > kTol) fail("phi^-1(phi(R)) != R");
  }
  const Framework q = dominated_frameworks(lef, combo);
  if (!dominates(lef, q, 1e-9)) fail("dominated framework not dominated");
  if (!agrees_on_support(g, q.gram_floating(), lef.gram_floating(), 1e-9)) fail("dominated Gram differs on i ~= j");
}

}  // namespace

Graph random_run_graph(std::uint64_t seed, std::size_t index) {
  std::mt19937_64 rng(seed * 1000003 + index);
  switch (index % 4) {
    case 0:
    case 1: {
      const int n = 2 + static_cast<int>(rng() % 3);
      ConnectionMask mask = 0;
      while (gf2_rank(mask_elements(mask)) != n) mask = static_cast<ConnectionMask>(rng()) & ((1U << (1U << n)) - 2);
      return cayley_z2({n, mask_elements(mask)});
    }
    case 2:
      if (rng() % 2) return cycle(3 + 2 * static_cast<int>(rng() % 8));
      return kneser(5 + static_cast<int>(rng() % 2), 2);
    default: {
      const int n = 3 + static_cast<int>(rng() % 7);
      return oracle::random_connected_graph(rng, n, 0.3 + 0.4 * static_cast<double>(rng() % 100) / 100.0);
    }
  }
}

Outcome random_runs(std::uint64_t seed, std::size_t runs) {
  Outcome out;
  for (std::size_t i = 0; i < runs; ++i) {
    const Graph g = random_run_graph(seed, i);
    std::mt19937_64 rng(seed + 7 * i);
    try {
      const Spectrum s = graph_spectrum(g);
      if (s.backend == Backend::exact) {
        exact_run(g, s, i, rng, out);
        ++out.exact_runs;
      } else {
        floating_run(g, s, i, rng, out);
      }
    } catch (const std::exception& e) {
      out.failures.push_back(describe(g, i, std::string("exception: ") + e.what()));
    }
    ++out.runs;
  }
  return out;
}

Outcome walk_regular_constants() {
  std::vector<Graph> graphs;
  for (int n = 3; n <= 7; ++n) graphs.push_back(complete_graph(n));
  for (int n = 5; n <= 13; n += 2) graphs.push_back(cycle(n));
  graphs.push_back(cycle(6));
  graphs.push_back(kneser(5, 2));
  graphs.push_back(kneser(7, 2));
  graphs.push_back(kneser(7, 3));
  graphs.push_back(q_kneser(2, 4, 2));
  graphs.push_back(hypercube(3));
  graphs.push_back(hypercube(4));
  graphs.push_back(complete_bipartite(3, 3));
  graphs.push_back(complete_bipartite(4, 4));
  graphs.push_back(cayley_z2({4, {1, 2, 4, 8, 15}}));

  Outcome out;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    auto fail = [&](const std::string& what) { out.failures.push_back(describe(g, i, what)); };
    ++out.runs;
    try {
      if (!is_one_walk_regular(g).verdict) {
        fail("not 1-walk-regular");
        continue;
      }
      const Spectrum s = graph_spectrum(g);
      const double n = static_cast<double>(g.order()), d = static_cast<double>(s.tau_multiplicity);
      const double r = static_cast<double>(g.degree(0));
      if (s.backend == Backend::exact) {
        ++out.exact_runs;
        const ExactMatrix e = least_eigenspace_projector(s);
        const mpq_class a = mpq_class(static_cast<long>(s.tau_multiplicity)) / static_cast<long>(g.order());
        const mpq_class b = s.tau.exact() * a / static_cast<long>(g.degree(0));
        for (std::size_t v = 0; v < g.order(); ++v)
          if (e(v, v) != a) fail("diagonal != d/n");
        for (const Edge& ed : g.edges())
          if (e(ed.u, ed.v) != b) fail("edge value != tau d/(n r)");
      } else {
        const Eigen::MatrixXd e = s.tau_basis_floating * s.tau_basis_floating.transpose();
        for (Eigen::Index v = 0; v < e.rows(); ++v)
          if (std::abs(e(v, v) - d / n) > kTol) fail("diagonal != d/n");
        for (const Edge& ed : g.edges())
          if (std::abs(e(ed.u, ed.v) - s.tau.approx() * d / (n * r)) > kTol) fail("edge value != tau d/(n r)");
      }
    } catch (const std::exception& ex) {
      fail(std::string("exception: ") + ex.what());
    }
  }
  return out;
}

Outcome xspace_brute_force(const std::string& g6_path) {
  Outcome out;
  const auto lines = oracle::read_lines(g6_path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Graph g = parse_graph6(lines[i]);
    long tau = 0;
    if (!oracle::integral_least_eigenvalue(g, tau)) continue;
    ++out.runs;
    try {
      const Spectrum s = graph_spectrum(g, SpectralBackend::exact);
      if (s.tau.exact() != tau) {
        out.failures.push_back(describe(g, i, "tau disagrees with the Jacobi oracle"));
        continue;
      }
      ++out.exact_runs;
      const std::size_t fast = xspace(g, s).dim;
      const std::size_t brute = oracle::brute_xspace_dim(g, tau);
      if (fast != brute) {
        out.failures.push_back(describe(g, i, "dim X " + std::to_string(fast) + " vs brute force " +
                                                  std::to_string(brute)));
      }
    } catch (const std::exception& e) {
      out.failures.push_back(describe(g, i, std::string("exception: ") + e.what()));
    }
  }
  return out;
}

Outcome sufficient_conditions(std::uint64_t seed, std::size_t random_graphs) {
  std::vector<Graph> graphs;
  for (int n = 1; n <= 4; ++n)
    for (const ConnectionMask m : enumerate_orbits(n)) graphs.push_back(cayley_z2({n, mask_elements(m)}));
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < random_graphs; ++i) {
    const int n = 3 + static_cast<int>(rng() % 8);
    graphs.push_back(oracle::random_connected_graph(rng, n, 0.25 + 0.5 * static_cast<double>(rng() % 100) / 100.0));
  }
  Outcome out;
  std::size_t fired = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    ++out.runs;
    try {
      const Spectrum s = graph_spectrum(g);
      out.exact_runs += s.backend == Backend::exact;
      const bool nb = neighborhood_condition(g, s).holds;
      const bool cl = clique_condition_any(g, s);
      if (!nb && !cl) continue;
      ++fired;
      const std::size_t dim = xspace(g, s).dim;
      if (dim != 0) out.failures.push_back(describe(g, i, "condition holds but dim X = " + std::to_string(dim)));
    } catch (const std::exception& e) {
      out.failures.push_back(describe(g, i, std::string("exception: ") + e.what()));
    }
  }
  if (fired == 0) out.failures.push_back("no graph satisfied either condition");
  return out;
}

}  // namespace invariants
