#pragma once

#include <Eigen/Dense>
#include <json.hpp>
#include <optional>

#include "eigenframe/exactla/exact_matrix.hpp"
#include "eigenframe/exactla/spectrum.hpp"
#include "eigenframe/graphcore/graph.hpp"

namespace eigenframe {

inline constexpr double kGramTolerance = 1e-9;

/// A tensegrity graph with one vector per vertex. The Gram matrix is the
/// source of truth; the point matrix P (rows = vectors) may be absent for
/// frameworks that are only known up to congruence.
class Framework {
 public:
  static Framework from_points(Graph g, ExactMatrix points, std::optional<Spectrum> spectrum = {});
  static Framework from_gram(Graph g, ExactMatrix gram, std::optional<Spectrum> spectrum = {});
  static Framework from_points(Graph g, Eigen::MatrixXd points, std::optional<Spectrum> spectrum = {});
  static Framework from_gram(Graph g, Eigen::MatrixXd gram, std::optional<Spectrum> spectrum = {});

  const Graph& graph() const noexcept { return graph_; }
  Backend backend() const noexcept { return backend_; }
  std::size_t order() const noexcept { return graph_.order(); }
  /// dim span(p_1..p_n) = rank of the Gram matrix.
  std::size_t dimension() const noexcept { return dimension_; }
  bool has_points() const noexcept { return has_points_; }

  /// Exact accessors throw InvalidArgument on a floating framework.
  const ExactMatrix& points() const;
  const ExactMatrix& gram() const;
  const Eigen::MatrixXd& points_floating() const;
  /// Gram matrix in doubles (converted once for exact frameworks).
  const Eigen::MatrixXd& gram_floating() const noexcept { return gram_double_; }

  const std::optional<Spectrum>& spectrum() const noexcept { return spectrum_; }

  /// Same vectors on a graph with the same vertices and edges but other labels.
  Framework relabelled(Graph g) const;

 private:
  Framework() = default;
  void check_graph(const char* what, std::size_t rows) const;

  Graph graph_;
  Backend backend_ = Backend::exact;
  bool has_points_ = false;
  ExactMatrix points_;
  ExactMatrix gram_;
  Eigen::MatrixXd points_double_;
  Eigen::MatrixXd gram_double_;
  std::size_t dimension_ = 0;
  std::optional<Spectrum> spectrum_;
};

/// The least eigenvalue framework. Exact backend: Gram = E_tau exactly, with
/// P an orthonormal rational basis when exact Gram-Schmidt stays rational and
/// P = E_tau (the congruent generalized framework) otherwise. Floating backend:
/// P has orthonormal columns from the eigensolver.
Framework least_eigenvalue_framework(const Graph& g, const Spectrum& spectrum);
Framework least_eigenvalue_framework(const Graph& g,
                                     SpectralBackend backend = SpectralBackend::automatic,
                                     double tol = kDefaultEigenTolerance);

/// Orthogonal projector onto the tau-eigenspace described by an exact spectrum.
ExactMatrix least_eigenspace_projector(const Spectrum& spectrum);

/// Weighted incidence frameworks: rows indexed by r-subsets (r-subspaces),
/// columns by elements (lines); alpha on incident pairs, beta elsewhere with
/// alpha = r - n, beta = r (alpha = [r]_q - [n]_q, beta = [r]_q), so P 1 = 0.
/// Throws InvalidArgument unless n >= 2r + 1.
Framework kneser_framework(int n, int r);
Framework qkneser_framework(int q, int n, int r);

/// p dominates q: equal Gram entries on the diagonal and on bars, q >= p on
/// cables, q <= p on struts. Labels come from p's graph. Exact comparison when
/// both frameworks are exact, absolute tolerance `tol` otherwise.
bool dominates(const Framework& p, const Framework& q, double tol = kGramTolerance);

bool congruent(const Framework& p, const Framework& q, double tol = kGramTolerance);

/// {n, d, backend, gram, tau, tau_multiplicity}.
nlohmann::json framework_json(const Framework& p);

}  // namespace eigenframe
