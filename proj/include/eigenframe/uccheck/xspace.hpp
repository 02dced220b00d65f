#pragma once

#include <Eigen/Dense>
#include <json.hpp>
#include <limits>
#include <string>
#include <vector>

#include "eigenframe/exactla/exact_matrix.hpp"
#include "eigenframe/exactla/spectrum.hpp"
#include "eigenframe/graphcore/graph.hpp"

namespace eigenframe {

inline constexpr double kSingularValueThreshold = 1e-7;

/// Basis of X(G) = {X symmetric : (A+I) o X = 0, (A - tau I) X = 0}.
struct XSpaceBasis {
  Backend backend = Backend::exact;
  Value tau;
  std::size_t unknowns = 0;  // non-adjacent pairs i < j
  std::size_t dim = 0;
  std::vector<ExactMatrix> basis;                // exact backend
  std::vector<Eigen::MatrixXd> basis_floating;   // floating backend, orthonormal coordinates
  /// Floating backend: smallest over largest singular value of the constraint
  /// matrix (infinity when there are no unknowns). Exact backend: unused.
  double singular_margin = std::numeric_limits<double>::infinity();
};

/// Unknowns are x_ij for non-adjacent i < j, so (A+I) o X = 0 holds by
/// construction; every entry of (A - tau I) X = 0 is one equation. Exact
/// backend: exact kernel; floating backend: SVD with rank threshold
/// 1e-7 * sigma_max.
XSpaceBasis xspace(const Graph& g, const Spectrum& spectrum);

/// Index pairs (i, j), i < j, of the unknowns in the order used by xspace.
std::vector<Edge> xspace_unknowns(const Graph& g);

/// (A+I) o X = 0 and (A - tau I) X = 0, exactly.
bool in_xspace(const Graph& g, const mpq_class& tau, const ExactMatrix& x);

struct UcVerdict {
  bool universally_completable = false;
  Spectrum spectrum;
  XSpaceBasis x;
  /// The floating path decided the dimension from singular values.
  bool numerical = false;
};

/// UC iff dim X(G) = 0. Throws Unsupported for graphs with cables.
UcVerdict is_universally_completable(const Graph& g, const Spectrum& spectrum);
UcVerdict is_universally_completable(const Graph& g,
                                     SpectralBackend backend = SpectralBackend::automatic,
                                     double tol = kDefaultEigenTolerance);

/// {graph6, tau, tau_mult, x_dim, verdict, conditions{neighborhood, clique,
/// split}, backend, numerical, sv_margin}.
nlohmann::json verdict_json(const Graph& g, const UcVerdict& v);

}  // namespace eigenframe
