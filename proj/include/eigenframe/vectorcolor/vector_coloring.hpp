#pragma once

#include <Eigen/Dense>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "eigenframe/exactla/exact_matrix.hpp"
#include "eigenframe/exactla/spectrum.hpp"
#include "eigenframe/graphcore/graph.hpp"

namespace eigenframe {

/// Walk-count certificate: A^k o I = a_k I and A^k o A = b_k A for k <= K.
struct OneWalkRegularCertificate {
  std::vector<mpz_class> a;
  std::vector<mpz_class> b;
  std::size_t K = 0;
  bool verdict = false;
  /// When the verdict is false: the first vertex or edge breaking the pattern.
  std::string witness;
};

/// Checks k = 0..K with K = (number of distinct eigenvalues) - 1; higher
/// powers of A are combinations of these. Without a spectrum the eigenvalues
/// are counted by the floating eigensolver.
OneWalkRegularCertificate is_one_walk_regular(const Graph& g);
OneWalkRegularCertificate is_one_walk_regular(const Graph& g, const Spectrum& spectrum);

/// Unit vectors with edge inner products at most -1/(t-1).
struct VectorColoring {
  Backend backend = Backend::exact;
  ExactMatrix gram;
  Eigen::MatrixXd gram_floating;
  Value t;
  bool strict = false;
};

/// Gram = (n/d) E_tau, t = 1 - r/tau, strict with edge value tau/r. Graphs
/// without edges get t = 1 and Gram = I. Throws PreconditionViolation when g
/// is not 1-walk-regular.
VectorColoring optimal_vector_coloring_1wr(const Graph& g, const Spectrum& spectrum);
VectorColoring optimal_vector_coloring_1wr(const Graph& g,
                                           SpectralBackend backend = SpectralBackend::automatic,
                                           double tol = kDefaultEigenTolerance);

struct UvcResult {
  bool uvc = false;
  VectorColoring optimal;
  /// For non-UVC connected graphs: (n/d)(E_tau + cX) for X in X(G).
  std::optional<VectorColoring> alternative;
  std::size_t x_dim = 0;
  bool numerical = false;
  std::string witness;
};

/// UVC iff dim X(G) = 0 (unique and unique strict vector colorability agree
/// here). Disconnected graphs are not UVC. Throws PreconditionViolation when
/// g is not 1-walk-regular.
UvcResult is_uniquely_vector_colorable_1wr(const Graph& g, const Spectrum& spectrum);
UvcResult is_uniquely_vector_colorable_1wr(const Graph& g,
                                           SpectralBackend backend = SpectralBackend::automatic,
                                           double tol = kDefaultEigenTolerance);

enum class ColoringStatus { valid, valid_strict, invalid };
const char* to_string(ColoringStatus status);

struct ColoringCheck {
  ColoringStatus status = ColoringStatus::invalid;
  /// First violated constraint: (i, i) for the diagonal, (i, j) for an edge;
  /// absent when the matrix fails only the PSD test.
  std::optional<Edge> at;
  std::string reason;
};

/// Unit diagonal, PSD, and gram_ij <= -1/(t-1) on edges (strict: equality on
/// every edge). Throws InvalidArgument when t <= 1 or the gram is not
/// symmetric.
ColoringCheck validate_coloring(const Graph& g, const ExactMatrix& gram, const mpq_class& t);
ColoringCheck validate_coloring(const Graph& g, const Eigen::MatrixXd& gram, double t,
                                double tol = 1e-9);
ColoringCheck validate_coloring(const Graph& g, const VectorColoring& coloring);

/// Every edge becomes a strut.
Graph struts_tensegrity(const Graph& g);

/// FNV-1a 64 of the canonical row-major text of the Gram matrix, as 16 hex digits.
std::string gram_digest(const VectorColoring& coloring);

/// {graph6, t, strict, uvc, x_dim, gram_digest}, plus the alternative coloring
/// (its gram, digest and validation) for non-UVC graphs.
nlohmann::json coloring_json(const Graph& g, const UvcResult& result);

}  // namespace eigenframe
