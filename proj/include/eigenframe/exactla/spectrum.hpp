#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <optional>
#include <vector>

#include "eigenframe/exactla/exact_matrix.hpp"
#include "eigenframe/exactla/value.hpp"
#include "eigenframe/graphcore/generators.hpp"

namespace eigenframe {

inline constexpr double kDefaultEigenTolerance = 1e-8;

struct Eigenvalue {
  Value value;
  std::size_t multiplicity = 0;
};

/// Spectrum of a symmetric matrix with its least eigenspace.
///
/// On the exact backend tau is an exact integer and tau_multiplicity is the
/// verified nullity of A - tau I; the other eigenvalues are exact only when
/// they come from character sums. On the floating backend everything is
/// clustered at `tolerance`.
struct Spectrum {
  Backend backend = Backend::exact;
  double tolerance = 0.0;
  std::vector<Eigenvalue> eigenvalues;  // ascending, multiplicities sum to n
  Value tau;
  std::size_t tau_multiplicity = 0;
  /// Exact backend: a basis of Ker(A - tau I).
  std::vector<ExactVector> tau_basis;
  /// Floating backend: n x d with orthonormal columns spanning the same space.
  Eigen::MatrixXd tau_basis_floating;

  std::size_t order() const;
  std::size_t distinct_count() const { return eigenvalues.size(); }
};

/// Least eigenvalue of a 0/1 adjacency matrix when it is an integer. The
/// candidates -Delta..0 are tested by exact rank deficiency of A - lambda I;
/// the eigensolver estimate decides between an integral least eigenvalue and
/// an irrational one below every integer eigenvalue. Returns nullopt when
/// tau is not integral. Throws InvalidArgument for non-adjacency input.
std::optional<Spectrum> integer_least_eigenvalue(const ExactMatrix& a);
std::optional<Spectrum> integer_least_eigenvalue(const Graph& g);

/// Exact spectrum of a Cayley graph on Z_2^n from character sums; the tau
/// basis consists of the +-1 characters chi_v(x) = (-1)^{popcount(v & x)}.
Spectrum cayley_spectrum(const CayleySpec& spec);

/// Symmetric eigensolve; eigenvalues within `tol` of their neighbour are
/// clustered. Throws NumericalError if the solver fails to converge.
Spectrum floating_least_eigenspace(const Eigen::MatrixXd& a, double tol = kDefaultEigenTolerance);

enum class SpectralBackend { automatic, exact, floating };

/// automatic: exact when tau is a certified integer, floating otherwise.
/// exact: throws Unsupported when tau is not integral.
Spectrum graph_spectrum(const Graph& g, SpectralBackend choice = SpectralBackend::automatic,
                        double tol = kDefaultEigenTolerance);

}  // namespace eigenframe
