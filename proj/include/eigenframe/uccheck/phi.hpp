#pragma once

#include <Eigen/Dense>
#include <optional>

#include "eigenframe/exactla/exact_matrix.hpp"
#include "eigenframe/frameworks/framework.hpp"

namespace eigenframe {

/// The bijection between R(G) and X(G) for a (generalized) least eigenvalue
/// framework. Exact frameworks use P_b, the pivot columns of P: it has full
/// column rank and the same column space, and
///   phi(R) = P_b R P_b^T,  phi^{-1}(X) = (P_b^T P_b)^{-1} P_b^T X P_b (P_b^T P_b)^{-1}.
/// Floating frameworks have orthonormal P and use P R P^T and P^T X P.
class PhiMap {
 public:
  explicit PhiMap(const Framework& lef);

  std::size_t dimension() const noexcept { return d_; }
  /// Rows of P_b (exact) are the vectors p_i the R-space refers to.
  const ExactMatrix& basis() const { return pb_; }

  /// R must be symmetric d x d with p_i^T R p_j = 0 for i ~= j; otherwise
  /// InvalidArgument.
  ExactMatrix phi(const ExactMatrix& r) const;
  ExactMatrix phi_inverse(const ExactMatrix& x) const;
  Eigen::MatrixXd phi(const Eigen::MatrixXd& r) const;
  Eigen::MatrixXd phi_inverse(const Eigen::MatrixXd& x) const;

  /// Membership in R(G) (symmetry and the vanishing conditions).
  bool in_rspace(const ExactMatrix& r) const;

 private:
  Graph graph_;
  Backend backend_;
  std::size_t d_ = 0;
  ExactMatrix pb_, pbt_, gram_inv_;
  Eigen::MatrixXd pf_;
};

/// The framework with Gram P P^T + c x, for x in X(G). The default scale is
/// c = 1 / (max absolute row sum of x), with lambda_min(c x) >= -1.
/// Throws InvalidArgument when x is not in X(G) and InternalError when the
/// result is not PSD or not dominated by p with equality on i ~= j.
Framework dominated_frameworks(const Framework& p, const ExactMatrix& x,
                               std::optional<mpq_class> c = std::nullopt);
Framework dominated_frameworks(const Framework& p, const Eigen::MatrixXd& x,
                               std::optional<double> c = std::nullopt);

}  // namespace eigenframe
