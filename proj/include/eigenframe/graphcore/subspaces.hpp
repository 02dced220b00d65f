#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace eigenframe {

/// A subspace of F_q^n stored as its reduced row echelon basis (dim x n,
/// row-major, entries in [0, q)).
struct Subspace {
  int dim = 0;
  int n = 0;
  std::vector<int> rref;

  auto operator<=>(const Subspace&) const = default;
};

bool is_prime(long long q);

/// Gaussian binomial [n choose r]_q, saturating at UINT64_MAX on overflow.
std::uint64_t gaussian_binomial(int q, int n, int r);

/// [k]_q = (q^k - 1)/(q - 1), the number of lines in a k-space.
long long q_integer(int q, int k);

/// All r-dimensional subspaces of F_q^n, sorted lexicographically by RREF.
/// Requires prime q; throws ResourceError if there would be more than
/// kMaxVertices of them.
std::vector<Subspace> enumerate_subspaces(int q, int n, int r);

/// Rank over F_q of the rows of `rows` (each of length n), q prime.
int rank_mod_q(std::vector<std::vector<int>> rows, int q);

/// dim(a ∩ b) computed as dim a + dim b - dim(a + b).
int intersection_dimension(const Subspace& a, const Subspace& b, int q);

bool skew(const Subspace& a, const Subspace& b, int q);
bool contains(const Subspace& big, const Subspace& small, int q);

}  // namespace eigenframe
