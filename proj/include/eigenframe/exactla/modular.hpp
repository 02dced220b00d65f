#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "eigenframe/exactla/exact_matrix.hpp"

namespace eigenframe {

/// Homogeneous linear system with small integer coefficients, stored by rows.
struct SparseIntegerSystem {
  using Row = std::vector<std::pair<std::uint32_t, std::int64_t>>;

  std::size_t cols = 0;
  std::vector<Row> rows;

  /// Zero coefficients are dropped; a row with no nonzero entry is skipped.
  void add_row(Row row);
};

/// Integer-valued matrix as a sparse system; throws InvalidArgument when an
/// entry is not an integer fitting in 64 bits.
SparseIntegerSystem to_sparse_system(const ExactMatrix& m);

/// Rank of the system reduced modulo the `prime_index`-th builtin prime
/// (31-bit primes). A lower bound on the rational rank.
std::size_t rank_mod_prime(const SparseIntegerSystem& system, std::size_t prime_index = 0);

struct HomogeneousSolution {
  std::size_t rank = 0;
  /// One primitive integral kernel vector per free column, positive leading
  /// entry, exactly verified against every equation.
  std::vector<ExactVector> basis;
  int primes_used = 0;
  bool used_fallback = false;
};

/// Exact kernel over Q. A full-rank reduction modulo one prime certifies a
/// trivial kernel; otherwise the reduced echelon form is lifted from several
/// primes by CRT and rational reconstruction and checked exactly, with a
/// Bareiss fallback if the lift never verifies.
HomogeneousSolution solve_homogeneous(const SparseIntegerSystem& system);

}  // namespace eigenframe
