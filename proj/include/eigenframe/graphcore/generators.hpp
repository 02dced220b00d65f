#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eigenframe/graphcore/graph.hpp"

namespace eigenframe {

Graph cycle(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);

/// Kneser graph K(n:r). Vertices are the r-subsets of {0..n-1} in colex order
/// (the order of their bitmasks as integers); edges join disjoint sets.
Graph kneser(int n, int r);

/// The r-subsets of {0..n-1} as bitmasks, in the vertex order used by kneser().
std::vector<std::uint64_t> kneser_vertices(int n, int r);

/// q-Kneser graph qK(n:r) for prime q: vertices are r-dimensional subspaces of
/// F_q^n in lexicographic order of their RREF bases; edges join subspaces that
/// meet only in 0.
Graph q_kneser(int q, int n, int r);

/// Connection set for a Cayley graph on Z_2^n. Elements are n-bit vectors
/// encoded as integers (bit i = coordinate i).
struct CayleySpec {
  int n = 0;
  std::vector<std::uint32_t> connection_set;
};

/// Validates n and the connection set (0 not in C, elements below 2^n) and returns it
/// with the connection set sorted and deduplicated.
CayleySpec normalized(const CayleySpec& spec);

/// Cayley graph on Z_2^n: a ~ b iff a xor b is in the connection set.
Graph cayley_z2(const CayleySpec& spec);

/// Rank over GF(2) of a set of bit vectors.
int gf2_rank(const std::vector<std::uint32_t>& vectors);

/// Q_n as the Cayley graph with the standard basis as connection set.
Graph hypercube(int n);

}  // namespace eigenframe
