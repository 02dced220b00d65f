#include "eigenframe/graphcore/generators.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "eigenframe/error.hpp"
#include "eigenframe/graphcore/subspaces.hpp"

namespace eigenframe {

Graph cycle(int n) {
  if (n < 3) throw InvalidArgument("cycle needs n >= 3, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (int x = 0; x < n; ++x) {
    edges.push_back({static_cast<Vertex>(x), static_cast<Vertex>((x + 1) % n)});
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

Graph complete_graph(int n) {
  if (n < 1) throw InvalidArgument("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < static_cast<Vertex>(n); ++u)
    for (Vertex v = u + 1; v < static_cast<Vertex>(n); ++v) edges.push_back({u, v});
  return Graph(static_cast<std::size_t>(n), edges);
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw InvalidArgument("complete bipartite graph needs both sides nonempty");
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(a + j)});
  return Graph(static_cast<std::size_t>(a + b), edges);
}

std::vector<std::uint64_t> kneser_vertices(int n, int r) {
  if (n < 1 || n > 63) throw InvalidArgument("kneser needs 1 <= n <= 63, got " + std::to_string(n));
  if (r < 1 || r > n) {
    throw InvalidArgument("kneser needs 1 <= r <= n, got r=" + std::to_string(r));
  }
  std::vector<std::uint64_t> out;
  // Gosper's hack walks r-subsets in increasing bitmask order, which is colex.
  std::uint64_t set = (std::uint64_t{1} << r) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (set < limit) {
    out.push_back(set);
    if (out.size() > kMaxVertices) throw ResourceError("Kneser graph exceeds the vertex cap");
    const std::uint64_t low = set & (~set + 1);
    const std::uint64_t ripple = set + low;
    set = (((ripple ^ set) >> 2) / low) | ripple;
  }
  return out;
}

Graph kneser(int n, int r) {
  const auto sets = kneser_vertices(n, r);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if ((sets[i] & sets[j]) == 0) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  return Graph(sets.size(), edges);
}

Graph q_kneser(int q, int n, int r) {
  const auto spaces = enumerate_subspaces(q, n, r);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < spaces.size(); ++i)
    for (std::size_t j = i + 1; j < spaces.size(); ++j)
      if (skew(spaces[i], spaces[j], q)) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  return Graph(spaces.size(), edges);
}

CayleySpec normalized(const CayleySpec& spec) {
  if (spec.n < 1 || spec.n > 19) {
    throw InvalidArgument("Cayley exponent n must be in 1..19, got " + std::to_string(spec.n));
  }
  CayleySpec out{spec.n, spec.connection_set};
  const std::uint32_t limit = std::uint32_t{1} << spec.n;
  for (std::uint32_t c : out.connection_set) {
    if (c == 0) throw InvalidArgument("connection set contains the zero vector");
    if (c >= limit) {
      throw InvalidArgument("connection element " + std::to_string(c) + " has more than " +
                            std::to_string(spec.n) + " bits");
    }
  }
  std::sort(out.connection_set.begin(), out.connection_set.end());
  out.connection_set.erase(std::unique(out.connection_set.begin(), out.connection_set.end()),
                           out.connection_set.end());
  return out;
}

Graph cayley_z2(const CayleySpec& raw) {
  const CayleySpec spec = normalized(raw);
  const std::uint32_t size = std::uint32_t{1} << spec.n;
  std::vector<Edge> edges;
  for (std::uint32_t a = 0; a < size; ++a) {
    for (std::uint32_t c : spec.connection_set) {
      const std::uint32_t b = a ^ c;
      if (a < b) edges.push_back({a, b});
    }
  }
  return Graph(size, edges);
}

int gf2_rank(const std::vector<std::uint32_t>& vectors) {
  // XOR basis indexed by leading bit.
  std::uint32_t basis[32] = {};
  int rank = 0;
  for (std::uint32_t v : vectors) {
    while (v != 0) {
      const int lead = 31 - std::countl_zero(v);
      if (basis[lead] == 0) {
        basis[lead] = v;
        ++rank;
        break;
      }
      v ^= basis[lead];
    }
  }
  return rank;
}

Graph hypercube(int n) {
  CayleySpec spec{n, {}};
  for (int i = 0; i < n; ++i) spec.connection_set.push_back(std::uint32_t{1} << i);
  return cayley_z2(spec);
}

}  // namespace eigenframe
