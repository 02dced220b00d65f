#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace eigenframe {

using Vertex = std::uint32_t;

/// Hard cap on vertex count for every constructor and generator.
inline constexpr std::size_t kMaxVertices = 1'000'000;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Tensegrity role of an edge: bars fix the inner product, cables bound it
/// from below, struts bound it from above.
enum class EdgeLabel : std::uint8_t { bar, cable, strut };

const char* to_string(EdgeLabel label);

/// Simple undirected graph on vertices 0..n-1 with an optional bar/cable/strut
/// labelling. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n);

  /// Builds a graph from an edge list. Endpoints may be given in either order;
  /// duplicates collapse. Throws InvalidArgument on loops or out-of-range
  /// endpoints and ResourceError above kMaxVertices.
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return adjacency_.empty(); }

  bool adjacent(Vertex a, Vertex b) const;
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  std::size_t max_degree() const;

  /// Sorted list of edges (u < v, lexicographic).
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool has_labels() const noexcept { return !labels_.empty(); }

  /// Label of edge {a,b}. Unlabelled graphs report every edge as a strut.
  /// Throws InvalidArgument if {a,b} is not an edge.
  EdgeLabel label(Vertex a, Vertex b) const;

  /// Copy with labels assigned edge-by-edge in edges() order.
  Graph with_labels(std::vector<EdgeLabel> labels) const;
  Graph with_uniform_label(EdgeLabel label) const;
  Graph without_labels() const;

  bool has_cables() const;

  bool is_connected() const;
  bool is_regular() const;

  /// Index of edge {a,b} in edges(), if present.
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;

  /// Same vertex count, same edges and same labels (absent labels compare as
  /// all-strut).
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
  std::vector<EdgeLabel> labels_;
};

Graph complement(const Graph& g);

/// Subgraph induced by `keep` (vertices renumbered in the given order).
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// G \ N[v]: the subgraph induced on the vertices not adjacent or equal to v.
Graph induced_delete_closed_nbhd(const Graph& g, Vertex v);

/// Relabel vertices: vertex v of g becomes perm[v].
Graph permute(const Graph& g, std::span<const Vertex> perm);

struct SplitPartition {
  std::vector<Vertex> clique;
  std::vector<Vertex> independent;
};

/// Split-graph recognition via the degree-sequence test: with degrees sorted
/// non-increasingly and m = max{i : d_i >= i-1}, g is split iff
/// sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i. Returns the witness partition (the
/// m highest-degree vertices form the clique) or nullopt.
std::optional<SplitPartition> is_split(const Graph& g);

}  // namespace eigenframe
