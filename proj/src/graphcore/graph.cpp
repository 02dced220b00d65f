#include "eigenframe/graphcore/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "eigenframe/error.hpp"

namespace eigenframe {

const char* to_string(EdgeLabel label) {
  switch (label) {
    case EdgeLabel::bar:
      return "bar";
    case EdgeLabel::cable:
      return "cable";
    case EdgeLabel::strut:
      return "strut";
  }
  return "?";
}

Graph::Graph(std::size_t n) {
  if (n > kMaxVertices) {
    throw ResourceError("graph with " + std::to_string(n) + " vertices exceeds the cap of " +
                        std::to_string(kMaxVertices));
  }
  adjacency_.resize(n);
}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
  edges_.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u >= n || e.v >= n) {
      throw InvalidArgument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            "} out of range for " + std::to_string(n) + " vertices");
    }
    if (e.u == e.v) throw InvalidArgument("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  if (a >= order() || b >= order()) return false;
  const auto& nbrs = adjacency_[a];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& nbrs : adjacency_) best = std::max(best, nbrs.size());
  return best;
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  const Edge key{a, b};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

EdgeLabel Graph::label(Vertex a, Vertex b) const {
  auto idx = edge_index(a, b);
  if (!idx) {
    throw InvalidArgument("{" + std::to_string(a) + "," + std::to_string(b) + "} is not an edge");
  }
  return labels_.empty() ? EdgeLabel::strut : labels_[*idx];
}

Graph Graph::with_labels(std::vector<EdgeLabel> labels) const {
  if (labels.size() != edges_.size()) {
    throw InvalidArgument("expected " + std::to_string(edges_.size()) + " edge labels, got " +
                          std::to_string(labels.size()));
  }
  Graph out = *this;
  out.labels_ = std::move(labels);
  return out;
}

Graph Graph::with_uniform_label(EdgeLabel label) const {
  return with_labels(std::vector<EdgeLabel>(edges_.size(), label));
}

Graph Graph::without_labels() const {
  Graph out = *this;
  out.labels_.clear();
  return out;
}

bool Graph::has_cables() const {
  return std::find(labels_.begin(), labels_.end(), EdgeLabel::cable) != labels_.end();
}

bool Graph::is_connected() const {
  if (order() <= 1) return true;
  std::vector<char> seen(order(), 0);
  std::queue<Vertex> frontier;
  frontier.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    Vertex v = frontier.front();
    frontier.pop();
    for (Vertex w : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        frontier.push(w);
      }
    }
  }
  return reached == order();
}

bool Graph::is_regular() const {
  if (adjacency_.empty()) return true;
  const std::size_t d = adjacency_[0].size();
  return std::all_of(adjacency_.begin(), adjacency_.end(),
                     [d](const auto& nbrs) { return nbrs.size() == d; });
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edges_ != b.edges_) return false;
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const EdgeLabel la = a.labels_.empty() ? EdgeLabel::strut : a.labels_[i];
    const EdgeLabel lb = b.labels_.empty() ? EdgeLabel::strut : b.labels_[i];
    if (la != lb) return false;
  }
  return true;
}

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Edge> edges;
  edges.reserve(n * (n - (n > 0 ? 1 : 0)) / 2 - g.size());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<long> position(g.order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= g.order()) {
      throw InvalidArgument("vertex " + std::to_string(keep[i]) + " out of range");
    }
    position[keep[i]] = static_cast<long>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (position[e.u] >= 0 && position[e.v] >= 0) {
      edges.push_back({static_cast<Vertex>(position[e.u]), static_cast<Vertex>(position[e.v])});
    }
  }
  return Graph(keep.size(), edges);
}

Graph induced_delete_closed_nbhd(const Graph& g, Vertex v) {
  if (v >= g.order()) {
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range for graph of order " +
                          std::to_string(g.order()));
  }
  std::vector<Vertex> keep;
  for (Vertex w = 0; w < g.order(); ++w) {
    if (w != v && !g.adjacent(v, w)) keep.push_back(w);
  }
  return induced_subgraph(g, keep);
}

Graph permute(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw InvalidArgument("permutation size mismatch");
  std::vector<char> hit(g.order(), 0);
  for (Vertex p : perm) {
    if (p >= g.order() || hit[p]) throw InvalidArgument("not a permutation");
    hit[p] = 1;
  }
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  Graph out(g.order(), edges);
  if (!g.has_labels()) return out;
  std::vector<EdgeLabel> labels(out.size());
  for (const Edge& e : g.edges()) {
    labels[*out.edge_index(perm[e.u], perm[e.v])] = g.label(e.u, e.v);
  }
  return out.with_labels(std::move(labels));
}

std::optional<SplitPartition> is_split(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

  std::size_t m = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (g.degree(order[i - 1]) + 1 >= i) m = i;
  }
  std::size_t head = 0;
  std::size_t tail = 0;
  for (std::size_t i = 0; i < n; ++i) {
    (i < m ? head : tail) += g.degree(order[i]);
  }
  if (head != m * (m - (m > 0 ? 1 : 0)) + tail) return std::nullopt;

  SplitPartition part;
  part.clique.assign(order.begin(), order.begin() + static_cast<long>(m));
  part.independent.assign(order.begin() + static_cast<long>(m), order.end());
  std::sort(part.clique.begin(), part.clique.end());
  std::sort(part.independent.begin(), part.independent.end());

  for (std::size_t i = 0; i < part.clique.size(); ++i)
    for (std::size_t j = i + 1; j < part.clique.size(); ++j)
      if (!g.adjacent(part.clique[i], part.clique[j])) {
        throw InternalError("split recognition produced a non-clique");
      }
  for (std::size_t i = 0; i < part.independent.size(); ++i)
    for (std::size_t j = i + 1; j < part.independent.size(); ++j)
      if (g.adjacent(part.independent[i], part.independent[j])) {
        throw InternalError("split recognition produced a non-independent set");
      }
  return part;
}

}  // namespace eigenframe
