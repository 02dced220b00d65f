#pragma once

#include <optional>
#include <span>
#include <vector>

#include "eigenframe/exactla/spectrum.hpp"
#include "eigenframe/graphcore/graph.hpp"

namespace eigenframe {

inline constexpr double kConditionMargin = 1e-6;

struct NeighborhoodResult {
  bool holds = false;
  std::optional<Vertex> failing_vertex;
};

/// lambda_min(G \ N[i]) > tau for every vertex i (an empty punctured graph
/// counts as lambda_min = 0). Sufficient for universal completability. On the
/// exact path interlacing gives lambda_min(G \ N[i]) >= tau, so the test is
/// nonsingularity of A(G \ N[i]) - tau I; floating uses a 1e-6 margin.
NeighborhoodResult neighborhood_condition(const Graph& g, const Spectrum& spectrum);

/// The principal submatrix of A - tau I on V \ C is invertible (an empty one
/// counts as invertible). Throws InvalidArgument if `clique` is not a clique.
bool clique_condition(const Graph& g, const Spectrum& spectrum, std::span<const Vertex> clique);

/// clique_condition for some maximal clique.
bool clique_condition_any(const Graph& g, const Spectrum& spectrum);

/// All maximal cliques (Bron-Kerbosch with pivoting), each sorted, in
/// lexicographic order.
std::vector<std::vector<Vertex>> maximal_cliques(const Graph& g);

}  // namespace eigenframe
