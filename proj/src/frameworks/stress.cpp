#include "eigenframe/frameworks/stress.hpp"

#include "eigenframe/error.hpp"

namespace eigenframe {

std::string StressConditions::first_failure() const {
  if (!psd) return "(i) not positive semidefinite";
  if (!supported_on_edges) return "(ii) nonzero entry on a non-edge";
  if (!edge_signs) return "(iii) wrong sign on a strut or cable";
  if (!annihilates) return "(iv) ZP != 0";
  if (!corank_matches) {
    return "(v) corank " + std::to_string(corank) + " != span dimension " + std::to_string(span_dimension);
  }
  return {};
}

StressConditions check_stress(const Framework& p, const ExactMatrix& z) {
  const Graph& g = p.graph();
  const std::size_t n = g.order();
  if (z.rows() != n || z.cols() != n) throw InvalidArgument("stress matrix has the wrong size");
  if (!z.is_symmetric()) throw InvalidArgument("stress matrix is not symmetric");

  StressConditions c;
  c.psd = is_psd_exact(z);

  c.supported_on_edges = true;
  for (std::size_t i = 0; i < n && c.supported_on_edges; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (sgn(z(i, j)) != 0 && !g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j))) {
        c.supported_on_edges = false;
        break;
      }

  c.edge_signs = true;
  for (const Edge& e : g.edges()) {
    const EdgeLabel l = g.label(e.u, e.v);
    if ((l == EdgeLabel::strut && sgn(z(e.u, e.v)) < 0) || (l == EdgeLabel::cable && sgn(z(e.u, e.v)) > 0)) {
      c.edge_signs = false;
    }
  }

  // im Gram = im P, so ZP = 0 iff Z Gram = 0.
  c.annihilates = (p.has_points() ? z * p.points() : z * p.gram()).is_zero();
  c.corank = n - rank(z);
  c.span_dimension = p.dimension();
  c.corank_matches = c.corank == c.span_dimension;
  return c;
}

StressMatrix canonical_stress(const Graph& g, const Spectrum& s) {
  if (g.has_cables()) throw Unsupported("canonical stress needs a tensegrity without cables");
  if (s.backend != Backend::exact || !s.tau.is_exact()) throw Unsupported("canonical stress needs an exact tau");
  StressMatrix out;
  out.z = adjacency_matrix(g);
  for (std::size_t i = 0; i < g.order(); ++i) out.z(i, i) -= s.tau.exact();
  const ExactMatrix basis = ExactMatrix::from_columns(g.order(), s.tau_basis);
  out.conditions = check_stress(Framework::from_points(g, basis, s), out.z);
  if (!out.conditions.all()) throw InternalError("A - tau I fails " + out.conditions.first_failure());
  return out;
}

}  // namespace eigenframe
