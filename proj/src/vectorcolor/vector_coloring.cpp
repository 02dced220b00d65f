#include "eigenframe/vectorcolor/vector_coloring.hpp"

#include <cmath>
#include <cstdio>

#include "eigenframe/error.hpp"
#include "eigenframe/frameworks/framework.hpp"
#include "eigenframe/graphcore/graph6.hpp"
#include "eigenframe/uccheck/phi.hpp"
#include "eigenframe/uccheck/xspace.hpp"

namespace eigenframe {
namespace {

using IntMatrix = std::vector<mpz_class>;

OneWalkRegularCertificate walk_certificate(const Graph& g, std::size_t distinct) {
  const std::size_t n = g.order();
  OneWalkRegularCertificate cert;
  cert.K = std::max<std::size_t>(distinct == 0 ? 0 : distinct - 1, std::min<std::size_t>(2, n));
  IntMatrix cur(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) cur[i * n + i] = 1;
  cert.verdict = true;
  for (std::size_t k = 0; k <= cert.K; ++k) {
    const mpz_class a = n ? cur[0] : mpz_class(0);
    for (std::size_t i = 1; i < n; ++i) {
      if (cur[i * n + i] != a) {
        cert.verdict = false;
        cert.witness = "closed walks of length " + std::to_string(k) + ": vertex 0 has " + a.get_str() +
                       ", vertex " + std::to_string(i) + " has " + cur[i * n + i].get_str();
        return cert;
      }
    }
    const auto& edges = g.edges();
    const mpz_class b = edges.empty() ? mpz_class(0) : cur[edges[0].u * n + edges[0].v];
    for (const Edge& e : edges) {
      if (cur[e.u * n + e.v] != b) {
        cert.verdict = false;
        cert.witness = "walks of length " + std::to_string(k) + ": edge " + std::to_string(edges[0].u) + "-" +
                       std::to_string(edges[0].v) + " has " + b.get_str() + ", edge " + std::to_string(e.u) + "-" +
                       std::to_string(e.v) + " has " + cur[e.u * n + e.v].get_str();
        return cert;
      }
    }
    cert.a.push_back(a);
    cert.b.push_back(b);
    if (k == cert.K) break;
    IntMatrix next(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (Vertex l : g.neighbors(static_cast<Vertex>(i)))
        for (std::size_t j = 0; j < n; ++j) next[i * n + j] += cur[l * n + j];
    cur = std::move(next);
  }
  return cert;
}

std::string gram_text(const VectorColoring& c) {
  std::string out;
  const std::size_t n = c.backend == Backend::exact ? c.gram.rows() : static_cast<std::size_t>(c.gram_floating.rows());
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out += ';';
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out += ',';
      out += c.backend == Backend::exact
                 ? format_rational(c.gram(i, j))
                 : format_double(round12(c.gram_floating(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))));
    }
  }
  return out;
}

nlohmann::json value_json(const Value& v) {
  if (v.is_exact()) return format_rational(v.exact());
  return round12(v.approx());
}

nlohmann::json gram_json(const VectorColoring& c) {
  nlohmann::json rows = nlohmann::json::array();
  const std::size_t n = c.backend == Backend::exact ? c.gram.rows() : static_cast<std::size_t>(c.gram_floating.rows());
  for (std::size_t i = 0; i < n; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < n; ++j) {
      if (c.backend == Backend::exact) {
        row.push_back(format_rational(c.gram(i, j)));
      } else {
        row.push_back(round12(c.gram_floating(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void require_one_walk_regular(const Graph& g, const Spectrum& s) {
  const auto cert = is_one_walk_regular(g, s);
  if (!cert.verdict) throw PreconditionViolation("graph is not 1-walk-regular", cert.witness);
}

}  // namespace

OneWalkRegularCertificate is_one_walk_regular(const Graph& g) {
  if (g.empty()) throw InvalidArgument("1-walk-regularity of the empty graph");
  const Spectrum s = floating_least_eigenspace(adjacency_matrix_double(g));
  return walk_certificate(g, s.distinct_count());
}

OneWalkRegularCertificate is_one_walk_regular(const Graph& g, const Spectrum& s) {
  if (g.empty()) throw InvalidArgument("1-walk-regularity of the empty graph");
  return walk_certificate(g, s.distinct_count());
}

VectorColoring optimal_vector_coloring_1wr(const Graph& g, const Spectrum& s) {
  if (g.empty()) throw InvalidArgument("vector coloring of the empty graph");
  const std::size_t n = g.order();
  VectorColoring c;
  if (g.size() == 0) {
    c.backend = Backend::exact;
    c.gram = ExactMatrix::identity(n);
    c.t = Value::integer(1);
    c.strict = true;
    return c;
  }
  require_one_walk_regular(g, s);
  const auto r = static_cast<long>(g.degree(0));
  const auto d = static_cast<long>(s.tau_multiplicity);
  c.backend = s.backend;
  if (s.backend == Backend::exact) {
    mpq_class scale(static_cast<long>(n), d);
    scale.canonicalize();
    c.gram = least_eigenspace_projector(s) * scale;
    c.t = Value(mpq_class(1) - mpq_class(r) / s.tau.exact());
  } else {
    const double scale = static_cast<double>(n) / static_cast<double>(d);
    c.gram_floating = scale * s.tau_basis_floating * s.tau_basis_floating.transpose();
    c.t = Value(1.0 - static_cast<double>(r) / s.tau.approx());
  }
  c.strict = validate_coloring(g, c).status == ColoringStatus::valid_strict;
  return c;
}

VectorColoring optimal_vector_coloring_1wr(const Graph& g, SpectralBackend backend, double tol) {
  return optimal_vector_coloring_1wr(g, graph_spectrum(g, backend, tol));
}

UvcResult is_uniquely_vector_colorable_1wr(const Graph& g, const Spectrum& s) {
  UvcResult out;
  out.optimal = optimal_vector_coloring_1wr(g, s);
  out.numerical = s.backend == Backend::floating;
  if (!g.is_connected()) {
    out.uvc = false;
    out.witness = "graph is disconnected: rotating one component alone gives another optimal coloring";
    return out;
  }
  if (g.size() == 0) {
    out.uvc = true;
    return out;
  }
  const UcVerdict verdict = is_universally_completable(g, s);
  out.x_dim = verdict.x.dim;
  out.uvc = verdict.universally_completable;
  if (out.uvc) return out;

  const Framework lef = least_eigenvalue_framework(g, s);
  const double n_over_d = static_cast<double>(g.order()) / static_cast<double>(s.tau_multiplicity);
  VectorColoring alt;
  alt.backend = s.backend;
  alt.t = out.optimal.t;
  if (s.backend == Backend::exact) {
    const Framework q = dominated_frameworks(lef, verdict.x.basis.front());
    mpq_class scale(static_cast<long>(g.order()), static_cast<long>(s.tau_multiplicity));
    scale.canonicalize();
    alt.gram = q.gram() * scale;
    if (alt.gram == out.optimal.gram) throw InternalError("second coloring coincides with the first");
  } else {
    const Framework q = dominated_frameworks(lef, verdict.x.basis_floating.front());
    alt.gram_floating = n_over_d * q.gram_floating();
    if ((alt.gram_floating - out.optimal.gram_floating).cwiseAbs().maxCoeff() <= 1e-9) {
      throw InternalError("second coloring coincides with the first");
    }
  }
  const ColoringCheck check = validate_coloring(g, alt);
  if (check.status != ColoringStatus::valid_strict) {
    throw InternalError("second coloring is not strict at the optimal value: " + check.reason);
  }
  alt.strict = true;
  out.alternative = std::move(alt);
  out.witness = "X(G) has dimension " + std::to_string(out.x_dim);
  return out;
}

UvcResult is_uniquely_vector_colorable_1wr(const Graph& g, SpectralBackend backend, double tol) {
  return is_uniquely_vector_colorable_1wr(g, graph_spectrum(g, backend, tol));
}

const char* to_string(ColoringStatus status) {
  switch (status) {
    case ColoringStatus::valid:
      return "valid";
    case ColoringStatus::valid_strict:
      return "valid-strict";
    case ColoringStatus::invalid:
      break;
  }
  return "invalid";
}

ColoringCheck validate_coloring(const Graph& g, const ExactMatrix& gram, const mpq_class& t) {
  if (t <= 1) throw InvalidArgument("vector coloring value must exceed 1");
  const std::size_t n = g.order();
  if (gram.rows() != n || gram.cols() != n || !gram.is_symmetric()) {
    throw InvalidArgument("Gram matrix must be symmetric and match the graph");
  }
  ColoringCheck out;
  for (Vertex i = 0; i < n; ++i) {
    if (gram(i, i) != 1) {
      out.at = Edge{i, i};
      out.reason = "diagonal entry " + std::to_string(i) + " is " + format_rational(gram(i, i));
      return out;
    }
  }
  const mpq_class bound = mpq_class(-1) / (t - 1);
  bool strict = true;
  for (const Edge& e : g.edges()) {
    const mpq_class& x = gram(e.u, e.v);
    if (x > bound) {
      out.at = e;
      out.reason = "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " has " + format_rational(x) +
                   " > " + format_rational(bound);
      return out;
    }
    strict = strict && x == bound;
  }
  if (!is_psd_exact(gram)) {
    out.reason = "Gram matrix is not positive semidefinite";
    return out;
  }
  out.status = strict ? ColoringStatus::valid_strict : ColoringStatus::valid;
  return out;
}

ColoringCheck validate_coloring(const Graph& g, const Eigen::MatrixXd& gram, double t, double tol) {
  if (!(t > 1)) throw InvalidArgument("vector coloring value must exceed 1");
  const auto n = static_cast<Eigen::Index>(g.order());
  if (gram.rows() != n || gram.cols() != n || (gram - gram.transpose()).cwiseAbs().maxCoeff() > tol) {
    throw InvalidArgument("Gram matrix must be symmetric and match the graph");
  }
  ColoringCheck out;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(gram(i, i) - 1.0) > tol) {
      out.at = Edge{static_cast<Vertex>(i), static_cast<Vertex>(i)};
      out.reason = "diagonal entry " + std::to_string(i) + " is " + format_double(gram(i, i));
      return out;
    }
  }
  const double bound = -1.0 / (t - 1.0);
  bool strict = true;
  for (const Edge& e : g.edges()) {
    const double x = gram(e.u, e.v);
    if (x > bound + tol) {
      out.at = e;
      out.reason = "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " has " + format_double(x) +
                   " > " + format_double(bound);
      return out;
    }
    strict = strict && std::abs(x - bound) <= tol;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram, Eigen::EigenvaluesOnly);
  if (es.eigenvalues()(0) < -tol) {
    out.reason = "Gram matrix is not positive semidefinite";
    return out;
  }
  out.status = strict ? ColoringStatus::valid_strict : ColoringStatus::valid;
  return out;
}

ColoringCheck validate_coloring(const Graph& g, const VectorColoring& c) {
  if (g.size() == 0) {
    // Value 1: only the unit diagonal and PSD constraints remain.
    ColoringCheck out;
    const bool exact = c.backend == Backend::exact;
    const Eigen::MatrixXd m = exact ? c.gram.to_double() : c.gram_floating;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (exact ? c.gram(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) != 1
                : std::abs(m(i, i) - 1.0) > 1e-9) {
        out.at = Edge{static_cast<Vertex>(i), static_cast<Vertex>(i)};
        out.reason = "diagonal entry is not 1";
        return out;
      }
    }
    if (exact ? !is_psd_exact(c.gram) : Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m).eigenvalues()(0) < -1e-9) {
      out.reason = "Gram matrix is not positive semidefinite";
      return out;
    }
    out.status = ColoringStatus::valid_strict;
    return out;
  }
  if (c.backend == Backend::exact && c.t.is_exact()) return validate_coloring(g, c.gram, c.t.exact());
  const Eigen::MatrixXd m = c.backend == Backend::exact ? c.gram.to_double() : c.gram_floating;
  return validate_coloring(g, m, c.t.approx());
}

Graph struts_tensegrity(const Graph& g) { return g.with_uniform_label(EdgeLabel::strut); }

std::string gram_digest(const VectorColoring& c) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : gram_text(c)) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

nlohmann::json coloring_json(const Graph& g, const UvcResult& result) {
  nlohmann::json out;
  out["graph6"] = emit_graph6(g);
  out["t"] = value_json(result.optimal.t);
  out["strict"] = result.optimal.strict;
  out["uvc"] = result.uvc;
  out["x_dim"] = result.x_dim;
  out["gram_digest"] = gram_digest(result.optimal);
  out["backend"] = to_string(result.optimal.backend);
  if (!result.witness.empty()) out["witness"] = result.witness;
  if (result.alternative) {
    const VectorColoring& alt = *result.alternative;
    nlohmann::json second;
    second["t"] = value_json(alt.t);
    second["gram"] = gram_json(alt);
    second["gram_digest"] = gram_digest(alt);
    second["validation"] = to_string(validate_coloring(g, alt).status);
    out["second_coloring"] = std::move(second);
  }
  return out;
}

}  // namespace eigenframe
