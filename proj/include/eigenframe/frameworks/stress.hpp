#pragma once

#include <string>

#include "eigenframe/exactla/exact_matrix.hpp"
#include "eigenframe/exactla/spectrum.hpp"
#include "eigenframe/frameworks/framework.hpp"

namespace eigenframe {

/// The five conditions for Z to be a spherical stress matrix of a framework.
struct StressConditions {
  bool psd = false;              // (i)
  bool supported_on_edges = false;  // (ii)
  bool edge_signs = false;       // (iii) >= 0 on struts, <= 0 on cables
  bool annihilates = false;      // (iv) ZP = 0
  bool corank_matches = false;   // (v) cor Z = dim span p
  std::size_t corank = 0;
  std::size_t span_dimension = 0;

  bool all() const { return psd && supported_on_edges && edge_signs && annihilates && corank_matches; }
  /// First failing condition, empty if none.
  std::string first_failure() const;
};

/// Exact framework only.
StressConditions check_stress(const Framework& p, const ExactMatrix& z);

struct StressMatrix {
  ExactMatrix z;
  StressConditions conditions;
};

/// Z = A - tau I, checked against the generalized least eigenvalue framework
/// spanned by the spectrum's tau basis. Throws Unsupported when g has cables or
/// tau is not exact, InternalError if a condition fails.
StressMatrix canonical_stress(const Graph& g, const Spectrum& spectrum);

}  // namespace eigenframe
