#include <doctest.h>

#include <string>

#include "support/invariants.hpp"

namespace {

void report(const invariants::Outcome& o) {
  for (const std::string& f : o.failures) MESSAGE(f);
  CHECK(o.failures.empty());
}

}  // namespace

TEST_CASE("random runs keep every invariant") {
  const auto o = invariants::random_runs(7, 120);
  CHECK(o.runs == 120);
  CHECK(o.exact_runs > 40);
  report(o);
}

TEST_CASE("1-walk-regular projector constants") {
  const auto o = invariants::walk_regular_constants();
  CHECK(o.runs == 20);
  report(o);
}

TEST_CASE("dim X matches the brute-force system on small connected graphs") {
  const auto o = invariants::xspace_brute_force(EIGENFRAME_TEST_DATA "/connected_le7.g6");
  CHECK(o.runs > 100);
  report(o);
}

TEST_CASE("sufficient conditions are sound") { report(invariants::sufficient_conditions(5, 40)); }
