#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "eigenframe/error.hpp"
#include "eigenframe/graphcore/generators.hpp"
#include "eigenframe/survey/orbits.hpp"
#include "eigenframe/survey/survey.hpp"
#include "support/oracles.hpp"

using namespace eigenframe;

namespace {

ConnectionMask brute_min(const std::vector<std::vector<std::uint32_t>>& group, ConnectionMask mask) {
  ConnectionMask best = mask;
  for (const auto& m : group) {
    const ConnectionMask img = oracle::apply_to_mask(m, mask);
    if (lex_less(img, best)) best = img;
  }
  return best;
}

bool spanning(int n, ConnectionMask mask) { return gf2_rank(mask_elements(mask)) == n; }

}  // namespace

TEST_CASE("mask helpers") {
  CHECK(mask_elements(0b10110) == std::vector<std::uint32_t>{1, 2, 4});
  CHECK(elements_mask({1, 2, 4}) == 0b10110U);
  CHECK(lex_less(elements_mask({1, 2}), elements_mask({1, 3})));
  CHECK_FALSE(lex_less(elements_mask({1, 3}), elements_mask({1, 2})));
  CHECK_FALSE(lex_less(elements_mask({1, 3}), elements_mask({1, 3})));
}

TEST_CASE("orbit counts for small n") {
  CHECK(enumerate_orbits(1).size() == 1);
  const auto two = enumerate_orbits(2);
  REQUIRE(two.size() == 2);
  CHECK(mask_elements(two[0]) == std::vector<std::uint32_t>{1, 2});
  CHECK(mask_elements(two[1]) == std::vector<std::uint32_t>{1, 2, 3});
  CHECK(enumerate_orbits(3).size() == 6);
  CHECK(enumerate_orbits(4).size() == 36);
  CHECK_THROWS_AS(enumerate_orbits(6), Unsupported);
  CHECK_THROWS_AS(enumerate_orbits(0), InvalidArgument);
}

TEST_CASE("canonical form is the brute-force orbit minimum") {
  for (int n = 1; n <= 3; ++n) {
    const auto group = oracle::gl2(n);
    for (ConnectionMask m = 0; m < (1U << (1U << n)); m += 2) CHECK(canonical_form(n, m) == brute_min(group, m));
  }
  const auto g4 = oracle::gl2(4);
  REQUIRE(g4.size() == 20160);
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<std::uint32_t> any(0, 0xFFFF);
  for (int t = 0; t < 40; ++t) {
    const ConnectionMask m = any(rng) & ~1U;
    CHECK(canonical_form(4, m) == brute_min(g4, m));
  }
  const ConnectionMask m5 = static_cast<ConnectionMask>(rng()) & ~1U;
  ConnectionMask best = m5;
  std::size_t order = 0;
  oracle::for_each_gl2(5, [&](const std::vector<std::uint32_t>& cols) {
    ++order;
    const ConnectionMask img = oracle::apply_to_mask(cols, m5);
    if (lex_less(img, best)) best = img;
  });
  CHECK(order == 9999360);
  CHECK(canonical_form(5, m5) == best);
}

TEST_CASE("n = 4 orbit representatives cover every spanning set exactly once") {
  const auto group = oracle::gl2(4);
  const auto reps = enumerate_orbits(4);
  std::size_t covered = 0;
  std::set<ConnectionMask> seen;
  for (const ConnectionMask r : reps) {
    CHECK(spanning(4, r));
    std::set<ConnectionMask> orbit;
    for (const auto& m : group) orbit.insert(oracle::apply_to_mask(m, r));
    CHECK(*std::min_element(orbit.begin(), orbit.end(), lex_less) == r);
    for (const ConnectionMask o : orbit) CHECK(seen.insert(o).second);
    covered += orbit.size();
  }
  std::size_t spanning_sets = 0;
  for (ConnectionMask m = 0; m < (1U << 16); m += 2) spanning_sets += spanning(4, m);
  CHECK(covered == spanning_sets);
}

TEST_CASE("orbit order is size then lex") {
  const auto reps = enumerate_orbits(4);
  for (std::size_t i = 1; i < reps.size(); ++i) {
    const int a = std::popcount(reps[i - 1]), b = std::popcount(reps[i]);
    CHECK(a <= b);
    if (a == b) CHECK(lex_less(reps[i - 1], reps[i]));
  }
}

TEST_CASE("augmentation reaches every orbit for n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    const auto all = enumerate_all_orbits_by_augmentation(n);
    std::vector<ConnectionMask> span;
    for (const ConnectionMask m : all)
      if (spanning(n, m)) span.push_back(m);
    CHECK(span == enumerate_orbits(n));
  }
  const auto group = oracle::gl2(3);
  std::set<ConnectionMask> mins;
  for (ConnectionMask m = 0; m < 256; m += 2) mins.insert(brute_min(group, m));
  CHECK(enumerate_all_orbits_by_augmentation(3).size() == mins.size());
}

TEST_CASE("survey counts for n <= 4") {
  const int connected[] = {1, 2, 6, 36};
  const int uc[] = {1, 2, 6, 34};
  for (int n = 1; n <= 4; ++n) {
    const SurveyReport r = run_survey(n, 2);
    CHECK(r.connected == static_cast<std::size_t>(connected[n - 1]));
    CHECK(r.uc == static_cast<std::size_t>(uc[n - 1]));
  }
  const SurveyReport one = run_survey(1);
  REQUIRE(one.records.size() == 1);
  CHECK(one.records[0].tau == -1);
  CHECK(one.records[0].connection_set == std::vector<std::uint32_t>{1});
}

TEST_CASE("survey is independent of the worker count") {
  const SurveyReport a = run_survey(3, 1), b = run_survey(3, 3);
  CHECK(survey_csv(a) == survey_csv(b));
}

TEST_CASE("survey records") {
  const SurveyRecord k4 = survey_record(2, elements_mask({1, 2, 3}));
  CHECK(k4.connected);
  CHECK(k4.tau == -1);
  CHECK(k4.tau_multiplicity == 3);
  CHECK(k4.uc);
  const SurveyRecord disc = survey_record(3, elements_mask({1, 2}));
  CHECK_FALSE(disc.connected);
}

TEST_CASE("survey reports") {
  const SurveyReport r = run_survey(2);
  const std::string csv = survey_csv(r);
  CHECK(csv.rfind("# ", 0) == 0);
  CHECK(csv.find("n,connection_set,connected,tau,tau_mult,x_dim,uc") != std::string::npos);
  CHECK(csv.find("2,0x01 0x02,true,-2,1,") != std::string::npos);
  CHECK(survey_summary(r) == "n=2: 2 connected, 2 UC");
  const auto j = survey_json(r);
  CHECK(j["convention"] == kSurveyConvention);
  CHECK(j["orbits"].size() == 2);
  CHECK(j["summary"]["connected"] == 2);
}
