#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "eigenframe/survey/orbits.hpp"

namespace eigenframe {

/// Equivalence used by the survey, stated in every report.
inline constexpr const char* kSurveyConvention =
    "Cayley graphs on Z_2^n up to GL(n,2)-equivalence of connection sets";

struct SurveyRecord {
  int n = 0;
  std::vector<std::uint32_t> connection_set;  // canonical representative, ascending
  bool connected = false;
  long tau = 0;
  std::size_t tau_multiplicity = 0;
  std::size_t x_dim = 0;
  bool uc = false;
};

struct SurveyReport {
  int n = 0;
  std::vector<SurveyRecord> records;
  std::size_t connected = 0;
  std::size_t uc = 0;
};

/// One record per orbit of spanning connection sets, in enumeration order.
/// `workers` threads share the orbit list; the result does not depend on it.
SurveyReport run_survey(int n, unsigned workers = 1);

/// Record for a single connection set (not canonicalized).
SurveyRecord survey_record(int n, ConnectionMask mask);

/// Convention comment, header row, then one row per orbit:
/// n,connection_set,connected,tau,tau_mult,x_dim,uc.
std::string survey_csv(const SurveyReport& report);
nlohmann::json survey_json(const SurveyReport& report);
/// "n=4: 36 connected, 34 UC".
std::string survey_summary(const SurveyReport& report);

}  // namespace eigenframe
