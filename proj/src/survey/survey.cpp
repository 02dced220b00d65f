#include "eigenframe/survey/survey.hpp"

#include <atomic>
#include <cstdio>
#include <sstream>
#include <thread>

#include "eigenframe/exactla/spectrum.hpp"
#include "eigenframe/graphcore/generators.hpp"
#include "eigenframe/uccheck/xspace.hpp"

namespace eigenframe {
namespace {

std::string hex_list(const std::vector<std::uint32_t>& set, char sep) {
  std::string out;
  char buf[16];
  for (std::size_t i = 0; i < set.size(); ++i) {
    std::snprintf(buf, sizeof buf, "0x%02x", set[i]);
    if (i) out += sep;
    out += buf;
  }
  return out;
}

}  // namespace

SurveyRecord survey_record(int n, ConnectionMask mask) {
  SurveyRecord r;
  r.n = n;
  r.connection_set = mask_elements(mask);
  r.connected = gf2_rank(r.connection_set) == n;
  const CayleySpec spec{n, r.connection_set};
  const Graph g = cayley_z2(spec);
  const Spectrum s = cayley_spectrum(spec);
  r.tau = s.tau.exact().get_num().get_si();
  r.tau_multiplicity = s.tau_multiplicity;
  const UcVerdict v = is_universally_completable(g, s);
  r.x_dim = v.x.dim;
  r.uc = v.universally_completable;
  return r;
}

SurveyReport run_survey(int n, unsigned workers) {
  workers = std::max(1u, workers);
  const auto reps = enumerate_orbits(n, workers);
  SurveyReport report;
  report.n = n;
  report.records.resize(reps.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < reps.size(); i = next++) report.records[i] = survey_record(n, reps[i]);
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (const auto& r : report.records) {
    report.connected += r.connected;
    report.uc += r.connected && r.uc;
  }
  return report;
}

std::string survey_csv(const SurveyReport& report) {
  std::ostringstream out;
  out << "# " << kSurveyConvention << "\n";
  out << "n,connection_set,connected,tau,tau_mult,x_dim,uc\n";
  for (const auto& r : report.records) {
    out << r.n << ',' << hex_list(r.connection_set, ' ') << ',' << (r.connected ? "true" : "false") << ','
        << r.tau << ',' << r.tau_multiplicity << ',' << r.x_dim << ',' << (r.uc ? "true" : "false") << '\n';
  }
  return out.str();
}

nlohmann::json survey_json(const SurveyReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.records) {
    nlohmann::json row;
    row["n"] = r.n;
    nlohmann::json set = nlohmann::json::array();
    char buf[16];
    for (std::uint32_t v : r.connection_set) {
      std::snprintf(buf, sizeof buf, "0x%02x", v);
      set.push_back(buf);
    }
    row["connection_set"] = std::move(set);
    row["connected"] = r.connected;
    row["tau"] = r.tau;
    row["tau_mult"] = r.tau_multiplicity;
    row["x_dim"] = r.x_dim;
    row["uc"] = r.uc;
    rows.push_back(std::move(row));
  }
  nlohmann::json out;
  out["convention"] = kSurveyConvention;
  out["summary"] = {{"n", report.n}, {"connected", report.connected}, {"uc", report.uc}};
  out["orbits"] = std::move(rows);
  return out;
}

std::string survey_summary(const SurveyReport& report) {
  return "n=" + std::to_string(report.n) + ": " + std::to_string(report.connected) + " connected, " +
         std::to_string(report.uc) + " UC";
}

}  // namespace eigenframe
