#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eigenframe/cli/reports.hpp"
#include "eigenframe/exactla/spectrum.hpp"

namespace eigenframe::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kUnsupported = 2, kInternal = 3 };

struct RunConfig {
  std::string command;
  std::optional<std::string> gen;
  std::optional<std::string> graph6;
  std::optional<std::string> graph6_file;
  std::optional<std::string> cayley;
  SpectralBackend backend = SpectralBackend::automatic;
  double tol = kDefaultEigenTolerance;
  std::optional<Format> format;
  unsigned workers = 1;
  std::optional<std::string> out_path;
  int survey_n = 0;
  std::size_t basis_index = 0;
  std::optional<std::string> scale;
};

/// Runs one command line (without the program name). Reports go to `out` (or
/// --out), diagnostics and warnings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eigenframe::cli
