#include "eigenframe/cli/commands.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "eigenframe/cli/generator_spec.hpp"
#include "eigenframe/error.hpp"
#include "eigenframe/frameworks/framework.hpp"
#include "eigenframe/graphcore/graph6.hpp"
#include "eigenframe/survey/survey.hpp"
#include "eigenframe/uccheck/phi.hpp"
#include "eigenframe/uccheck/xspace.hpp"
#include "eigenframe/vectorcolor/vector_coloring.hpp"

namespace eigenframe::cli {
namespace {

class IoError : public Error {
 public:
  using Error::Error;
};

unsigned default_workers() {
  if (const char* env = std::getenv("EIGENFRAME_WORKERS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

std::vector<Graph> read_inputs(const RunConfig& cfg) {
  const int sources = cfg.gen.has_value() + cfg.graph6.has_value() + cfg.graph6_file.has_value() +
                      cfg.cayley.has_value();
  if (sources != 1) throw InvalidArgument("give exactly one of --gen, --graph6, --graph6-file, --cayley");
  if (cfg.gen) return {generate(*cfg.gen)};
  if (cfg.cayley) return {cayley_z2(parse_cayley(*cfg.cayley))};
  if (cfg.graph6) {
    std::istringstream in(*cfg.graph6);
    auto graphs = read_graph6_stream(in);
    if (graphs.empty()) throw IoError("no graphs read");
    return graphs;
  }
  std::ifstream in(*cfg.graph6_file);
  if (!in) throw IoError("cannot open '" + *cfg.graph6_file + "'");
  auto graphs = read_graph6_stream(in);
  if (graphs.empty()) throw IoError("no graphs read from '" + *cfg.graph6_file + "'");
  return graphs;
}

Spectrum spectrum_for(const Graph& g, const RunConfig& cfg, std::ostream& err) {
  Spectrum s = graph_spectrum(g, cfg.backend, cfg.tol);
  if (cfg.backend == SpectralBackend::automatic && s.backend == Backend::floating) {
    err << "warning: least eigenvalue of " << emit_graph6(g)
        << " is not an integer; using the floating backend (verdict is numerical)\n";
  }
  return s;
}

std::string cmd_check_uc(const RunConfig& cfg, std::ostream& err) {
  std::vector<nlohmann::json> records;
  for (const Graph& g : read_inputs(cfg)) {
    if (g.has_cables()) throw Unsupported("graph has cables");
    records.push_back(verdict_json(g, is_universally_completable(g, spectrum_for(g, cfg, err))));
  }
  return render(records,
                {"graph6", "tau", "tau_mult", "x_dim", "verdict", "backend", "sv_margin", "conditions.neighborhood",
                 "conditions.clique", "conditions.split"},
                cfg.format.value_or(Format::json));
}

std::string cmd_vc(const RunConfig& cfg, std::ostream& err) {
  std::vector<nlohmann::json> records;
  for (const Graph& g : read_inputs(cfg)) {
    records.push_back(coloring_json(g, is_uniquely_vector_colorable_1wr(g, spectrum_for(g, cfg, err))));
  }
  return render(records, {"graph6", "t", "strict", "uvc", "x_dim", "gram_digest", "backend"},
                cfg.format.value_or(Format::json));
}

std::string cmd_dominated(const RunConfig& cfg, std::ostream& err) {
  std::vector<nlohmann::json> records;
  for (const Graph& g : read_inputs(cfg)) {
    const Spectrum s = spectrum_for(g, cfg, err);
    const Framework lef = least_eigenvalue_framework(g, s);
    const XSpaceBasis x = xspace(g, s);
    nlohmann::json rec;
    rec["graph6"] = emit_graph6(g);
    rec["x_dim"] = x.dim;
    rec["lef"] = framework_json(lef);
    rec["dominated"] = nullptr;
    if (x.dim > 0) {
      if (cfg.basis_index >= x.dim) throw InvalidArgument("--index exceeds dim X(G)");
      if (s.backend == Backend::exact) {
        std::optional<mpq_class> c;
        if (cfg.scale) c = parse_rational(*cfg.scale);
        rec["dominated"] = framework_json(dominated_frameworks(lef, x.basis[cfg.basis_index], c));
      } else {
        std::optional<double> c;
        if (cfg.scale) c = parse_rational(*cfg.scale).get_d();
        rec["dominated"] = framework_json(dominated_frameworks(lef, x.basis_floating[cfg.basis_index], c));
      }
    }
    records.push_back(std::move(rec));
  }
  return render(records, {"graph6", "x_dim"}, cfg.format.value_or(Format::json));
}

std::string cmd_gen(const RunConfig& cfg) {
  std::string out;
  for (const Graph& g : read_inputs(cfg)) out += emit_graph6(g) + "\n";
  return out;
}

std::string cmd_survey(const RunConfig& cfg, std::ostream& out) {
  const SurveyReport report = run_survey(cfg.survey_n, cfg.workers);
  const Format f = cfg.format.value_or(Format::table);
  if (f == Format::table) {
    std::ostringstream s;
    s << "# " << kSurveyConvention << "\n"
      << "n  connected  uc\n"
      << report.n << "  " << report.connected << "  " << report.uc << "\n"
      << survey_summary(report) << "\n";
    return s.str();
  }
  if (cfg.out_path) out << survey_summary(report) << "\n";
  return f == Format::csv ? survey_csv(report) : survey_json(report).dump(2) + "\n";
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (!cfg.out_path) {
    out << text;
    return;
  }
  std::ofstream file(*cfg.out_path, std::ios::binary);
  if (!file) throw IoError("cannot write '" + *cfg.out_path + "'");
  file << text;
  if (!file) throw IoError("write to '" + *cfg.out_path + "' failed");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.workers = default_workers();
  std::string backend = "auto", format;

  CLI::App app{"Least eigenvalue frameworks, universal completability and vector colorings"};
  app.require_subcommand(1);
  auto input_options = [&](CLI::App* sub) {
    sub->add_option("--gen", cfg.gen, "generator spec, e.g. cycle:5, kneser:5,2, cayley:2:01,10");
    sub->add_option("--graph6", cfg.graph6, "inline graph6 string(s)");
    sub->add_option("--graph6-file", cfg.graph6_file, "file with one graph6 string per line");
    sub->add_option("--cayley", cfg.cayley, "Cayley graph on Z_2^n, e.g. 2:01,10");
  };
  auto common_options = [&](CLI::App* sub) {
    sub->add_option("--backend", backend, "auto, exact or floating")->check(CLI::IsMember({"auto", "exact", "floating"}));
    sub->add_option("--tol", cfg.tol, "eigenvalue clustering tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--out", cfg.out_path, "write the report to this file");
  };

  auto* check = app.add_subcommand("check-uc", "universal completability of least eigenvalue frameworks");
  input_options(check);
  common_options(check);
  auto* vc = app.add_subcommand("vc", "optimal vector coloring and uniqueness (1-walk-regular graphs)");
  input_options(vc);
  common_options(vc);
  auto* dominated = app.add_subcommand("dominated", "a framework dominated by the least eigenvalue framework");
  input_options(dominated);
  common_options(dominated);
  dominated->add_option("--index", cfg.basis_index, "which basis element of X(G) to use");
  dominated->add_option("--scale", cfg.scale, "scale c (rational); default 1/max row sum");
  auto* gen = app.add_subcommand("gen", "emit graph6");
  input_options(gen);
  gen->add_option("--out", cfg.out_path, "write to this file");
  auto* survey = app.add_subcommand("survey", "Cayley graphs on Z_2^n: connected orbits and UC counts");
  survey->add_option("--n", cfg.survey_n, "dimension n (1..5)")->required();
  common_options(survey);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, eo;
    const int code = app.exit(e, o, eo);
    out << o.str();
    err << eo.str();
    return code == 0 ? kOk : kInputError;
  }

  try {
    cfg.backend = backend == "exact"      ? SpectralBackend::exact
                  : backend == "floating" ? SpectralBackend::floating
                                          : SpectralBackend::automatic;
    if (!format.empty()) cfg.format = parse_format(format);
    if (check->parsed()) {
      emit(cfg, cmd_check_uc(cfg, err), out);
    } else if (vc->parsed()) {
      emit(cfg, cmd_vc(cfg, err), out);
    } else if (dominated->parsed()) {
      emit(cfg, cmd_dominated(cfg, err), out);
    } else if (gen->parsed()) {
      emit(cfg, cmd_gen(cfg), out);
    } else if (survey->parsed()) {
      emit(cfg, cmd_survey(cfg, out), out);
    }
    return kOk;
  } catch (const Unsupported& e) {
    err << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const PreconditionViolation& e) {
    err << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace eigenframe::cli
