#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "eigenframe/cli/commands.hpp"
#include "eigenframe/cli/generator_spec.hpp"
#include "eigenframe/cli/reports.hpp"
#include "eigenframe/error.hpp"
#include "eigenframe/graphcore/generators.hpp"
#include "eigenframe/graphcore/graph6.hpp"

using namespace eigenframe;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST_CASE("generator specs") {
  CHECK(cli::generate("cycle:5") == cycle(5));
  CHECK(cli::generate("complete:4") == complete_graph(4));
  CHECK(cli::generate("bipartite:2,3") == complete_bipartite(2, 3));
  CHECK(cli::generate("kneser:5,2") == kneser(5, 2));
  CHECK(cli::generate("petersen") == kneser(5, 2));
  CHECK(cli::generate("qkneser:2,4,2").order() == 35);
  CHECK(cli::generate("hypercube:3") == hypercube(3));
  CHECK(cli::generate("cayley:2:01,10") == cayley_z2({2, {1, 2}}));
  const CayleySpec s = cli::parse_cayley("3:001,110");
  CHECK(s.n == 3);
  CHECK(s.connection_set == std::vector<std::uint32_t>{1, 6});
  CHECK_THROWS_AS(cli::generate("nonsense:1"), InvalidArgument);
  CHECK_THROWS_AS(cli::generate("cycle:x"), InvalidArgument);
  CHECK_THROWS_AS(cli::parse_cayley("2:012"), InvalidArgument);
  CHECK_THROWS_AS(cli::parse_cayley("2:1"), InvalidArgument);
}

TEST_CASE("report rendering") {
  const std::vector<json> rows{{{"a", 1}, {"b", {{"c", "x"}}}}, {{"a", 22}, {"b", {{"c", nullptr}}}}};
  CHECK(cli::render(rows, {"a", "b.c"}, cli::Format::csv) == "a,b.c\n1,x\n22,\n");
  const std::string table = cli::render(rows, {"a", "b.c"}, cli::Format::table);
  CHECK(table.find("22") != std::string::npos);
  CHECK(cli::render(rows, {"a"}, cli::Format::json).find("\"c\":\"x\"") != std::string::npos);
  CHECK(cli::parse_format("csv") == cli::Format::csv);
  CHECK_THROWS_AS(cli::parse_format("xml"), InvalidArgument);
}

TEST_CASE("check-uc") {
  const Result c5 = run({"check-uc", "--gen", "cycle:5"});
  CHECK(c5.code == 0);
  const json j = json::parse(c5.out);
  CHECK(j["verdict"] == "UC");
  CHECK(j["backend"] == "floating");
  CHECK(j["tau"].get<double>() == doctest::Approx(-1.6180339887).epsilon(1e-9));
  CHECK(c5.err.find("warning") != std::string::npos);

  const Result pet = run({"check-uc", "--gen", "kneser:5,2"});
  CHECK(pet.code == 0);
  const json jp = json::parse(pet.out);
  CHECK(jp["verdict"] == "UC");
  CHECK(jp["tau"] == "-2");
  CHECK(jp["backend"] == "exact");

  const auto empty = temp_file("eigenframe_empty.g6", "");
  const Result none = run({"check-uc", "--graph6-file", empty.string()});
  CHECK(none.code == 1);
  CHECK(none.err.find("no graphs read") != std::string::npos);

  const auto two = temp_file("eigenframe_two.g6", "Bw\nCr\n");
  const Result many = run({"check-uc", "--graph6-file", two.string(), "--format", "csv"});
  CHECK(many.code == 0);
  CHECK(std::count(many.out.begin(), many.out.end(), '\n') == 3);

  CHECK(run({"check-uc", "--graph6", "B\x01"}).code == 1);
  CHECK(run({"check-uc", "--gen", "cycle:5", "--backend", "exact"}).code == 2);
  CHECK(run({"check-uc"}).code == 1);
  CHECK(run({"bogus"}).code == 1);
}

TEST_CASE("vc") {
  const Result pet = run({"vc", "--gen", "kneser:5,2"});
  CHECK(pet.code == 0);
  const json j = json::parse(pet.out);
  CHECK(j["t"] == "5/2");
  CHECK(j["uvc"] == true);

  const Result q = run({"vc", "--gen", "qkneser:2,4,2"});
  CHECK(q.code == 0);
  const json jq = json::parse(q.out);
  CHECK(jq["uvc"] == false);
  CHECK(jq["second_coloring"]["validation"] == "valid-strict");

  const Result star = run({"vc", "--gen", "bipartite:1,3"});
  CHECK(star.code == 2);
  CHECK_FALSE(star.err.empty());
}

TEST_CASE("gen and dominated") {
  const Result c4 = run({"gen", "--cayley", "2:01,10"});
  CHECK(c4.code == 0);
  // C4 with edges 01, 02, 13, 23: bits 1,1,0,0,1,1 -> 51 -> 'r'
  CHECK(c4.out == "Cr\n");
  CHECK(parse_graph6("Cr") == cayley_z2({2, {1, 2}}));

  // 2K2: bits 1,0,0,0,0,1 -> 33 -> '`'
  const Result d = run({"dominated", "--graph6", "C`"});
  CHECK(d.code == 0);
  const json jd = json::parse(d.out);
  CHECK(jd["x_dim"] == 1);
  CHECK(jd["dominated"]["n"] == 4);

  const Result scaled = run({"dominated", "--graph6", "C`", "--scale", "1/4"});
  CHECK(scaled.code == 0);
  CHECK(json::parse(scaled.out)["dominated"]["gram"] != jd["dominated"]["gram"]);
}

TEST_CASE("survey command") {
  const Result s3 = run({"survey", "--n", "3"});
  CHECK(s3.code == 0);
  CHECK(s3.out.find("6 connected, 6 UC") != std::string::npos);

  const auto path = std::filesystem::temp_directory_path() / "eigenframe_survey.csv";
  const Result s4 = run({"survey", "--n", "4", "--format", "csv", "--out", path.string(), "--workers", "2"});
  CHECK(s4.code == 0);
  CHECK(s4.out.find("36 connected, 34 UC") != std::string::npos);
  std::ifstream in(path);
  std::string first, header;
  std::getline(in, first);
  std::getline(in, header);
  CHECK(first.rfind("# ", 0) == 0);
  CHECK(header == "n,connection_set,connected,tau,tau_mult,x_dim,uc");

  CHECK(run({"survey", "--n", "7"}).code == 2);
  CHECK(run({"survey"}).code == 1);
}
