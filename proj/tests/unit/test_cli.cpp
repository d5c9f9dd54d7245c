#include <doctest.h>

#include <filesystem>
#include <string>
#include <vector>

#include "cli.hpp"
#include "tancurve/io.hpp"

namespace fs = std::filesystem;
using namespace tancurve;

namespace {

int run(std::vector<std::string> args) {
  args.insert(args.begin(), "tancurve");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "tancurve_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("reconstruct a synthesized circle") {
  const auto fig = scratch("circle.json");
  const auto graph = scratch("circle.graph.json");
  const auto report = scratch("circle.report.json");
  REQUIRE(run({"synth", "--family", "circle", "--epsilon", "0.2", "--seed", "3", "--out", fig.string()}) == kExitOk);
  REQUIRE(run({"reconstruct", "--input", fig.string(), "--out-graph", graph.string(), "--out-report",
               report.string()}) == kExitOk);
  const auto [samples, g] = graph_from_json(read_json_file(graph));
  const std::size_t n = samples.size();
  CHECK(g.edge_count() == n);
  for (std::size_t d : g.degrees()) CHECK(d == 2);
  for (Index i = 0; i < n; ++i) CHECK(g.has_edge(i, static_cast<Index>((i + 1) % n)));
  const auto rep = read_json_file(report);
  CHECK(rep["truth"]["exact"] == true);

  // Same input, same bytes.
  const auto graph2 = scratch("circle.graph2.json");
  REQUIRE(run({"reconstruct", "--input", fig.string(), "--out-graph", graph2.string(), "--out-report",
               scratch("r2.json").string()}) == kExitOk);
  CHECK(read_text_file(graph) == read_text_file(graph2));

  const auto svg1 = scratch("a.svg"), svg2 = scratch("b.svg");
  REQUIRE(run({"render", "--input", graph.string(), "--truth", fig.string(), "--ticks", "0.01", "--out-svg",
               svg1.string()}) == kExitOk);
  REQUIRE(run({"render", "--input", graph.string(), "--truth", fig.string(), "--ticks", "0.01", "--out-svg",
               svg2.string()}) == kExitOk);
  CHECK(read_text_file(svg1) == read_text_file(svg2));
}

TEST_CASE("strict validation exit code") {
  const auto csv = scratch("line.csv");
  write_text_file(csv, "x,y,tx,ty\n0,0,1,0\n0.05,0,1,0\n0.1,0,1,0\n");
  CHECK(run({"reconstruct", "--input", csv.string(), "--epsilon", "0.065", "--kappa", "3", "--delta", "0.015",
             "--strict", "--out-graph", scratch("s.graph.json").string(), "--out-report",
             scratch("s.report.json").string()}) == kExitValidation);
  CHECK(run({"reconstruct", "--input", csv.string(), "--epsilon", "0.065", "--kappa", "3", "--delta", "0.015",
             "--out-graph", scratch("s.graph.json").string(), "--out-report", scratch("s.report.json").string()}) ==
        kExitOk);
  CHECK(run({"reconstruct", "--input", csv.string(), "--epsilon", "0.1", "--kappa", "1", "--mode", "noisy",
             "--strict", "--out-graph", scratch("s.graph.json").string(), "--out-report",
             scratch("s.report.json").string()}) == kExitValidation);
}

TEST_CASE("input errors exit with code two") {
  CHECK(run({"reconstruct", "--input", scratch("missing.csv").string(), "--epsilon", "0.1", "--kappa", "1"}) ==
        kExitInput);
  const auto bad = scratch("bad.csv");
  write_text_file(bad, "0,0,0,0\n");
  CHECK(run({"reconstruct", "--input", bad.string(), "--epsilon", "0.1", "--kappa", "1"}) == kExitInput);
  const auto ok = scratch("ok.csv");
  write_text_file(ok, "0,0,1,0\n");
  CHECK(run({"reconstruct", "--input", ok.string()}) == kExitInput);
  CHECK(run({"reconstruct", "--input", ok.string(), "--epsilon", "-1", "--kappa", "1"}) == kExitInput);
  CHECK(run({"frobnicate"}) == kExitInput);
}

TEST_CASE("render of an empty graph") {
  const auto csv = scratch("pts.csv");
  write_text_file(csv, "0,0,1,0\n1,1,0,1\n2,0,1,1\n");
  const auto svg = scratch("empty.svg");
  REQUIRE(run({"render", "--input", csv.string(), "--out-svg", svg.string()}) == kExitOk);
  const std::string text = read_text_file(svg);
  CHECK(text.find("<svg") == 0);
  CHECK(text.find("<line") == std::string::npos);
  CHECK(text.find("<circle") != std::string::npos);
}

TEST_CASE("synth from a spec file writes csv") {
  const auto spec = scratch("spec.json");
  write_text_file(spec, R"({"curves":[{"type":"oval","center":[0,0],"half_width":0.6,"half_height":0.4}],
                           "kappa_max":2.5,"epsilon":0.1,"seed":2})");
  const auto csv = scratch("oval.csv");
  REQUIRE(run({"synth", "--spec", spec.string(), "--out", scratch("oval.json").string(), "--out-csv", csv.string()}) ==
          kExitOk);
  CHECK(parse_samples_csv(read_text_file(csv)).size() > 20);
}
