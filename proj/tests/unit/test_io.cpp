#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <random>

#include "tancurve/io.hpp"
#include "tancurve/pipeline.hpp"
#include "tancurve/render.hpp"
#include "tancurve/validate.hpp"

using namespace tancurve;

TEST_CASE("csv rows") {
  auto s = parse_samples_csv("0,0,1,0\n");
  REQUIRE(s.size() == 1);
  CHECK(s[0].pos == Vec2{0, 0});
  CHECK(s[0].tangent.dir() == Vec2{1, 0});
  CHECK(s[0].id == 0);

  s = parse_samples_csv("x,y,tx,ty\r\n0,0,-2,0\r\n 1.5 , -2e-3 ,0,-1\n\n");
  REQUIRE(s.size() == 2);
  CHECK(s[0].tangent.dir() == Vec2{1, 0});
  CHECK(s[1].pos == Vec2{1.5, -2e-3});
  CHECK(s[1].tangent.dir() == Vec2{0, 1});
  CHECK(s[1].id == 1);
}

TEST_CASE("csv errors carry line numbers") {
  auto line_of = [](const char* text) {
    try {
      parse_samples_csv(text);
    } catch (const FormatError& e) {
      return e.line;
    }
    return std::size_t{0};
  };
  CHECK(line_of("0,0,0,0\n") == 1);
  CHECK(line_of("x,y,tx,ty\n0,0,1,0\n1,1,nan,0\n") == 3);
  CHECK(line_of("0,0,1,0\n1,2,3\n") == 2);
  CHECK(line_of("0,0,1,0\n1,2,abc,3\n") == 2);
  CHECK(line_of("0,0,1,0\n1,inf,1,0\n") == 2);
  CHECK(line_of("0,0,1,0\nx,y,tx,ty\n") == 2);
}

TEST_CASE("csv and json round trips are exact") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-100, 100);
  std::vector<TangentSample> s;
  for (Index i = 0; i < 500; ++i) s.emplace_back(Vec2{u(rng), u(rng) * 1e-7}, UnorientedTangent({u(rng), u(rng)}), i);
  const auto back = parse_samples_csv(write_samples_csv(s));
  REQUIRE(back.size() == s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(back[i].pos == s[i].pos);
    CHECK(back[i].tangent == s[i].tangent);
    CHECK(back[i].id == s[i].id);
  }
  const auto back_json = parse_samples_json(nlohmann::json::parse(nlohmann::json{{"samples", samples_to_json(s)}}.dump()));
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(back_json[i].pos == s[i].pos);
    CHECK(back_json[i].tangent == s[i].tangent);
  }
}

TEST_CASE("json samples errors") {
  CHECK_THROWS_AS(parse_samples_json(nlohmann::json::parse(R"({"params":{}})")), FormatError);
  CHECK_THROWS_AS(parse_samples_json(nlohmann::json::parse(R"({"samples":[{"x":0,"y":0,"tx":0,"ty":0}]})")),
                  FormatError);
  CHECK_THROWS_AS(parse_samples_json(nlohmann::json::parse(R"({"samples":[{"x":0,"y":0,"tx":1}]})")), FormatError);
  CHECK(parse_samples_json(nlohmann::json::parse(R"([{"x":1,"y":2,"tx":0,"ty":3}])")).size() == 1);
  CHECK(format_from_path("a/b.CSV") == SampleFormat::csv);
  CHECK(format_from_path("a.json") == SampleFormat::json);
  CHECK_THROWS_AS(format_from_path("a.xyz"), FormatError);
}

TEST_CASE("graph json is sorted and round trips") {
  const auto fig = sample_figure(figures::two_closed_curves(), 0.1, 2);
  const nlohmann::json j = graph_to_json(fig.samples, fig.truth);
  CHECK(j["vertices"].size() == 96);
  CHECK(j["vertices"][5]["id"] == 5);
  const auto& edges = j["edges"];
  for (std::size_t k = 1; k < edges.size(); ++k) {
    CHECK(edges[k][0] <= edges[k][1]);
    CHECK(std::make_pair(edges[k - 1][0].get<int>(), edges[k - 1][1].get<int>()) <
          std::make_pair(edges[k][0].get<int>(), edges[k][1].get<int>()));
  }
  const auto [samples, g] = graph_from_json(j);
  CHECK(g == fig.truth);
  CHECK(samples[7].pos == fig.samples[7].pos);
}

TEST_CASE("figure config parsing") {
  const auto doc = nlohmann::json::parse(R"({
    "curves": [
      {"type": "circle", "center": [0, 0], "radius": 1},
      {"type": "segment", "from": [-2, -2], "to": [2, -2], "samples": 30},
      {"type": "arc", "center": [0, 0], "radius": 1.5, "start_angle": 0, "sweep": 1.0},
      {"type": "oval", "center": [0, 3], "half_width": 1, "half_height": 0.5}
    ],
    "kappa_max": 2.0, "epsilon": 0.2, "seed": 5,
    "noise": {"zeta": 0.001, "xi": 0.002},
    "spurious": {"count": 7, "bbox": [-3, -3, 3, 4]},
    "sampling": {"fill": 0.6}
  })");
  const FigureConfig cfg = figure_config_from_json(doc);
  CHECK(cfg.spec.curves.size() == 4);
  CHECK(cfg.spec.curves[1].samples == std::size_t{30});
  CHECK(cfg.spec.kappa_max == 2.0);
  CHECK_FALSE(cfg.spec.delta.has_value());
  CHECK(cfg.epsilon == 0.2);
  CHECK(cfg.seed == 5);
  CHECK(cfg.sampling.zeta == 0.001);
  CHECK(cfg.spurious == 7);
  CHECK(cfg.sampling.fill == 0.6);
  const auto fig = generate_figure(cfg);
  CHECK(fig.samples.size() == fig.truth.vertex_count());
  CHECK(fig.provenance.back().spurious());

  const auto again = figure_config_from_json(figure_spec_to_json(cfg.spec));
  CHECK(again.spec.curves.size() == 4);

  CHECK_THROWS_AS(figure_config_from_json(nlohmann::json::parse(R"({"curves":[{"type":"spiral"}]})")), FormatError);
  CHECK_THROWS_AS(figure_config_from_json(nlohmann::json::parse(R"({"curves":[{"type":"circle","radius":1}]})")),
                  FormatError);

  const nlohmann::json out = figure_to_json(fig, cfg);
  const auto samples = parse_samples_json(out);
  const auto truth = truth_from_json(out, samples.size());
  REQUIRE(truth.has_value());
  CHECK(truth->truth == fig.truth);
  CHECK(truth->curve_count == 4);
}

TEST_CASE("validation inequalities") {
  ReconstructionParams p;
  p.kappa_max = 3;
  p.epsilon = 0.065;
  const ValidationReport tight = validate(p, 0.015);
  const Check& sep = tight.checks[1];
  CHECK(sep.inequality == "delta > 2 kappa_m epsilon^2");
  CHECK(sep.rhs == doctest::Approx(0.02535));
  CHECK_FALSE(sep.holds);
  CHECK(tight.checks[0].holds);

  p.strict_validation = true;
  try {
    validate(p, 0.015);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("delta > 2 kappa_m epsilon^2") != std::string::npos);
  }

  ReconstructionParams ok;
  ok.kappa_max = 1;
  ok.epsilon = 0.1;
  ok.strict_validation = true;
  const ValidationReport r = validate(ok, 0.1);
  CHECK(r.checks[0].holds);
  CHECK(r.checks[1].holds);
  CHECK(r.checks[1].rhs == doctest::Approx(0.02));
  CHECK(r.checks[0].rhs == doctest::Approx(0.7071067811865476));

  ReconstructionParams edge = ok;
  edge.epsilon = 1.0 / (edge.kappa_max * std::sqrt(2.0));
  CHECK_THROWS_AS(validate(edge, 10.0), ValidationError);

  ReconstructionParams noisy = ok;
  noisy.mode = Algorithm::noisy;
  noisy.zeta = 0.001;
  noisy.xi = 0.01;
  CHECK_THROWS_AS(validate(noisy, std::nullopt), ValidationError);
  CHECK_NOTHROW(validate(noisy, 0.1));
  noisy.strict_validation = false;
  const auto diag = validate(noisy, 0.1, 0.05);
  // Every condition is reported with both sides.
  CHECK(diag.checks.size() == 5);
  for (const Check& c : diag.checks) CHECK(c.evaluated);
  CHECK(diag.checks[2].rhs == doctest::Approx(4 * 0.001 + 4 * 0.1 * 0.01 + 2.1 * 0.01));
  CHECK(diag.checks[3].rhs == doctest::Approx(4 * 0.001 + 2 * 0.1 * 0.01 + 2.1 * 0.01));
  CHECK(diag.checks[4].rhs == doctest::Approx((1 + std::pow(2.0, 1.5)) * (2 * 0.01 * 0.1 + 0.001)));
}

TEST_CASE("run report contents") {
  const auto fig = sample_figure(figures::two_closed_curves(), 0.1, 4);
  ReconstructionParams p;
  p.kappa_max = 3;
  p.epsilon = 0.1;
  const RunResult res = run_reconstruction(fig.samples, p, 0.24, &fig);
  CHECK(res.graph == fig.truth);
  REQUIRE(res.report.truth.has_value());
  CHECK(res.report.truth->exact());
  const nlohmann::json j = to_json(res.report);
  CHECK(j["graph"]["edges"] == 96);
  CHECK(j["graph"]["degree_histogram"]["2"] == 96);
  CHECK(j["graph"]["leaves"] == 0);
  CHECK(j["validation"].size() == 5);
  CHECK(j["timings_ms"].contains("candidate_graph"));
  CHECK(j["truth"]["exact"] == true);
  CHECK(j["counts"]["samples"] == 96);
  // Byte-identical without timings.
  const RunResult again = run_reconstruction(fig.samples, p, 0.24, &fig);
  CHECK(to_json(res.report, false).dump() == to_json(again.report, false).dump());
  CHECK(graph_to_json(fig.samples, res.graph).dump() == graph_to_json(fig.samples, again.graph).dump());
}

TEST_CASE("svg output") {
  const std::vector<TangentSample> s{{{0, 0}, UnorientedTangent({1, 0}), 0}, {{1, 1}, UnorientedTangent({0, 1}), 1}};
  const std::string empty = render_svg(s, PolyGraph(2));
  CHECK(empty.rfind("<svg", 0) == 0);
  CHECK(empty.find("<line") == std::string::npos);
  CHECK(empty.find("<circle") != std::string::npos);
  CHECK(empty.find("</svg>") != std::string::npos);

  const auto fig = inject_spurious(sample_figure(figures::two_closed_curves(), 0.1, 1), 5, {{-1, -1}, {1, 1}}, 2);
  PolyGraph g = fig.truth;
  g.add_edge(0, 50);
  const std::string a = render_svg(fig.samples, g, {800, 0.01, 2}, {&fig.truth, fig.provenance});
  const std::string b = render_svg(fig.samples, g, {800, 0.01, 2}, {&fig.truth, fig.provenance});
  CHECK(a == b);
  CHECK(a.find("class=\"incorrect\"") != std::string::npos);
  CHECK(a.find("class=\"spurious\"") != std::string::npos);
  CHECK(a.find("class=\"tick\"") != std::string::npos);
  CHECK(render_svg(std::vector<TangentSample>{}, PolyGraph(0)).find("</svg>") != std::string::npos);
}
