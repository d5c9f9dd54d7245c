#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tancurve/bench.hpp"
#include "tancurve/io.hpp"
#include "tancurve/pipeline.hpp"
#include "tancurve/render.hpp"
#include "tancurve/spatial.hpp"
#include "tancurve/validate.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace tancurve {

namespace {

// Raised for broken internal guarantees; maps to kExitInternal.
struct InvariantBreach : std::logic_error {
  using std::logic_error::logic_error;
};

fs::path output_dir() {
  const char* env = std::getenv("TANCURVE_OUT_DIR");
  return env && *env ? fs::path(env) : fs::path(".");
}

fs::path or_default(const std::string& given, const std::string& name) {
  return given.empty() ? output_dir() / name : fs::path(given);
}

struct LoadedInput {
  std::vector<TangentSample> samples;
  json doc;  // null for CSV input
};

LoadedInput load_samples(const std::string& path, const std::string& format) {
  const SampleFormat f = format == "auto" ? format_from_path(path)
                         : format == "csv" ? SampleFormat::csv
                                           : SampleFormat::json;
  LoadedInput in;
  if (f == SampleFormat::csv) {
    in.samples = parse_samples_csv(read_text_file(path));
  } else {
    in.doc = read_json_file(path);
    in.samples = in.doc.is_object() && in.doc.contains("vertices") ? graph_from_json(in.doc).first
                                                                   : parse_samples_json(in.doc);
  }
  return in;
}

std::optional<double> param_from(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains("params")) return std::nullopt;
  const json& p = doc["params"];
  if (!p.contains(key) || p[key].is_null()) return std::nullopt;
  if (!p[key].is_number()) throw FormatError(std::string("params.") + key + " must be a number");
  return p[key].get<double>();
}

/// Figure view of a truth block so compare_to_truth can be reused.
std::optional<SyntheticFigure> truth_figure(const LoadedInput& in) {
  auto data = truth_from_json(in.doc, in.samples.size());
  if (!data) return std::nullopt;
  SyntheticFigure fig;
  fig.samples = in.samples;
  fig.truth = std::move(data->truth);
  fig.provenance = std::move(data->provenance);
  fig.curves.assign(data->curve_count, Circle{});
  return fig;
}

struct ReconstructArgs {
  std::string input, format = "auto", mode = "noise_free", pair_source = "quadtree";
  std::string out_graph, out_report, out_svg;
  double epsilon = 0, kappa = 0, zeta = 0, xi = 0, alpha = 1.1, rho_max = 0, tol = kDefaultTolerance,
         delta = 0;
  std::size_t sweeps = 4;
  bool strict = false, closed = true;
  std::uint64_t seed = 0;
  CLI::Option* o_eps = nullptr;
  CLI::Option* o_kappa = nullptr;
  CLI::Option* o_zeta = nullptr;
  CLI::Option* o_xi = nullptr;
  CLI::Option* o_rho = nullptr;
  CLI::Option* o_delta = nullptr;
};

int reconstruct(const ReconstructArgs& a) {
  const LoadedInput in = load_samples(a.input, a.format);

  auto pick = [&](CLI::Option* opt, double flag, const char* key) -> std::optional<double> {
    if (opt->count()) return flag;
    return param_from(in.doc, key);
  };
  ReconstructionParams p;
  const auto eps = pick(a.o_eps, a.epsilon, "epsilon");
  const auto kappa = pick(a.o_kappa, a.kappa, "kappa_max");
  if (!eps) throw InvalidInput("--epsilon is required (no params block in the input)");
  if (!kappa) throw InvalidInput("--kappa is required (no params block in the input)");
  p.epsilon = *eps;
  p.kappa_max = *kappa;
  p.zeta = pick(a.o_zeta, a.zeta, "zeta").value_or(0.0);
  p.xi = pick(a.o_xi, a.xi, "xi").value_or(0.0);
  p.alpha = a.alpha;
  p.sweeps = a.sweeps;
  if (a.o_rho->count()) p.rho_max = a.rho_max;
  p.tol = a.tol;
  p.mode = algorithm_from_string(a.mode);
  p.strict_validation = a.strict;
  p.pair_source = pair_source_from_string(a.pair_source);
  p.closed_figures = a.closed;
  p.seed = a.seed;
  const std::optional<double> delta = pick(a.o_delta, a.delta, "delta");

  const auto truth = truth_figure(in);
  const RunResult res = run_reconstruction(in.samples, p, delta, truth ? &*truth : nullptr);
  if (!res.graph.is_subgraph_of(res.candidate))
    throw InvariantBreach("reconstructed edge outside the candidate graph");

  const fs::path graph_path = or_default(a.out_graph, "graph.json");
  const fs::path report_path = or_default(a.out_report, "report.json");
  write_text_file(graph_path, graph_to_json(in.samples, res.graph).dump(1) + "\n");
  write_text_file(report_path, to_json(res.report).dump(1) + "\n");
  if (!a.out_svg.empty()) {
    RenderTruth rt;
    if (truth) rt = {&truth->truth, truth->provenance};
    write_text_file(a.out_svg, render_svg(in.samples, res.graph, {}, rt));
  }

  std::cout << "samples " << in.samples.size() << ", edges " << res.graph.edge_count() << ", candidate edges "
            << res.candidate.edge_count() << "\n";
  for (const Check& c : res.report.validation.checks) {
    const bool relevant = c.enforced || (p.mode == Algorithm::noisy && c.name == "noisy_min_spacing");
    if (relevant && c.evaluated && !c.holds) std::cout << "warning: " << c.inequality << " does not hold\n";
  }
  if (res.report.truth) {
    const TruthDiff& d = *res.report.truth;
    std::cout << "truth: " << (d.exact() ? "exact" : "differs") << " (missing " << d.missing.size()
              << ", extra " << d.extra.size() << ")\n";
  }
  return kExitOk;
}

struct SynthArgs {
  std::string spec, family = "circle", out, out_csv;
  double epsilon = 0.1, zeta = 0, xi = 0, delta = 0.1;
  std::uint64_t seed = 0;
  std::size_t spurious = 0;
  CLI::Option* o_eps = nullptr;
  CLI::Option* o_seed = nullptr;
  CLI::Option* o_zeta = nullptr;
  CLI::Option* o_xi = nullptr;
  CLI::Option* o_spurious = nullptr;
};

FigureSpec family_spec(const std::string& name, double delta) {
  if (name == "circle") {
    FigureSpec s;
    s.curves.push_back({Circle{{0.0, 0.0}, 1.0}, std::nullopt});
    s.kappa_max = 1.0;
    return s;
  }
  if (name == "concentric") {
    FigureSpec s = figures::concentric_circles({0.0, 0.0}, 1.0, delta);
    s.kappa_max = 1.0;
    s.delta = delta;
    return s;
  }
  if (name == "two-curves") {
    FigureSpec s = figures::two_closed_curves();
    s.kappa_max = 3.0;
    return s;
  }
  if (name == "covered-oval") return figures::covered_oval();
  throw InvalidInput("unknown figure family '" + name + "'");
}

int synth(const SynthArgs& a) {
  FigureConfig cfg;
  if (!a.spec.empty()) {
    cfg = figure_config_from_json(read_json_file(a.spec));
  } else {
    cfg.spec = family_spec(a.family, a.delta);
  }
  if (a.o_eps->count()) cfg.epsilon = a.epsilon;
  if (a.o_seed->count()) cfg.seed = a.seed;
  if (a.o_zeta->count()) cfg.zeta = cfg.sampling.zeta = a.zeta;
  if (a.o_xi->count()) cfg.xi = cfg.sampling.xi = a.xi;
  if (a.o_spurious->count()) cfg.spurious = a.spurious;

  const SyntheticFigure fig = generate_figure(cfg);
  const fs::path out = or_default(a.out, "figure.json");
  write_text_file(out, figure_to_json(fig, cfg).dump(1) + "\n");
  if (!a.out_csv.empty()) write_text_file(a.out_csv, write_samples_csv(fig.samples));
  std::cout << "samples " << fig.samples.size() << ", truth edges " << fig.truth.edge_count()
            << ", measured kappa " << fig.kappa_max_actual << ", measured delta " << fig.min_separation_actual
            << "\n";
  return kExitOk;
}

struct BenchArgs {
  bool sweep = false, scaling = false;
  double delta_min = 1e-4, delta_max = 1e-1;
  std::size_t points = 8, trials = 5, threads = 0, repeats = 3;
  std::uint64_t seed = 1;
  std::vector<std::size_t> sizes = {1000, 4000, 16000};
  std::string out_csv, out_json;
};

int bench(const BenchArgs& a) {
  const bool both = !a.sweep && !a.scaling;
  json summary = json::object();
  if (a.sweep || both) {
    PhaseSweepOptions opt;
    opt.deltas = log_spaced(a.delta_min, a.delta_max, a.points);
    opt.trials = a.trials;
    opt.seed = a.seed;
    opt.threads = a.threads;
    const PhaseSweepResult res = phase_sweep(opt);
    write_text_file(or_default(a.out_csv, "phase_sweep.csv"), res.to_csv());
    std::cout << res.to_csv();
    std::cout << "slope tangent " << res.tangent.slope << ", slope baseline " << res.baseline.slope << "\n";
    summary["phase_sweep"] = {{"slope_tangent", res.tangent.slope}, {"slope_baseline", res.baseline.slope}};
  }
  if (a.scaling || both) {
    const auto rows = scaling_benchmark(a.sizes, a.repeats, a.seed);
    json arr = json::array();
    for (const auto& r : rows) {
      std::cout << "N " << r.samples << ": " << r.milliseconds << " ms\n";
      arr.push_back({{"samples", r.samples}, {"ms", r.milliseconds}});
    }
    summary["scaling"] = arr;
  }
  write_text_file(or_default(a.out_json, "bench.json"), summary.dump(1) + "\n");
  return kExitOk;
}

struct RenderArgs {
  std::string input, format = "auto", graph, truth, out_svg;
  double ticks = 0.0, size = 800.0;
};

int render(const RenderArgs& a) {
  const LoadedInput in = load_samples(a.input, a.format);
  PolyGraph g(in.samples.size());
  if (in.doc.is_object() && in.doc.contains("vertices")) g = graph_from_json(in.doc).second;
  if (!a.graph.empty()) {
    auto [gs, gg] = graph_from_json(read_json_file(a.graph));
    if (gs.size() != in.samples.size()) throw FormatError("graph does not match the input samples");
    g = std::move(gg);
  }
  std::optional<TruthData> truth;
  if (!a.truth.empty()) {
    truth = truth_from_json(read_json_file(a.truth), in.samples.size());
    if (!truth) throw FormatError("'" + a.truth + "' has no truth block");
  }
  RenderTruth rt;
  if (truth) rt = {&truth->truth, truth->provenance};
  RenderOptions opt;
  opt.tangent_ticks = a.ticks;
  opt.size_px = a.size;
  write_text_file(or_default(a.out_svg, "render.svg"), render_svg(in.samples, g, opt, rt));
  return kExitOk;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"Curve reconstruction from points with unoriented tangents"};
  app.require_subcommand(1);

  ReconstructArgs ra;
  auto* rc = app.add_subcommand("reconstruct", "Reconstruct a polygonalization from samples");
  rc->add_option("--input", ra.input, "Samples (CSV, JSON or figure file)")->required();
  rc->add_option("--format", ra.format)->check(CLI::IsMember({"auto", "csv", "json"}));
  rc->add_option("--mode", ra.mode)->check(CLI::IsMember({"noise_free", "noisy", "denoise"}));
  ra.o_eps = rc->add_option("--epsilon", ra.epsilon, "Sampling bound");
  ra.o_kappa = rc->add_option("--kappa", ra.kappa, "Curvature bound");
  ra.o_zeta = rc->add_option("--zeta", ra.zeta, "Position noise bound");
  ra.o_xi = rc->add_option("--xi", ra.xi, "Tangent noise bound (radians)");
  rc->add_option("--alpha", ra.alpha, "Almost-nearest factor (denoise)");
  rc->add_option("--sweeps", ra.sweeps, "Leaf removal passes (denoise)");
  ra.o_rho = rc->add_option("--rho-max", ra.rho_max, "Density bound for the quadtree");
  rc->add_option("--tol", ra.tol, "Predicate tolerance");
  rc->add_flag("--strict", ra.strict, "Fail when a sufficient condition does not hold");
  rc->add_option("--pair-source", ra.pair_source)->check(CLI::IsMember({"brute", "quadtree"}));
  rc->add_option("--closed", ra.closed, "All curves are closed (enables leaf removal)");
  rc->add_option("--seed", ra.seed);
  ra.o_delta = rc->add_option("--delta", ra.delta, "Declared separation of the curves");
  rc->add_option("--out-graph", ra.out_graph);
  rc->add_option("--out-report", ra.out_report);
  rc->add_option("--out-svg", ra.out_svg);

  SynthArgs sa;
  auto* sc = app.add_subcommand("synth", "Generate a synthetic figure with ground truth");
  sc->add_option("--spec", sa.spec, "Figure spec JSON");
  sc->add_option("--family", sa.family)->check(CLI::IsMember({"circle", "concentric", "two-curves", "covered-oval"}));
  sa.o_eps = sc->add_option("--epsilon", sa.epsilon);
  sa.o_seed = sc->add_option("--seed", sa.seed);
  sa.o_zeta = sc->add_option("--zeta", sa.zeta);
  sa.o_xi = sc->add_option("--xi", sa.xi);
  sa.o_spurious = sc->add_option("--spurious", sa.spurious, "Uniform spurious samples to add");
  sc->add_option("--delta", sa.delta, "Separation for the concentric family");
  sc->add_option("--out", sa.out, "Figure JSON");
  sc->add_option("--out-csv", sa.out_csv, "Samples as CSV");

  BenchArgs ba;
  auto* bc = app.add_subcommand("bench", "Phase sweep and scaling timings");
  bc->add_flag("--sweep", ba.sweep, "Run only the phase sweep (with --scaling: both)");
  bc->add_flag("--scaling", ba.scaling, "Run only the scaling timings (with --sweep: both)");
  bc->add_option("--delta-min", ba.delta_min);
  bc->add_option("--delta-max", ba.delta_max);
  bc->add_option("--points", ba.points, "Number of log-spaced deltas");
  bc->add_option("--trials", ba.trials, "Trials per cell");
  bc->add_option("--threads", ba.threads);
  bc->add_option("--repeats", ba.repeats);
  bc->add_option("--sizes", ba.sizes, "Target sample counts for scaling")->delimiter(',');
  bc->add_option("--seed", ba.seed);
  bc->add_option("--out-csv", ba.out_csv);
  bc->add_option("--out-json", ba.out_json);

  RenderArgs rda;
  auto* rdc = app.add_subcommand("render", "Write an SVG of samples and a graph");
  rdc->add_option("--input", rda.input, "Samples or graph JSON")->required();
  rdc->add_option("--format", rda.format)->check(CLI::IsMember({"auto", "csv", "json"}));
  rdc->add_option("--graph", rda.graph, "Graph JSON to draw over the samples");
  rdc->add_option("--truth", rda.truth, "Figure JSON with truth edges");
  rdc->add_option("--ticks", rda.ticks, "Tangent tick half-length, fraction of the extent");
  rdc->add_option("--size", rda.size, "Image size in pixels");
  rdc->add_option("--out-svg", rda.out_svg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*rc) return reconstruct(ra);
    if (*sc) return synth(sa);
    if (*bc) return bench(ba);
    if (*rdc) return render(rda);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const InvariantBreach& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace tancurve
