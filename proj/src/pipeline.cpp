#include "tancurve/pipeline.hpp"

#include <chrono>
#include <limits>

#include "tancurve/denoise.hpp"

namespace tancurve {

using nlohmann::json;

GraphStats graph_stats(const PolyGraph& g, std::span<const TangentSample> samples) {
  GraphStats s;
  s.vertices = g.vertex_count();
  s.edges = g.edge_count();
  for (std::size_t d : g.degrees()) {
    ++s.degree_histogram[d];
    if (d == 1) ++s.leaves;
    if (d > 2) ++s.branch_vertices;
  }
  double shortest = std::numeric_limits<double>::infinity();
  for (const Edge& e : g.edges()) shortest = std::min(shortest, distance(samples[e.a].pos, samples[e.b].pos));
  s.min_edge_length = g.edge_count() ? shortest : 0.0;
  return s;
}

RunResult run_reconstruction(std::span<const TangentSample> samples, const ReconstructionParams& params,
                             std::optional<double> declared_delta, const SyntheticFigure* truth) {
  using clock = std::chrono::steady_clock;
  params.check();
  if (truth && truth->samples.size() != samples.size())
    throw InvalidInput("truth figure does not match the samples");

  RunResult out;
  RunReport& rep = out.report;
  rep.params = params;
  rep.declared_delta = declared_delta;
  rep.sample_count = samples.size();

  auto lap = [&, t = clock::now()](const char* phase) mutable {
    const auto now = clock::now();
    rep.timings_ms.emplace_back(phase, std::chrono::duration<double, std::milli>(now - t).count());
    t = now;
  };

  // Spacing is only known after reconstruction; strict checks that do not
  // depend on it run up front.
  rep.validation = validate(params, declared_delta);
  lap("validate");

  const ZoneParams zp = params.zone();
  const Mode mode = params.mode == Algorithm::noisy ? Mode::noisy : Mode::noise_free;
  const auto pairs = candidate_pairs(samples, zp, mode, params.pair_source, params.rho_max);
  lap("candidate_pairs");
  out.candidate = build_candidate_graph(samples, zp, mode, pairs);
  lap("candidate_graph");

  if (params.mode == Algorithm::denoise) {
    PolyGraph g = select_almost_nearest_edges(out.candidate, samples, params.alpha, params.tol);
    lap("select_edges");
    out.graph = params.closed_figures ? remove_leaves(g, params.sweeps) : std::move(g);
    lap("remove_leaves");
  } else {
    out.graph = select_nearest_edges(out.candidate, samples, params.tol);
    lap("select_edges");
  }

  rep.stats = graph_stats(out.graph, samples);
  rep.stats.candidate_edges = out.candidate.edge_count();
  if (out.graph.edge_count()) {
    ReconstructionParams advisory = params;
    advisory.strict_validation = false;
    rep.validation = validate(advisory, declared_delta, rep.stats.min_edge_length);
  }
  if (truth) {
    rep.truth = compare_to_truth(out.graph, *truth);
    lap("truth_diff");
  }
  return out;
}

json to_json(const TruthDiff& d) {
  auto edges = [](const std::vector<Edge>& v) {
    json arr = json::array();
    for (const Edge& e : v) arr.push_back(json::array({e.a, e.b}));
    return arr;
  };
  json per = json::array();
  for (const auto& c : d.per_curve)
    per.push_back({{"truth_edges", c.truth_edges}, {"recovered_edges", c.recovered_edges}});
  return {{"exact", d.exact()},
          {"missing", edges(d.missing)},
          {"extra", edges(d.extra)},
          {"cross_curve_edges", d.cross_curve_edges},
          {"spurious_edges", d.spurious_edges},
          {"per_curve", per}};
}

json to_json(const RunReport& r, bool with_timings) {
  json hist = json::object();
  for (const auto& [deg, count] : r.stats.degree_histogram) hist[std::to_string(deg)] = count;
  json j = {{"params", to_json(r.params)},
            {"counts", {{"samples", r.sample_count}}},
            {"validation", to_json(r.validation)},
            {"graph",
             {{"vertices", r.stats.vertices},
              {"edges", r.stats.edges},
              {"candidate_edges", r.stats.candidate_edges},
              {"degree_histogram", hist},
              {"leaves", r.stats.leaves},
              {"branch_vertices", r.stats.branch_vertices},
              {"min_edge_length", r.stats.min_edge_length}}}};
  j["declared_delta"] = r.declared_delta ? json(*r.declared_delta) : json(nullptr);
  if (with_timings) {
    json t = json::object();
    for (const auto& [phase, ms] : r.timings_ms) t[phase] = ms;
    j["timings_ms"] = t;
  }
  j["truth"] = r.truth ? to_json(*r.truth) : json(nullptr);
  return j;
}

}  // namespace tancurve
