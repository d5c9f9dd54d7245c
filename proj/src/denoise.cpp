#include "tancurve/denoise.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tancurve {

void DenoiseParams::check() const {
  if (!(std::isfinite(alpha) && alpha >= 1.0)) throw InvalidInput("alpha must be >= 1");
}

std::vector<Index> almost_nearest_set(Index i, std::span<const Index> side_set,
                                      std::span<const TangentSample> samples, double alpha) {
  if (!(alpha >= 1.0)) throw InvalidInput("alpha must be >= 1");
  const TangentSample& s = samples[i];
  double best = std::numeric_limits<double>::infinity();
  for (Index j : side_set) best = std::min(best, tangential_distance(samples[j].pos, s.pos, s.tangent));
  std::vector<Index> out;
  for (Index j : side_set) {
    if (tangential_distance(samples[j].pos, s.pos, s.tangent) <= alpha * best) out.push_back(j);
  }
  return out;
}

PolyGraph remove_leaves(const PolyGraph& g, std::size_t sweeps) {
  PolyGraph current = g;
  for (std::size_t pass = 0; pass < sweeps; ++pass) {
    const auto deg = current.degrees();
    std::vector<Edge> kept;
    kept.reserve(current.edge_count());
    for (const Edge& e : current.edges()) {
      if (deg[e.a] != 1 && deg[e.b] != 1) kept.push_back(e);
    }
    if (kept.size() == current.edge_count()) break;
    current = PolyGraph(current.vertex_count(), std::move(kept));
  }
  return current;
}

PolyGraph select_almost_nearest_edges(const PolyGraph& g, std::span<const TangentSample> samples,
                                      double alpha, double tol) {
  const auto adj = g.adjacency();
  std::vector<Edge> edges;
  for (Index i = 0; i < g.vertex_count(); ++i) {
    const SideSets sides = split_sides(i, adj[i], samples, tol);
    for (const auto* side : {&sides.plus, &sides.minus}) {
      for (Index j : almost_nearest_set(i, *side, samples, alpha)) edges.push_back(Edge::make(i, j));
    }
  }
  return PolyGraph(g.vertex_count(), std::move(edges));
}

PolyGraph polygonalize_with_denoise(std::span<const TangentSample> samples, const ZoneParams& zp,
                                    const DenoiseParams& dp, PairSource source, Mode mode,
                                    std::optional<double> rho_max) {
  dp.check();
  const PolyGraph g = build_candidate_graph(samples, zp, mode, source, rho_max);
  PolyGraph gamma = select_almost_nearest_edges(g, samples, dp.alpha, zp.tol);
  if (dp.closed_figures) gamma = remove_leaves(gamma, dp.sweeps);
  return gamma;
}

}  // namespace tancurve
