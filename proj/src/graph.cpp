#include "tancurve/graph.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "tancurve/spatial.hpp"

namespace tancurve {

Edge Edge::make(Index i, Index j) {
  if (i == j) throw InvalidInput("self-loop on vertex " + std::to_string(i));
  return i < j ? Edge{i, j} : Edge{j, i};
}

PolyGraph::PolyGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (Edge& e : edges_) {
    e = Edge::make(e.a, e.b);
    if (e.b >= vertex_count_)
      throw InvalidInput("edge index " + std::to_string(e.b) + " out of range");
  }
  if (edges_.size() > 64) {
    // Bucket by first endpoint, then sort the short buckets.
    std::vector<std::size_t> start(vertex_count_ + 1, 0);
    for (const Edge& e : edges_) ++start[e.a + 1];
    for (std::size_t v = 0; v < vertex_count_; ++v) start[v + 1] += start[v];
    std::vector<Edge> sorted(edges_.size());
    std::vector<std::size_t> fill(start.begin(), start.end() - 1);
    for (const Edge& e : edges_) sorted[fill[e.a]++] = e;
    for (std::size_t v = 0; v < vertex_count_; ++v) {
      std::sort(sorted.begin() + static_cast<std::ptrdiff_t>(start[v]),
                sorted.begin() + static_cast<std::ptrdiff_t>(start[v + 1]));
    }
    edges_ = std::move(sorted);
  } else {
    std::sort(edges_.begin(), edges_.end());
  }
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool PolyGraph::add_edge(Index i, Index j) {
  const Edge e = Edge::make(i, j);
  if (e.b >= vertex_count_) throw InvalidInput("edge index out of range");
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) return false;
  edges_.insert(it, e);
  return true;
}

bool PolyGraph::remove_edge(Index i, Index j) {
  const Edge e = Edge::make(i, j);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return false;
  edges_.erase(it);
  return true;
}

bool PolyGraph::has_edge(Index i, Index j) const {
  if (i == j) return false;
  return std::binary_search(edges_.begin(), edges_.end(), Edge::make(i, j));
}

std::vector<std::vector<Index>> PolyGraph::adjacency() const {
  std::vector<std::vector<Index>> adj(vertex_count_);
  for (const Edge& e : edges_) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  return adj;
}

std::vector<std::size_t> PolyGraph::degrees() const {
  std::vector<std::size_t> deg(vertex_count_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.a];
    ++deg[e.b];
  }
  return deg;
}

bool PolyGraph::is_subgraph_of(const PolyGraph& other) const {
  return std::includes(other.edges_.begin(), other.edges_.end(), edges_.begin(), edges_.end());
}

DuplicateSampleError::DuplicateSampleError(Index i, Index j)
    : InvalidInput("samples " + std::to_string(i) + " and " + std::to_string(j) +
                   " coincide within tolerance"),
      first(i),
      second(j) {}

double candidate_radius(const ZoneParams& zp, Mode mode) {
  const double slack = mode == Mode::noisy ? 2.0 * zp.zeta : 0.0;
  return zp.epsilon + slack + zp.tol;
}

std::vector<Edge> brute_force_pairs(std::span<const TangentSample> samples, double radius) {
  std::vector<Edge> out;
  const double r2 = radius * radius;
  for (Index i = 0; i < samples.size(); ++i) {
    for (Index j = i + 1; j < samples.size(); ++j) {
      if ((samples[i].pos - samples[j].pos).norm2() <= r2) out.push_back({i, j});
    }
  }
  return out;
}

std::vector<Edge> candidate_pairs(std::span<const TangentSample> samples, const ZoneParams& zp,
                                  Mode mode, PairSource source, std::optional<double> rho_max) {
  const double radius = candidate_radius(zp, mode);
  if (source == PairSource::brute_force) return brute_force_pairs(samples, radius);
  const double rho = rho_max ? *rho_max : estimate_rho_max(samples, radius);
  return neighbor_pairs(build_quadtree(samples, rho, radius), radius);
}

bool mutually_admissible(const TangentSample& a, const TangentSample& b, const ZoneParams& zp,
                         Mode mode) {
  if (mode == Mode::noise_free) {
    return in_allowed_region(b.pos, a.pos, a.tangent, zp) &&
           in_allowed_region(a.pos, b.pos, b.tangent, zp);
  }
  const double slack = 2.0 * zp.zeta;
  return in_noisy_allowed_region(b.pos, a.pos, a.tangent, zp, slack) &&
         in_noisy_allowed_region(a.pos, b.pos, b.tangent, zp, slack);
}

PolyGraph build_candidate_graph(std::span<const TangentSample> samples, const ZoneParams& zp,
                                Mode mode, std::span<const Edge> pairs) {
  zp.check();
  if (samples.empty()) throw InvalidInput("no samples");
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const Edge& e : pairs) {
    const TangentSample& a = samples[e.a];
    const TangentSample& b = samples[e.b];
    if (distance(a.pos, b.pos) <= zp.tol) throw DuplicateSampleError(a.id, b.id);
    if (mutually_admissible(a, b, zp, mode)) edges.push_back(e);
  }
  return PolyGraph(samples.size(), std::move(edges));
}

PolyGraph build_candidate_graph(std::span<const TangentSample> samples, const ZoneParams& zp,
                                Mode mode, PairSource source, std::optional<double> rho_max) {
  zp.check();
  if (samples.empty()) throw InvalidInput("no samples");
  const auto pairs = candidate_pairs(samples, zp, mode, source, rho_max);
  return build_candidate_graph(samples, zp, mode, pairs);
}

SideSets split_sides(Index i, std::span<const Index> neighbors,
                     std::span<const TangentSample> samples, double tol) {
  SideSets sides;
  const TangentSample& s = samples[i];
  for (Index j : neighbors) {
    const double proj = dot(samples[j].pos - s.pos, s.tangent.dir());
    if (proj >= -tol) {
      sides.plus.push_back(j);
    } else {
      sides.minus.push_back(j);
    }
  }
  return sides;
}

SideSets split_sides(Index i, const PolyGraph& g, std::span<const TangentSample> samples,
                     double tol) {
  if (i >= g.vertex_count()) throw InvalidInput("vertex index out of range");
  std::vector<Index> neighbors;
  for (const Edge& e : g.edges()) {
    if (e.a == i) neighbors.push_back(e.b);
    if (e.b == i) neighbors.push_back(e.a);
  }
  return split_sides(i, neighbors, samples, tol);
}

std::optional<Index> nearest_tangential_neighbor(Index i, std::span<const Index> side_set,
                                                 std::span<const TangentSample> samples) {
  const TangentSample& s = samples[i];
  std::optional<Index> best;
  std::tuple<double, double, Index> best_key;
  for (Index j : side_set) {
    const auto key = std::make_tuple(tangential_distance(samples[j].pos, s.pos, s.tangent),
                                     distance(samples[j].pos, s.pos), samples[j].id);
    if (!best || key < best_key) {
      best = j;
      best_key = key;
    }
  }
  return best;
}

std::vector<NeighborChoice> choose_neighbors(const PolyGraph& g,
                                             std::span<const TangentSample> samples, double tol) {
  const auto adj = g.adjacency();
  std::vector<NeighborChoice> choices(g.vertex_count());
  for (Index i = 0; i < g.vertex_count(); ++i) {
    const SideSets sides = split_sides(i, adj[i], samples, tol);
    choices[i].plus = nearest_tangential_neighbor(i, sides.plus, samples);
    choices[i].minus = nearest_tangential_neighbor(i, sides.minus, samples);
  }
  return choices;
}

PolyGraph select_nearest_edges(const PolyGraph& g, std::span<const TangentSample> samples,
                               double tol) {
  const auto choices = choose_neighbors(g, samples, tol);
  std::vector<Edge> edges;
  for (Index i = 0; i < choices.size(); ++i) {
    if (choices[i].plus) edges.push_back(Edge::make(i, *choices[i].plus));
    if (choices[i].minus) edges.push_back(Edge::make(i, *choices[i].minus));
  }
  return PolyGraph(g.vertex_count(), std::move(edges));
}

PolyGraph polygonalize(std::span<const TangentSample> samples, const ZoneParams& zp, Mode mode,
                       PairSource source, std::optional<double> rho_max) {
  const PolyGraph g = build_candidate_graph(samples, zp, mode, source, rho_max);
  return select_nearest_edges(g, samples, zp.tol);
}

}  // namespace tancurve
