#pragma once

/// \file
/// \brief Candidate graph construction and nearest tangential neighbour
/// selection for the noise-free and noisy polygonalization.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tancurve/geom.hpp"

namespace tancurve {

/// Undirected edge stored canonically with a < b.
struct Edge {
  Index a = 0;
  Index b = 0;

  /// Throws InvalidInput for i == j.
  static Edge make(Index i, Index j);
  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph over sample indices. Edges are kept sorted and
/// unique, so two graphs with the same edge set compare equal.
class PolyGraph {
 public:
  PolyGraph() = default;
  explicit PolyGraph(std::size_t vertex_count) : vertex_count_(vertex_count) {}
  /// Canonicalizes, sorts and deduplicates. Throws InvalidInput on
  /// self-loops or out-of-range indices.
  PolyGraph(std::size_t vertex_count, std::vector<Edge> edges);

  [[nodiscard]] std::size_t vertex_count() const { return vertex_count_; }
  [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }

  bool add_edge(Index i, Index j);
  bool remove_edge(Index i, Index j);
  [[nodiscard]] bool has_edge(Index i, Index j) const;

  [[nodiscard]] std::vector<std::vector<Index>> adjacency() const;
  [[nodiscard]] std::vector<std::size_t> degrees() const;
  /// Every edge of this graph is an edge of `other`.
  [[nodiscard]] bool is_subgraph_of(const PolyGraph& other) const;

  bool operator==(const PolyGraph&) const = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
};

enum class Mode { noise_free, noisy };

enum class PairSource { brute_force, quadtree };

/// Raised when two samples coincide within the predicate tolerance.
class DuplicateSampleError : public InvalidInput {
 public:
  DuplicateSampleError(Index i, Index j);
  Index first;
  Index second;
};

/// Radius within which candidate pairs must be enumerated:
/// epsilon (+ 2 zeta in noisy mode) plus the tolerance band.
double candidate_radius(const ZoneParams& zp, Mode mode);

/// All pairs with |p_i - p_j| <= radius, by exhaustive comparison.
std::vector<Edge> brute_force_pairs(std::span<const TangentSample> samples, double radius);

/// Dispatches to brute_force_pairs or to the quadtree enumeration.
std::vector<Edge> candidate_pairs(std::span<const TangentSample> samples, const ZoneParams& zp,
                                  Mode mode, PairSource source,
                                  std::optional<double> rho_max = std::nullopt);

/// True iff the mutual membership test admits (i, j): allowed region in both
/// directions (noise-free) or noisy allowed region with slack 2 zeta (noisy).
bool mutually_admissible(const TangentSample& a, const TangentSample& b, const ZoneParams& zp,
                         Mode mode);

/// Graph G: every pair offered by `pairs` that passes the mutual test.
/// `pairs` must contain every pair within candidate_radius(zp, mode).
/// Throws DuplicateSampleError when two samples are closer than zp.tol.
PolyGraph build_candidate_graph(std::span<const TangentSample> samples, const ZoneParams& zp,
                                Mode mode, std::span<const Edge> pairs);

PolyGraph build_candidate_graph(std::span<const TangentSample> samples, const ZoneParams& zp,
                                Mode mode, PairSource source = PairSource::brute_force,
                                std::optional<double> rho_max = std::nullopt);

struct SideSets {
  std::vector<Index> plus;
  std::vector<Index> minus;
};

/// Splits the G-neighbours of i by the sign of (p_j - p_i) . m_i. Projections
/// within tol of zero go to the plus side.
SideSets split_sides(Index i, std::span<const Index> neighbors,
                     std::span<const TangentSample> samples, double tol = kDefaultTolerance);
SideSets split_sides(Index i, const PolyGraph& g, std::span<const TangentSample> samples,
                     double tol = kDefaultTolerance);

/// Member of `side_set` with the smallest tangential distance to p_i. Ties go
/// to the smaller Euclidean distance, then to the smaller sample id.
std::optional<Index> nearest_tangential_neighbor(Index i, std::span<const Index> side_set,
                                                 std::span<const TangentSample> samples);

struct NeighborChoice {
  std::optional<Index> plus;
  std::optional<Index> minus;
};

/// Nearest tangential neighbours on both sides of every vertex of `g`.
std::vector<NeighborChoice> choose_neighbors(const PolyGraph& g,
                                             std::span<const TangentSample> samples,
                                             double tol = kDefaultTolerance);

/// Keeps the chosen edges of `g`: the union of (i, r+_i) and (i, r-_i).
PolyGraph select_nearest_edges(const PolyGraph& g, std::span<const TangentSample> samples,
                               double tol = kDefaultTolerance);

/// Full reconstruction: candidate graph followed by nearest tangential
/// neighbour selection.
PolyGraph polygonalize(std::span<const TangentSample> samples, const ZoneParams& zp, Mode mode,
                       PairSource source = PairSource::brute_force,
                       std::optional<double> rho_max = std::nullopt);

}  // namespace tancurve
