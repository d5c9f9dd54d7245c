#pragma once

/// \file
/// \brief Density-bounded quadtree over samples and the fixed-radius
/// neighbour pair enumeration used for O(N log N) candidate graphs.

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "tancurve/geom.hpp"
#include "tancurve/graph.hpp"

namespace tancurve {

/// Axis-aligned square.
struct Box {
  Vec2 min;
  double width = 0.0;

  [[nodiscard]] Vec2 max() const { return {min.x + width, min.y + width}; }
  [[nodiscard]] Vec2 center() const { return {min.x + 0.5 * width, min.y + 0.5 * width}; }
  /// Closed overlap test against this box grown by `margin` on every side.
  [[nodiscard]] bool overlaps_inflated(const Box& other, double margin) const;
};

/// Raised when the deepest allowed level still holds more samples than the
/// split threshold (density assumption violated, usually by duplicates).
class QuadTreeDepthError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class QuadTree {
 public:
  static constexpr std::size_t kDefaultMaxDepth = 32;
  static constexpr std::int32_t kNoChild = -1;

  struct Node {
    Box box;
    std::array<std::int32_t, 4> children{kNoChild, kNoChild, kNoChild, kNoChild};
    std::uint32_t depth = 0;
    /// Range into the permuted index array covering the whole subtree.
    std::uint32_t begin = 0;
    std::uint32_t end = 0;

    [[nodiscard]] bool is_leaf() const { return children[0] == kNoChild; }
    [[nodiscard]] std::size_t size() const { return end - begin; }
  };

  /// Split threshold is ceil(rho_max * lambda^2), at least 1. The root is the
  /// samples' bounding square grown by lambda on every side.
  QuadTree(std::span<const TangentSample> samples, double rho_max, double lambda,
           std::size_t max_depth = kDefaultMaxDepth);

  [[nodiscard]] const std::vector<Node>& nodes() const { return nodes_; }
  [[nodiscard]] const Node& root() const { return nodes_.front(); }
  /// Samples under `leaf`; for an internal node, its whole subtree.
  [[nodiscard]] std::span<const Index> leaf_samples(const Node& leaf) const;
  /// Positions aligned with leaf_samples(leaf).
  [[nodiscard]] std::span<const Vec2> leaf_points(const Node& leaf) const;
  [[nodiscard]] std::vector<std::size_t> leaves() const;
  [[nodiscard]] std::size_t split_threshold() const { return threshold_; }
  [[nodiscard]] std::size_t max_depth() const { return max_depth_; }
  [[nodiscard]] double lambda() const { return lambda_; }
  [[nodiscard]] std::size_t sample_count() const { return order_.size(); }
  /// Width of the narrowest internal node; infinity for a single leaf.
  [[nodiscard]] double min_split_width() const { return min_split_width_; }
  /// The narrowest split node is below lambda wide (density bound broken).
  [[nodiscard]] bool split_below_lambda() const { return min_split_width_ < lambda_; }

  /// Leaves whose box overlaps `box` grown by `margin`.
  void leaves_near(const Box& box, double margin, std::vector<std::size_t>& out) const;

 private:
  void split(std::size_t node, std::span<const TangentSample> samples);

  std::vector<Node> nodes_;
  std::vector<Index> order_;
  std::vector<Vec2> points_;
  std::vector<Index> buffer_;
  std::vector<std::uint8_t> scratch_;
  std::size_t threshold_ = 1;
  std::size_t max_depth_ = kDefaultMaxDepth;
  double lambda_ = 0.0;
  double min_split_width_;
};

/// Data-driven density bound: max occupancy of a lambda-wide grid cell times
/// two, divided by lambda^2.
double estimate_rho_max(std::span<const TangentSample> samples, double lambda);

QuadTree build_quadtree(std::span<const TangentSample> samples, double rho_max, double lambda,
                        std::size_t max_depth = QuadTree::kDefaultMaxDepth);

/// Calls `visit(i, j)` at most once per unordered pair. Every pair with
/// |p_i - p_j| <= lambda is visited; farther pairs may appear.
void for_each_neighbor_pair(const QuadTree& tree, double lambda,
                            const std::function<void(Index, Index)>& visit);

/// Pairs from for_each_neighbor_pair that are at most lambda apart (up to a
/// relative 1e-9 slack).
std::vector<Edge> neighbor_pairs(const QuadTree& tree, double lambda);

/// The k samples nearest to samples[i] (excluding i), closest first; ties
/// go to the smaller index.
std::vector<Index> k_nearest(const QuadTree& tree, std::span<const TangentSample> samples, Index i,
                             std::size_t k);

/// Graph joining every sample to its k Euclidean-nearest samples.
PolyGraph k_nearest_graph(std::span<const TangentSample> samples, std::size_t k);

/// Candidate graph through the quadtree. Identical to the brute-force result.
PolyGraph fast_candidate_graph(std::span<const TangentSample> samples, const ZoneParams& zp,
                               Mode mode, std::optional<double> rho_max = std::nullopt);

}  // namespace tancurve
