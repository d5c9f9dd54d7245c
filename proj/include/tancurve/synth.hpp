#pragma once

/// \file
/// \brief Synthetic figures with ground truth: analytic curves, epsilon
/// sampling, noise and spurious-point injection, and truth comparison.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "tancurve/geom.hpp"
#include "tancurve/graph.hpp"

namespace tancurve {

struct Circle {
  Vec2 center;
  double radius = 1.0;
};

struct Segment {
  Vec2 from;
  Vec2 to;
};

/// Open circular arc from `start_angle`, counter-clockwise by `sweep` radians.
struct Arc {
  Vec2 center;
  double radius = 1.0;
  double start_angle = 0.0;
  double sweep = 1.0;
};

/// Stadium: a rectangle capped by two half-discs, of overall half extents
/// `half_width` x `half_height`. Cap radius is the smaller half extent.
struct Oval {
  Vec2 center;
  double half_width = 1.0;
  double half_height = 0.5;
};

using CurveShape = std::variant<Circle, Segment, Arc, Oval>;

namespace curve {

double length(const CurveShape& c);
bool closed(const CurveShape& c);
/// Largest curvature of the shape, analytically.
double curvature_bound(const CurveShape& c);
/// Unit-speed point at arc length s in [0, length].
Vec2 point_at(const CurveShape& c, double s);
/// Unit derivative at arc length s.
Vec2 tangent_at(const CurveShape& c, double s);
/// Arc length of the point on the curve closest to q.
double closest_arclength(const CurveShape& c, Vec2 q);
/// Throws InvalidInput for degenerate shapes (zero radius, zero length...).
void check(const CurveShape& c);

}  // namespace curve

struct CurveSpec {
  CurveShape shape;
  /// Fixed number of samples; otherwise derived from epsilon.
  std::optional<std::size_t> samples;
};

/// Declarative figure description. Declared bounds are verified against
/// numerical measurements when a figure is sampled.
struct FigureSpec {
  std::vector<CurveSpec> curves;
  std::optional<double> kappa_max;
  std::optional<double> delta;
};

struct SamplingOptions {
  /// Nominal spacing as a fraction of epsilon when counts are derived.
  double fill = 0.75;
  /// Jitter as a fraction of the largest amplitude that keeps gaps within
  /// [min spacing, epsilon].
  double jitter = 1.0;
  /// Declared noise levels; when nonzero, adjacent samples are kept farther
  /// apart than (1 + 2^(3/2)) (2 xi epsilon + zeta).
  double zeta = 0.0;
  double xi = 0.0;
  /// Dense sampling step for the curvature and separation measurements;
  /// 0 picks max(epsilon / 16, total length / 20000).
  double resolution = 0.0;
};

/// Raised when a figure spec fails its curvature or separation verification.
class FigureSpecError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

struct Provenance {
  static constexpr std::int32_t kSpurious = -1;
  std::int32_t curve = kSpurious;
  double t = 0.0;  ///< arc length along the curve

  [[nodiscard]] bool spurious() const { return curve == kSpurious; }
};

struct SyntheticFigure {
  std::vector<CurveShape> curves;
  double epsilon = 0.0;
  double kappa_max_actual = 0.0;
  /// Infinity when no pair of curve regions is constrained.
  double min_separation_actual = 0.0;
  double measurement_resolution = 0.0;
  /// Largest and smallest arc gap between consecutive samples.
  double max_arc_gap = 0.0;
  double min_arc_gap = 0.0;
  std::vector<TangentSample> samples;
  std::vector<Provenance> provenance;
  PolyGraph truth;
};

/// Minimum adjacent spacing required for noisy reconstruction.
double noisy_min_spacing(double epsilon, double zeta, double xi);

SyntheticFigure sample_figure(const FigureSpec& spec, double epsilon, std::uint64_t seed,
                              const SamplingOptions& options = {});

/// Displaces every sample by at most zeta (uniform on the disc) and rotates
/// every tangent by at most xi (uniform angle). Truth is unchanged.
SyntheticFigure inject_noise(const SyntheticFigure& fig, double zeta, double xi,
                             std::uint64_t seed);

struct BoundingBox {
  Vec2 min;
  Vec2 max;
};

BoundingBox bounding_box(std::span<const TangentSample> samples);

/// Appends `count` samples uniform in `box` with uniform tangent directions.
SyntheticFigure inject_spurious(const SyntheticFigure& fig, std::size_t count,
                                const BoundingBox& box, std::uint64_t seed);

struct CurveAccuracy {
  std::size_t truth_edges = 0;
  std::size_t recovered_edges = 0;
};

struct TruthDiff {
  std::vector<Edge> missing;
  std::vector<Edge> extra;
  /// Extra edges joining samples of two different curves.
  std::size_t cross_curve_edges = 0;
  /// Edges with at least one spurious endpoint.
  std::size_t spurious_edges = 0;
  std::vector<CurveAccuracy> per_curve;

  [[nodiscard]] bool exact() const { return missing.empty() && extra.empty(); }
};

TruthDiff compare_to_truth(const PolyGraph& result, const SyntheticFigure& fig);

/// Ready-made figure families.
namespace figures {

/// Circles of radius r and r + delta about the same centre.
FigureSpec concentric_circles(Vec2 center, double radius, double delta);
/// Two horizontal segments of the given length, delta apart.
FigureSpec parallel_segments(double length, double delta);
/// A circle and an oval side by side with `total` samples between them.
FigureSpec two_closed_curves(std::size_t total = 96);
/// An oval crossed by horizontal and vertical covering segments.
FigureSpec covered_oval();
/// `count` equal circles on a square grid with spacing `pitch`.
FigureSpec circle_grid(std::size_t count, double radius, double pitch);

}  // namespace figures

}  // namespace tancurve
