#pragma once

/// \file
/// \brief Planar vectors, unoriented tangents and the closed-form zone
/// predicates used to decide whether two samples may be adjacent on a curve.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tancurve {

using Index = std::uint32_t;

/// Raised when an input violates a documented precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr bool operator==(const Vec2&) const = default;

  [[nodiscard]] double norm() const { return std::hypot(x, y); }
  [[nodiscard]] constexpr double norm2() const { return x * x + y * y; }
  [[nodiscard]] bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }
constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }

/// Clockwise rotation by a quarter turn: (x, y) -> (y, -x).
constexpr Vec2 perp(Vec2 v) { return {v.y, -v.x}; }

/// Unit direction defined only up to sign.
///
/// The stored direction is normalized and canonicalized so that its first
/// nonzero coordinate (x, then y) is positive; `d` and `-d` construct
/// identical objects.
class UnorientedTangent {
 public:
  /// Default is the +x axis.
  UnorientedTangent() = default;

  /// Throws InvalidInput for a zero or non-finite direction.
  explicit UnorientedTangent(Vec2 direction);

  static UnorientedTangent from_angle(double radians);

  [[nodiscard]] Vec2 dir() const { return dir_; }
  [[nodiscard]] Vec2 normal() const { return perp(dir_); }
  bool operator==(const UnorientedTangent&) const = default;

 private:
  Vec2 dir_{1.0, 0.0};
};

/// A point with an unoriented unit tangent and a stable 0-based id.
struct TangentSample {
  Vec2 pos;
  UnorientedTangent tangent;
  Index id = 0;

  TangentSample() = default;
  /// Throws InvalidInput for non-finite positions.
  TangentSample(Vec2 position, UnorientedTangent t, Index sample_id);
};

inline constexpr double kDefaultTolerance = 1e-9;

struct ZoneParams {
  double kappa_max = 1.0;  ///< curvature bound, 1/length
  double epsilon = 0.1;    ///< sample spacing bound
  double zeta = 0.0;       ///< point noise amplitude
  double xi = 0.0;         ///< tangent noise amplitude, radians
  double tol = kDefaultTolerance;

  /// Range checks only (positivity, finiteness). The epsilon * kappa bound is
  /// reported by the validation layer, not enforced here.
  void check() const;
};

/// |(p - q) . m|
double tangential_distance(Vec2 p, Vec2 q, const UnorientedTangent& m);

/// True iff q lies in the open union of the two balls of radius 1/kappa
/// centred at p +- m_perp / kappa, evaluated as |v . m_perp| > kappa |v|^2 / 2 + tol
/// with v = q - p.
bool in_forbidden_zone(Vec2 q, Vec2 p, const UnorientedTangent& m, double kappa_max,
                       double tol = kDefaultTolerance);

/// Closed epsilon-ball about p minus the forbidden zone.
bool in_allowed_region(Vec2 q, Vec2 p, const UnorientedTangent& m, const ZoneParams& zp);

/// Conservative superset of the union of allowed regions over all base points
/// within zeta of p and tangents within xi of m, dilated by `point_slack`.
///
/// With r = |q - p| and phi the angle between q - p and the tangent line:
///   (a) r <= epsilon + point_slack + tol, and
///   (b) max(0, r sin(max(0, phi - xi)) - point_slack)
///         <= kappa/2 * min(r + point_slack, max(epsilon, r))^2 + tol.
/// Callers building the candidate graph pass point_slack = 2 zeta. With
/// xi = point_slack = 0 the result equals in_allowed_region exactly.
bool in_noisy_allowed_region(Vec2 q, Vec2 p, const UnorientedTangent& m, const ZoneParams& zp,
                             double point_slack);

}  // namespace tancurve
