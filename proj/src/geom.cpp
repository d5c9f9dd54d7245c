#include "tancurve/geom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tancurve {

namespace {

// Half-width of the lens between the two forbidden balls at distance r from p.
double lens_half_width(double kappa, double r) { return 0.5 * kappa * r * r; }

}  // namespace

UnorientedTangent::UnorientedTangent(Vec2 direction) {
  if (!direction.finite()) throw InvalidInput("tangent has non-finite components");
  const double n = direction.norm();
  if (n == 0.0) throw InvalidInput("zero tangent vector");
  // Already-unit input is kept bit-for-bit so construction is idempotent.
  Vec2 d = std::abs(n - 1.0) <= 4.0 * std::numeric_limits<double>::epsilon()
               ? direction
               : direction * (1.0 / n);
  if (d.x < 0.0 || (d.x == 0.0 && d.y < 0.0)) d = -d;
  // Signed zeros would break bitwise equality of d and -d.
  if (d.x == 0.0) d.x = 0.0;
  if (d.y == 0.0) d.y = 0.0;
  dir_ = d;
}

UnorientedTangent UnorientedTangent::from_angle(double radians) {
  return UnorientedTangent(Vec2{std::cos(radians), std::sin(radians)});
}

TangentSample::TangentSample(Vec2 position, UnorientedTangent t, Index sample_id)
    : pos(position), tangent(t), id(sample_id) {
  if (!pos.finite()) throw InvalidInput("sample position has non-finite components");
}

void ZoneParams::check() const {
  if (!(std::isfinite(kappa_max) && kappa_max > 0.0))
    throw InvalidInput("kappa_max must be finite and > 0");
  if (!(std::isfinite(epsilon) && epsilon > 0.0))
    throw InvalidInput("epsilon must be finite and > 0");
  if (!(std::isfinite(zeta) && zeta >= 0.0)) throw InvalidInput("zeta must be finite and >= 0");
  if (!(std::isfinite(xi) && xi >= 0.0)) throw InvalidInput("xi must be finite and >= 0");
  if (!(std::isfinite(tol) && tol >= 0.0)) throw InvalidInput("tol must be finite and >= 0");
}

double tangential_distance(Vec2 p, Vec2 q, const UnorientedTangent& m) {
  return std::abs(dot(p - q, m.dir()));
}

bool in_forbidden_zone(Vec2 q, Vec2 p, const UnorientedTangent& m, double kappa_max,
                       double tol) {
  const Vec2 v = q - p;
  const double r = v.norm();
  return std::abs(dot(v, m.normal())) > lens_half_width(kappa_max, r) + tol;
}

bool in_allowed_region(Vec2 q, Vec2 p, const UnorientedTangent& m, const ZoneParams& zp) {
  const Vec2 v = q - p;
  const double r = v.norm();
  if (r > zp.epsilon + zp.tol) return false;
  return std::abs(dot(v, m.normal())) <= lens_half_width(zp.kappa_max, r) + zp.tol;
}

bool in_noisy_allowed_region(Vec2 q, Vec2 p, const UnorientedTangent& m, const ZoneParams& zp,
                             double point_slack) {
  const Vec2 v = q - p;
  const double r = v.norm();
  if (r > zp.epsilon + point_slack + zp.tol) return false;

  double normal = std::abs(dot(v, m.normal()));
  if (zp.xi > 0.0 && r > 0.0) {
    const double phi = std::asin(std::clamp(normal / r, 0.0, 1.0));
    normal = r * std::sin(std::max(0.0, phi - zp.xi));
  }
  const double offset = std::max(0.0, normal - point_slack);
  const double reach = std::min(r + point_slack, std::max(zp.epsilon, r));
  return offset <= lens_half_width(zp.kappa_max, reach) + zp.tol;
}

}  // namespace tancurve
