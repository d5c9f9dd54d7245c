#include "tancurve/validate.hpp"

#include <cmath>

namespace tancurve {

using nlohmann::json;

ZoneParams ReconstructionParams::zone() const {
  return ZoneParams{kappa_max, epsilon, zeta, xi, tol};
}

DenoiseParams ReconstructionParams::denoise() const {
  return DenoiseParams{alpha, sweeps, closed_figures};
}

void ReconstructionParams::check() const {
  zone().check();
  if (mode == Algorithm::denoise) denoise().check();
  if (rho_max && !(std::isfinite(*rho_max) && *rho_max > 0.0))
    throw InvalidInput("rho_max must be finite and > 0");
}

const Check* ValidationReport::first_strict_failure() const {
  for (const auto& c : checks)
    if (c.enforced && !(c.evaluated && c.holds)) return &c;
  return nullptr;
}

bool ValidationReport::all_hold() const {
  for (const auto& c : checks)
    if (c.evaluated && !c.holds) return false;
  return true;
}

ValidationError::ValidationError(const Check& failed)
    : std::runtime_error("validation failed: " + failed.inequality +
                         (failed.evaluated ? " does not hold (" + std::to_string(failed.lhs) +
                                                 " vs " + std::to_string(failed.rhs) + ")"
                                           : " cannot be evaluated (missing input)")),
      check(failed) {}

namespace {

Check greater(std::string name, std::string inequality, std::optional<double> lhs, double rhs,
              bool enforced) {
  Check c{std::move(name), std::move(inequality), lhs.value_or(0.0), rhs, lhs.has_value(), false,
          enforced};
  c.holds = c.evaluated && c.lhs > c.rhs;
  return c;
}

}  // namespace

ValidationReport validate(const ReconstructionParams& p, std::optional<double> delta,
                          std::optional<double> spacing) {
  const double k = p.kappa_max;
  const double e = p.epsilon;
  const bool noisy = p.mode == Algorithm::noisy;
  // Without a declared delta the noise-free separation is skipped; the noisy
  // one is still enforced.
  const bool noise_free = !noisy;

  ValidationReport r;
  // epsilon < 1 / (kappa_m sqrt 2), written as rhs > lhs for uniformity.
  {
    Check c{"curvature_epsilon", "epsilon < 1/(kappa_m sqrt(2))", e, 1.0 / (k * std::sqrt(2.0)),
            true, false, true};
    c.holds = c.lhs < c.rhs;
    r.checks.push_back(c);
  }
  r.checks.push_back(
      greater("separation_noise_free", "delta > 2 kappa_m epsilon^2", delta, 2.0 * k * e * e,
              noise_free && delta.has_value()));
  r.checks.push_back(greater("separation_noisy", "delta > 4 zeta + 4 epsilon xi + 2.1 kappa_m epsilon^2",
                             delta, 4.0 * p.zeta + 4.0 * e * p.xi + 2.1 * k * e * e, noisy));
  r.checks.push_back(greater("separation_noisy_input",
                             "delta > 4 zeta + 2 epsilon xi + 2.1 kappa_m epsilon^2", delta,
                             4.0 * p.zeta + 2.0 * e * p.xi + 2.1 * k * e * e, false));
  r.checks.push_back(greater("noisy_min_spacing",
                             "min adjacent spacing > (1 + 2^(3/2)) (2 xi epsilon + zeta)", spacing,
                             (1.0 + std::pow(2.0, 1.5)) * (2.0 * p.xi * e + p.zeta), false));

  if (p.strict_validation) {
    if (const Check* f = r.first_strict_failure()) throw ValidationError(*f);
  }
  return r;
}

json to_json(const Check& c) {
  json j = {{"name", c.name},
            {"inequality", c.inequality},
            {"evaluated", c.evaluated},
            {"holds", c.holds},
            {"enforced", c.enforced},
            {"rhs", c.rhs}};
  j["lhs"] = c.evaluated ? json(c.lhs) : json(nullptr);
  return j;
}

json to_json(const ValidationReport& r) {
  json arr = json::array();
  for (const auto& c : r.checks) arr.push_back(to_json(c));
  return arr;
}

json to_json(const ReconstructionParams& p) {
  json j = {{"kappa_max", p.kappa_max},
            {"epsilon", p.epsilon},
            {"zeta", p.zeta},
            {"xi", p.xi},
            {"alpha", p.alpha},
            {"sweeps", p.sweeps},
            {"tol", p.tol},
            {"mode", to_string(p.mode)},
            {"strict", p.strict_validation},
            {"pair_source", to_string(p.pair_source)},
            {"closed", p.closed_figures},
            {"seed", p.seed}};
  j["rho_max"] = p.rho_max ? json(*p.rho_max) : json(nullptr);
  return j;
}

const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::noise_free: return "noise_free";
    case Algorithm::noisy: return "noisy";
    case Algorithm::denoise: return "denoise";
  }
  return "?";
}

const char* to_string(PairSource s) { return s == PairSource::brute_force ? "brute" : "quadtree"; }

Algorithm algorithm_from_string(const std::string& s) {
  if (s == "noise_free" || s == "noise-free") return Algorithm::noise_free;
  if (s == "noisy") return Algorithm::noisy;
  if (s == "denoise") return Algorithm::denoise;
  throw InvalidInput("unknown mode '" + s + "'");
}

PairSource pair_source_from_string(const std::string& s) {
  if (s == "brute" || s == "brute_force") return PairSource::brute_force;
  if (s == "quadtree") return PairSource::quadtree;
  throw InvalidInput("unknown pair source '" + s + "'");
}

}  // namespace tancurve
