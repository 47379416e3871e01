#pragma once

#include <cmath>
#include <limits>

#include "udn/errors.hpp"
#include "udn/radio.hpp"

namespace udn {

struct DensityPair {
  double lambda_ap = 0.0;  // APs per m^2
  double lambda_u = 0.0;   // users per m^2

  double ratio() const {
    if (!(lambda_u > 0.0)) throw InvalidParameter("density ratio needs lambda_u > 0");
    return lambda_ap / lambda_u;
  }
};

// Per-user power: c1 * lambda_ap^(-alpha/2) transmit term plus c2 idle power
// for every AP per user.
struct EnergyParams {
  double c1 = 1.0;
  double c2 = 1.0;
  double alpha = 2.0;

  void validate() const {
    detail::require(c1 >= 0.0 && std::isfinite(c1), "energy c1 must be >= 0");
    detail::require(c2 >= 0.0 && std::isfinite(c2), "energy c2 must be >= 0");
    detail::require(alpha > 0.0 && std::isfinite(alpha), "energy alpha must be > 0");
    detail::require(c1 > 0.0 || c2 > 0.0, "energy c1 and c2 cannot both be zero");
  }
};

// AP-to-user ratio at which the closed-form rate reaches the peak rate.
inline double critical_ratio(const RadioConfig& radio, double gain_c, double alpha) {
  const double sir_needed = std::exp2(radio.peak_rate_bps / radio.bandwidth_hz) - 1.0;
  return std::pow(sir_needed / gain_c, 2.0 / alpha);
}

// Per-user rate W log2(1 + c ratio^(alpha/2)), capped at R_max. The
// proportionality constant of the scaling law is taken as 1.
inline double per_user_rate_closed_form(double ratio, const RadioConfig& radio, double gain_c,
                                        double alpha) {
  detail::require(ratio >= 0.0, "ratio must be >= 0");
  // The branch point is only known to rounding accuracy; a few ulps below it
  // still count as saturated so the cap is hit exactly.
  constexpr double kBranchSlack = 8.0 * std::numeric_limits<double>::epsilon();
  if (ratio * (1.0 + kBranchSlack) >= critical_ratio(radio, gain_c, alpha))
    return radio.peak_rate_bps;
  return capped_shannon_rate(gain_c * std::pow(ratio, alpha / 2.0), radio);
}

inline double area_capacity_closed_form(const DensityPair& d, const RadioConfig& radio,
                                        double gain_c, double alpha) {
  if (d.lambda_u == 0.0) return 0.0;
  return d.lambda_u * per_user_rate_closed_form(d.ratio(), radio, gain_c, alpha);
}

inline double critical_ap_density(double lambda_u, const RadioConfig& radio, double gain_c,
                                  double alpha) {
  detail::require(lambda_u > 0.0, "lambda_u must be > 0");
  return lambda_u * critical_ratio(radio, gain_c, alpha);
}

inline double power_per_user(const DensityPair& d, const EnergyParams& p) {
  p.validate();
  detail::require(d.lambda_u > 0.0, "lambda_u must be > 0");
  detail::require(d.lambda_ap >= 0.0, "lambda_ap must be >= 0");
  if (d.lambda_ap == 0.0) {
    if (p.c1 > 0.0) throw DivergentInput("power_per_user: transmit term diverges at lambda_ap = 0");
    return 0.0;
  }
  return p.c1 * std::pow(d.lambda_ap, -p.alpha / 2.0) + p.c2 * d.lambda_ap / d.lambda_u;
}

// Stationary point of power_per_user in lambda_ap; unique since the function
// is strictly convex when both coefficients are positive.
inline double optimal_ap_density(double lambda_u, const EnergyParams& p) {
  p.validate();
  detail::require(lambda_u > 0.0, "lambda_u must be > 0");
  if (p.c1 == 0.0 || p.c2 == 0.0)
    throw NoInteriorMinimum("optimal_ap_density: needs c1 > 0 and c2 > 0");
  return std::pow(0.5 * p.alpha * p.c1 * lambda_u / p.c2, 2.0 / (p.alpha + 2.0));
}

}  // namespace udn
