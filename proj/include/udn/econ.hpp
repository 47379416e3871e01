#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "udn/errors.hpp"
#include "udn/model.hpp"
#include "udn/radio.hpp"

namespace udn {

enum class Technology { WiFiChannelized, UDN };
enum class Rounding { Ceil, Nearest };

inline std::string_view to_string(Technology t) {
  return t == Technology::UDN ? "UDN" : "WiFi";
}

struct SpectrumPlan {
  std::size_t ap_count = 1;
  double spectrum_hz = 0.0;
  double ratio = 0.0;  // lambda_ap / lambda_u
  double inter_ap_distance_m = 0.0;
  Technology technology = Technology::UDN;
};

// Spectrum needed so that lambda_u W log2(1 + c ratio^(alpha/2)) meets the
// target area capacity.
inline double required_spectrum_udn(double target_capacity_bps_m2, double lambda_u, double ratio,
                                    double gain_c, double alpha) {
  detail::require(target_capacity_bps_m2 > 0.0, "target capacity must be > 0");
  detail::require(lambda_u > 0.0, "lambda_u must be > 0");
  detail::require(ratio >= 0.0, "ratio must be >= 0");
  detail::require(gain_c > 0.0, "gain_c must be > 0");
  detail::require(alpha > 0.0, "alpha must be > 0");
  const double bits_per_hz = std::log2(1.0 + gain_c * std::pow(ratio, alpha / 2.0));
  if (!(bits_per_hz > 0.0))
    throw Unattainable("required_spectrum_udn: zero spectral efficiency at ratio " +
                       std::to_string(ratio));
  return target_capacity_bps_m2 / (lambda_u * bits_per_hz);
}

// UDN deployment of a room: ratio * lambda_u * area APs sharing one band.
inline SpectrumPlan udn_spectrum_plan(double area_m2, double target_capacity_bps_m2,
                                      double lambda_u, double ratio, double gain_c,
                                      double alpha) {
  detail::require(area_m2 > 0.0, "area must be > 0");
  SpectrumPlan plan;
  plan.technology = Technology::UDN;
  plan.ratio = ratio;
  plan.ap_count = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::llround(ratio * lambda_u * area_m2)));
  plan.inter_ap_distance_m = std::sqrt(area_m2 / static_cast<double>(plan.ap_count));
  plan.spectrum_hz = required_spectrum_udn(target_capacity_bps_m2, lambda_u, ratio, gain_c, alpha);
  return plan;
}

// Channelized WiFi without reuse: every AP delivers its peak rate on its own
// orthogonal channel, so spectrum grows linearly with the AP count.
// lambda_u only feeds the reported ratio.
inline SpectrumPlan wifi_spectrum_plan(double area_m2, double target_capacity_bps_m2,
                                       double peak_rate_bps, double channel_bw_hz,
                                       Rounding rounding, double lambda_u = 0.2) {
  detail::require(area_m2 > 0.0, "area must be > 0");
  detail::require(target_capacity_bps_m2 > 0.0, "target capacity must be > 0");
  detail::require(peak_rate_bps > 0.0, "peak rate must be > 0");
  detail::require(channel_bw_hz > 0.0, "channel bandwidth must be > 0");
  detail::require(lambda_u > 0.0, "lambda_u must be > 0");
  const double exact = area_m2 * target_capacity_bps_m2 / peak_rate_bps;
  const double rounded = rounding == Rounding::Ceil ? std::ceil(exact) : std::round(exact);
  SpectrumPlan plan;
  plan.technology = Technology::WiFiChannelized;
  plan.ap_count = std::max<std::size_t>(1, static_cast<std::size_t>(rounded));
  plan.spectrum_hz = static_cast<double>(plan.ap_count) * channel_bw_hz;
  plan.inter_ap_distance_m = std::sqrt(area_m2 / static_cast<double>(plan.ap_count));
  plan.ratio = static_cast<double>(plan.ap_count) / (lambda_u * area_m2);
  return plan;
}

struct NamedPlan {
  std::string scenario;
  double area_m2 = 0.0;
  SpectrumPlan plan;
};

// The four reference rooms at 1 Gbit/s/m^2 and 0.2 users/m^2: 802.11ac at
// 7 Gbit/s per 160 MHz channel, and a UDN at ratio 5 with c = 1 and c = 20 dB.
inline std::vector<NamedPlan> reference_spectrum_plans() {
  constexpr double kTarget = 1e9;
  constexpr double kUsers = 0.2;
  constexpr double kWifiPeak = 7e9;
  constexpr double kWifiChannel = 160e6;
  constexpr double kUdnRatio = 5.0;
  constexpr double kAlpha = 2.0;
  return {
      {"small_conference_room", 20.0,
       wifi_spectrum_plan(20.0, kTarget, kWifiPeak, kWifiChannel, Rounding::Ceil, kUsers)},
      {"cafeteria_wifi", 150.0,
       wifi_spectrum_plan(150.0, kTarget, kWifiPeak, kWifiChannel, Rounding::Nearest, kUsers)},
      {"cafeteria_udn", 150.0, udn_spectrum_plan(150.0, kTarget, kUsers, kUdnRatio, 1.0, kAlpha)},
      {"cafeteria_udn_bf", 150.0,
       udn_spectrum_plan(150.0, kTarget, kUsers, kUdnRatio, db_to_linear(20.0), kAlpha)},
  };
}

struct ArchitectureCost {
  std::string name;
  double fixed_cost = 0.0;
  double per_ap_cost = 0.0;
  double backhaul_per_ap = 0.0;
  double gain_c = 1.0;
  std::optional<double> capacity_ceiling_bps_m2;

  void validate() const {
    detail::require(fixed_cost >= 0.0, "architecture " + name + ": fixed_cost must be >= 0");
    detail::require(per_ap_cost >= 0.0, "architecture " + name + ": per_ap_cost must be >= 0");
    detail::require(backhaul_per_ap >= 0.0,
                    "architecture " + name + ": backhaul_per_ap must be >= 0");
    detail::require(gain_c > 0.0, "architecture " + name + ": gain_c must be > 0");
    detail::require(!capacity_ceiling_bps_m2 || *capacity_ceiling_bps_m2 > 0.0,
                    "architecture " + name + ": capacity ceiling must be > 0");
  }
};

// Illustrative parameter sets for the three design families. Cost units are
// arbitrary (one "unit" per AP-equivalent); they are not measured values.
inline std::vector<ArchitectureCost> default_architectures() {
  return {
      {"wifi_like", 0.0, 1.0, 0.0, 1.0, 5e8},
      {"pico_cellular", 50.0, 2.0, 3.0, 1.0, std::nullopt},
      {"centralized", 500.0, 3.0, 7.0, db_to_linear(20.0), std::nullopt},
  };
}

struct CostPoint {
  double target_bps_hz_m2 = 0.0;
  double required_lambda_ap = 0.0;
  std::optional<double> cost;  // nullopt: unattainable
};

// AP density needed for a given area spectral efficiency (bit/s/Hz/m^2),
// obtained by inverting the unsaturated branch with W normalized out.
inline double required_ap_density(double target_bps_hz_m2, double lambda_u, double gain_c,
                                  double alpha) {
  detail::require(target_bps_hz_m2 > 0.0, "target must be > 0");
  detail::require(lambda_u > 0.0, "lambda_u must be > 0");
  return lambda_u *
         std::pow(std::expm1(target_bps_hz_m2 / lambda_u * std::log(2.0)) / gain_c, 2.0 / alpha);
}

// A target is unattainable when it exceeds the architecture's ceiling, or when
// each user would need more than the peak rate (more APs cannot help there).
inline std::vector<CostPoint> cost_curve(const ArchitectureCost& arch, double lambda_u,
                                         const RadioConfig& radio, double alpha,
                                         const std::vector<double>& targets) {
  arch.validate();
  radio.validate();
  std::vector<CostPoint> out;
  out.reserve(targets.size());
  for (double eta : targets) {
    CostPoint pt;
    pt.target_bps_hz_m2 = eta;
    pt.required_lambda_ap = required_ap_density(eta, lambda_u, arch.gain_c, alpha);
    const double area_capacity = eta * radio.bandwidth_hz;
    const bool over_ceiling =
        arch.capacity_ceiling_bps_m2 && area_capacity > *arch.capacity_ceiling_bps_m2;
    const bool over_peak = area_capacity / lambda_u > radio.peak_rate_bps;
    if (!over_ceiling && !over_peak && std::isfinite(pt.required_lambda_ap))
      pt.cost = arch.fixed_cost + (arch.per_ap_cost + arch.backhaul_per_ap) * pt.required_lambda_ap;
    out.push_back(pt);
  }
  return out;
}

enum class Environment { Closed, Open };
enum class RegionClass { A, B, C };
enum class Recommendation { WiFiLike, PicoCellularReuse, CentralizedCoordinated };

struct ScenarioClass {
  RegionClass region = RegionClass::A;
  Recommendation recommended = Recommendation::WiFiLike;
};

inline std::string_view to_string(RegionClass r) {
  switch (r) {
    case RegionClass::A: return "A";
    case RegionClass::B: return "B";
    case RegionClass::C: return "C";
  }
  return "?";
}

inline std::string_view to_string(Recommendation r) {
  switch (r) {
    case Recommendation::WiFiLike: return "WiFiLike";
    case Recommendation::PicoCellularReuse: return "PicoCellularReuse";
    case Recommendation::CentralizedCoordinated: return "CentralizedCoordinated";
  }
  return "?";
}

// Enough spectrum for a low-complexity design wins outright; otherwise walls
// decide between local reuse and central coordination.
inline ScenarioClass classify_scenario(double available_spectrum_hz,
                                       double required_spectrum_hz, Environment env) {
  detail::require(available_spectrum_hz > 0.0, "available spectrum must be > 0");
  detail::require(required_spectrum_hz > 0.0, "required spectrum must be > 0");
  if (available_spectrum_hz >= required_spectrum_hz)
    return {RegionClass::A, Recommendation::WiFiLike};
  if (env == Environment::Closed) return {RegionClass::B, Recommendation::PicoCellularReuse};
  return {RegionClass::C, Recommendation::CentralizedCoordinated};
}

}  // namespace udn
