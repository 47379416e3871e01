#pragma once

#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "udn/config.hpp"
#include "udn/econ.hpp"
#include "udn/model.hpp"
#include "udn/simulate.hpp"

namespace udn {

inline constexpr const char* kUnattainable = "unattainable";

// Full-precision scientific notation; 17 significant digits round-trip.
inline std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

inline std::string format_number(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string(kUnattainable);
}

// Log-spaced grid including both endpoints.
inline std::vector<double> log_grid(double lo, double hi, std::size_t points) {
  std::vector<double> out;
  out.reserve(points);
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (std::size_t i = 0; i < points; ++i) {
    const double t = points == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(points - 1);
    out.push_back(std::exp(a + t * (b - a)));
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

inline void cmd_simulate(const ScenarioConfig& cfg, std::ostream& out) {
  out << "lambda_ap_per_m2,lambda_u_per_m2,ratio,mean_area_capacity_bps_m2,stderr_bps_m2,"
         "mean_user_rate_bps,median_sir\n";
  for (std::size_t i = 0; i < cfg.lambda_ap_sweep.size(); ++i) {
    const double lambda_ap = cfg.lambda_ap_sweep[i];
    double ratio = 0.0;
    if (cfg.ratio_sweep)
      ratio = (*cfg.ratio_sweep)[i];
    else
      ratio = cfg.lambda_u > 0.0 ? lambda_ap / cfg.lambda_u
                                 : std::numeric_limits<double>::infinity();
    const CapacityEstimate est = estimate_area_capacity(lambda_ap, cfg.lambda_u, cfg.region,
                                                        cfg.channel, cfg.radio, cfg.simulation);
    out << format_number(lambda_ap) << ',' << format_number(cfg.lambda_u) << ','
        << format_number(ratio) << ',' << format_number(est.mean_area_capacity_bps_per_m2) << ','
        << format_number(est.standard_error_of_area_capacity) << ','
        << format_number(est.mean_user_rate_bps) << ',' << format_number(median(est.sir_samples))
        << '\n';
  }
}

inline void cmd_capacity_curve(const ScenarioConfig& cfg, std::ostream& out) {
  out << "ratio,lambda_ap_per_m2,per_user_rate_bps,area_capacity_bps_m2\n";
  for (double ratio : log_grid(cfg.curve.ratio_min, cfg.curve.ratio_max, cfg.curve.points)) {
    const double rate =
        per_user_rate_closed_form(ratio, cfg.radio, cfg.channel.gain_c, cfg.channel.alpha);
    out << format_number(ratio) << ',' << format_number(ratio * cfg.lambda_u) << ','
        << format_number(rate) << ',' << format_number(rate * cfg.lambda_u) << '\n';
  }
}

inline void cmd_energy_curve(const ScenarioConfig& cfg, std::ostream& out) {
  if (!(cfg.lambda_u > 0.0)) throw InvalidParameter("energy curve needs lambda_u > 0");
  out << "ratio,lambda_ap_per_m2,power_per_user_w\n";
  for (double ratio : log_grid(cfg.curve.ratio_min, cfg.curve.ratio_max, cfg.curve.points)) {
    const DensityPair d{ratio * cfg.lambda_u, cfg.lambda_u};
    out << format_number(ratio) << ',' << format_number(d.lambda_ap) << ','
        << format_number(power_per_user(d, cfg.energy)) << '\n';
  }
}

inline std::vector<NamedPlan> spectrum_plans(const ScenarioConfig& cfg) {
  std::vector<NamedPlan> plans;
  if (cfg.include_reference_plans) plans = reference_spectrum_plans();
  for (const PlanRow& row : cfg.plan_rows) {
    SpectrumPlan plan =
        row.technology == Technology::WiFiChannelized
            ? wifi_spectrum_plan(row.area_m2, row.target_capacity_bps_m2, row.peak_rate_bps,
                                 row.channel_bw_hz, row.rounding, row.lambda_u)
            : udn_spectrum_plan(row.area_m2, row.target_capacity_bps_m2, row.lambda_u, row.ratio,
                                row.gain_c, row.alpha);
    plans.push_back({row.scenario, row.area_m2, plan});
  }
  return plans;
}

inline void cmd_spectrum_plan(const ScenarioConfig& cfg, std::ostream& out) {
  out << "scenario,technology,area_m2,ap_count,ratio,inter_ap_distance_m,spectrum_hz\n";
  for (const NamedPlan& p : spectrum_plans(cfg)) {
    out << p.scenario << ',' << to_string(p.plan.technology) << ',' << format_number(p.area_m2)
        << ',' << p.plan.ap_count << ',' << format_number(p.plan.ratio) << ','
        << format_number(p.plan.inter_ap_distance_m) << ',' << format_number(p.plan.spectrum_hz)
        << '\n';
  }
}

inline void cmd_cost_compare(const ScenarioConfig& cfg, std::ostream& out) {
  if (!(cfg.lambda_u > 0.0)) throw InvalidParameter("cost comparison needs lambda_u > 0");
  std::vector<std::vector<CostPoint>> curves;
  out << "target_bps_hz_m2";
  for (const ArchitectureCost& a : cfg.architectures) {
    out << ',' << a.name << "_cost_units";
    curves.push_back(cost_curve(a, cfg.lambda_u, cfg.radio, cfg.channel.alpha, cfg.cost_targets));
  }
  out << '\n';
  for (std::size_t i = 0; i < cfg.cost_targets.size(); ++i) {
    out << format_number(cfg.cost_targets[i]);
    for (const auto& curve : curves) out << ',' << format_number(curve[i].cost);
    out << '\n';
  }
}

inline void cmd_classify(const ScenarioConfig& cfg, std::ostream& out) {
  const ScenarioClass c = classify_scenario(cfg.classify_available_hz, cfg.classify_required_hz,
                                            cfg.classify_environment);
  out << to_string(c.region) << ',' << to_string(c.recommended) << '\n';
}

}  // namespace udn
