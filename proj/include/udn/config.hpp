#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "udn/channel.hpp"
#include "udn/econ.hpp"
#include "udn/errors.hpp"
#include "udn/model.hpp"
#include "udn/radio.hpp"
#include "udn/simulate.hpp"

namespace udn {

// Config validation failure; the message starts with the offending field path.
class ConfigError : public Error {
public:
  using Error::Error;
};

inline constexpr int kSchemaVersion = 1;

struct CurveGrid {
  double ratio_min = 1e-2;
  double ratio_max = 1e3;
  std::size_t points = 201;
};

struct PlanRow {
  std::string scenario;
  Technology technology = Technology::UDN;
  double area_m2 = 150.0;
  double target_capacity_bps_m2 = 1e9;
  double lambda_u = 0.2;
  // WiFi rows
  double peak_rate_bps = 7e9;
  double channel_bw_hz = 160e6;
  Rounding rounding = Rounding::Ceil;
  // UDN rows
  double ratio = 5.0;
  double gain_c = 1.0;
  double alpha = 2.0;
};

struct ScenarioConfig {
  Region region{100.0, 100.0, true};
  double lambda_u = 0.05;
  // One simulated point per entry; each is an AP density.
  std::vector<double> lambda_ap_sweep{0.1, 0.25, 0.5, 1.0, 2.5};
  // Set when the sweep was given as ratios, so the CSV echoes them exactly.
  std::optional<std::vector<double>> ratio_sweep{std::vector<double>{2, 5, 10, 20, 50}};
  ChannelModel channel{};
  RadioConfig radio{};
  SimulationOptions simulation{};
  EnergyParams energy{};
  CurveGrid curve{};
  std::vector<ArchitectureCost> architectures = default_architectures();
  std::vector<double> cost_targets{0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.8, 1.0,
                                   1.2, 1.4, 1.6, 1.8, 2.0};
  bool include_reference_plans = true;
  std::vector<PlanRow> plan_rows;
  double classify_available_hz = 6e9;
  double classify_required_hz = 480e6;
  Environment classify_environment = Environment::Closed;
};

namespace detail {

using nlohmann::json;

// Object accessor that tracks consumed keys so typos are reported.
class ObjectReader {
public:
  ObjectReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) fail(path_, "expected an object");
  }

  [[noreturn]] static void fail(const std::string& path, const std::string& what) {
    throw ConfigError(path + ": " + what);
  }

  std::string path(const std::string& key) const { return path_ + "." + key; }
  bool has(const std::string& key) const { return j_.contains(key); }

  const json* get(const std::string& key) {
    seen_.insert(key);
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  double number(const std::string& key, double fallback) {
    const json* v = get(key);
    if (!v) return fallback;
    if (!v->is_number()) fail(path(key), "expected a number");
    return v->get<double>();
  }

  std::optional<double> optional_number(const std::string& key) {
    const json* v = get(key);
    if (!v || v->is_null()) return std::nullopt;
    if (!v->is_number()) fail(path(key), "expected a number");
    return v->get<double>();
  }

  std::uint64_t unsigned_integer(const std::string& key, std::uint64_t fallback) {
    const json* v = get(key);
    if (!v) return fallback;
    if (!v->is_number_unsigned()) fail(path(key), "expected a non-negative integer");
    return v->get<std::uint64_t>();
  }

  bool boolean(const std::string& key, bool fallback) {
    const json* v = get(key);
    if (!v) return fallback;
    if (!v->is_boolean()) fail(path(key), "expected true or false");
    return v->get<bool>();
  }

  std::string string(const std::string& key, const std::string& fallback) {
    const json* v = get(key);
    if (!v) return fallback;
    if (!v->is_string()) fail(path(key), "expected a string");
    return v->get<std::string>();
  }

  std::vector<double> numbers(const std::string& key) {
    const json* v = get(key);
    if (!v) return {};
    if (v->is_number()) return {v->get<double>()};
    if (!v->is_array()) fail(path(key), "expected a number or an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < v->size(); ++i) {
      if (!(*v)[i].is_number())
        fail(path(key) + "[" + std::to_string(i) + "]", "expected a number");
      out.push_back((*v)[i].get<double>());
    }
    return out;
  }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it)
      if (!seen_.count(it.key())) fail(path(it.key()), "unknown key");
  }

private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

inline void check(bool ok, const std::string& path, const std::string& what) {
  if (!ok) ObjectReader::fail(path, what);
}

// gain_c_linear and gain_c_db are mutually exclusive.
inline double read_gain(ObjectReader& r, double fallback) {
  const bool lin = r.has("gain_c_linear");
  const bool db = r.has("gain_c_db");
  if (lin && db) ObjectReader::fail(r.path("gain_c_db"), "gain_c_linear and gain_c_db are mutually exclusive");
  if (db) {
    const double v = r.number("gain_c_db", 0.0);
    check(std::isfinite(v), r.path("gain_c_db"), "must be finite");
    return db_to_linear(v);
  }
  const double v = r.number("gain_c_linear", fallback);
  check(std::isfinite(v) && v > 0.0, r.path("gain_c_linear"), "must be > 0");
  return v;
}

inline CountMode read_count_mode(ObjectReader& r, const std::string& key) {
  const std::string s = r.string(key, "poisson");
  if (s == "poisson") return CountMode::Poisson;
  if (s == "fixed") return CountMode::Fixed;
  ObjectReader::fail(r.path(key), "expected \"poisson\" or \"fixed\"");
}

inline bool positive(double v) { return std::isfinite(v) && v > 0.0; }
inline bool non_negative(double v) { return std::isfinite(v) && v >= 0.0; }

}  // namespace detail

inline ScenarioConfig parse_config(const nlohmann::json& root) {
  using detail::check;
  using detail::ObjectReader;
  ScenarioConfig cfg;
  ObjectReader top(root, "$");

  const nlohmann::json* version = top.get("schema_version");
  check(version != nullptr, "$.schema_version", "missing");
  check(version->is_number_integer() && version->get<long>() == kSchemaVersion,
        "$.schema_version", "unsupported version (expected " + std::to_string(kSchemaVersion) + ")");

  if (const auto* j = top.get("region")) {
    ObjectReader r(*j, "$.region");
    const double w = r.number("width_m", cfg.region.width());
    const double h = r.number("height_m", cfg.region.height());
    check(detail::positive(w), r.path("width_m"), "must be > 0");
    check(detail::positive(h), r.path("height_m"), "must be > 0");
    cfg.region = Region(w, h, r.boolean("wrap", cfg.region.wrap()));
    r.finish();
  }

  if (const auto* j = top.get("densities")) {
    ObjectReader r(*j, "$.densities");
    cfg.lambda_u = r.number("lambda_u_per_m2", cfg.lambda_u);
    check(detail::non_negative(cfg.lambda_u), r.path("lambda_u_per_m2"), "must be >= 0");
    const bool by_ratio = r.has("ratio");
    const bool by_density = r.has("lambda_ap_per_m2");
    if (by_ratio && by_density)
      ObjectReader::fail(r.path("lambda_ap_per_m2"), "ratio and lambda_ap_per_m2 are mutually exclusive");
    if (by_density) {
      cfg.lambda_ap_sweep = r.numbers("lambda_ap_per_m2");
      cfg.ratio_sweep.reset();
      for (std::size_t i = 0; i < cfg.lambda_ap_sweep.size(); ++i)
        check(detail::non_negative(cfg.lambda_ap_sweep[i]),
              r.path("lambda_ap_per_m2") + "[" + std::to_string(i) + "]", "must be >= 0");
      check(!cfg.lambda_ap_sweep.empty(), r.path("lambda_ap_per_m2"), "must not be empty");
    } else {
      std::vector<double> ratios = by_ratio ? r.numbers("ratio") : *cfg.ratio_sweep;
      check(!ratios.empty(), r.path("ratio"), "must not be empty");
      for (std::size_t i = 0; i < ratios.size(); ++i)
        check(detail::non_negative(ratios[i]), r.path("ratio") + "[" + std::to_string(i) + "]",
              "must be >= 0");
      cfg.ratio_sweep = ratios;
    }
    r.finish();
  }
  if (cfg.ratio_sweep) {
    cfg.lambda_ap_sweep.clear();
    for (double ratio : *cfg.ratio_sweep) cfg.lambda_ap_sweep.push_back(ratio * cfg.lambda_u);
  }

  if (const auto* j = top.get("channel")) {
    ObjectReader r(*j, "$.channel");
    cfg.channel.alpha = r.number("alpha", cfg.channel.alpha);
    check(detail::positive(cfg.channel.alpha), r.path("alpha"), "must be > 0");
    cfg.channel.gain_c = detail::read_gain(r, cfg.channel.gain_c);
    const std::string mode = r.string("mode", "nearest_interferer");
    if (mode == "nearest_interferer")
      cfg.channel.mode = InterferenceMode::NearestInterferer;
    else if (mode == "sum_interference")
      cfg.channel.mode = InterferenceMode::SumInterference;
    else
      ObjectReader::fail(r.path("mode"), "expected \"nearest_interferer\" or \"sum_interference\"");
    cfg.channel.d_min = r.number("d_min_m", cfg.channel.d_min);
    check(detail::positive(cfg.channel.d_min), r.path("d_min_m"), "must be > 0");
    r.finish();
  }
  cfg.energy.alpha = cfg.channel.alpha;

  if (const auto* j = top.get("radio")) {
    ObjectReader r(*j, "$.radio");
    cfg.radio.bandwidth_hz = r.number("bandwidth_hz", cfg.radio.bandwidth_hz);
    cfg.radio.peak_rate_bps = r.number("peak_rate_bps", cfg.radio.peak_rate_bps);
    check(detail::positive(cfg.radio.bandwidth_hz), r.path("bandwidth_hz"), "must be > 0");
    check(detail::positive(cfg.radio.peak_rate_bps), r.path("peak_rate_bps"), "must be > 0");
    r.finish();
  }

  if (const auto* j = top.get("simulation")) {
    ObjectReader r(*j, "$.simulation");
    cfg.simulation.snapshots = r.unsigned_integer("snapshots", cfg.simulation.snapshots);
    check(cfg.simulation.snapshots >= 1, r.path("snapshots"), "must be >= 1");
    cfg.simulation.seed = r.unsigned_integer("seed", cfg.simulation.seed);
    cfg.simulation.threads =
        static_cast<unsigned>(r.unsigned_integer("threads", cfg.simulation.threads));
    cfg.simulation.ap_count = detail::read_count_mode(r, "ap_count_mode");
    cfg.simulation.user_count = detail::read_count_mode(r, "user_count_mode");
    r.finish();
  }

  if (const auto* j = top.get("energy")) {
    ObjectReader r(*j, "$.energy");
    cfg.energy.c1 = r.number("c1", cfg.energy.c1);
    cfg.energy.c2 = r.number("c2", cfg.energy.c2);
    check(detail::non_negative(cfg.energy.c1), r.path("c1"), "must be >= 0");
    check(detail::non_negative(cfg.energy.c2), r.path("c2"), "must be >= 0");
    check(cfg.energy.c1 > 0.0 || cfg.energy.c2 > 0.0, r.path("c2"),
          "c1 and c2 cannot both be zero");
    r.finish();
  }

  if (const auto* j = top.get("curve")) {
    ObjectReader r(*j, "$.curve");
    cfg.curve.ratio_min = r.number("ratio_min", cfg.curve.ratio_min);
    cfg.curve.ratio_max = r.number("ratio_max", cfg.curve.ratio_max);
    cfg.curve.points = r.unsigned_integer("points", cfg.curve.points);
    check(detail::positive(cfg.curve.ratio_min), r.path("ratio_min"), "must be > 0");
    check(detail::positive(cfg.curve.ratio_max) && cfg.curve.ratio_max > cfg.curve.ratio_min,
          r.path("ratio_max"), "must be > ratio_min");
    check(cfg.curve.points >= 2, r.path("points"), "must be >= 2");
    r.finish();
  }

  if (const auto* j = top.get("architectures")) {
    check(j->is_array(), "$.architectures", "expected an array");
    cfg.architectures.clear();
    for (std::size_t i = 0; i < j->size(); ++i) {
      ObjectReader r((*j)[i], "$.architectures[" + std::to_string(i) + "]");
      ArchitectureCost a;
      a.name = r.string("name", "");
      check(!a.name.empty(), r.path("name"), "must be a non-empty string");
      a.fixed_cost = r.number("fixed_cost", 0.0);
      a.per_ap_cost = r.number("per_ap_cost", 0.0);
      a.backhaul_per_ap = r.number("backhaul_per_ap", 0.0);
      check(detail::non_negative(a.fixed_cost), r.path("fixed_cost"), "must be >= 0");
      check(detail::non_negative(a.per_ap_cost), r.path("per_ap_cost"), "must be >= 0");
      check(detail::non_negative(a.backhaul_per_ap), r.path("backhaul_per_ap"), "must be >= 0");
      a.gain_c = detail::read_gain(r, 1.0);
      a.capacity_ceiling_bps_m2 = r.optional_number("capacity_ceiling_bps_m2");
      check(!a.capacity_ceiling_bps_m2 || detail::positive(*a.capacity_ceiling_bps_m2),
            r.path("capacity_ceiling_bps_m2"), "must be > 0");
      r.finish();
      cfg.architectures.push_back(std::move(a));
    }
  }

  if (const auto* j = top.get("cost")) {
    ObjectReader r(*j, "$.cost");
    if (r.has("targets_bps_hz_m2")) {
      cfg.cost_targets = r.numbers("targets_bps_hz_m2");
      check(!cfg.cost_targets.empty(), r.path("targets_bps_hz_m2"), "must not be empty");
      for (std::size_t i = 0; i < cfg.cost_targets.size(); ++i)
        check(detail::positive(cfg.cost_targets[i]),
              r.path("targets_bps_hz_m2") + "[" + std::to_string(i) + "]", "must be > 0");
    }
    r.finish();
  }

  if (const auto* j = top.get("plan")) {
    ObjectReader r(*j, "$.plan");
    cfg.include_reference_plans = r.boolean("include_reference", true);
    if (const auto* rows = r.get("rows")) {
      check(rows->is_array(), r.path("rows"), "expected an array");
      for (std::size_t i = 0; i < rows->size(); ++i) {
        ObjectReader row((*rows)[i], r.path("rows") + "[" + std::to_string(i) + "]");
        PlanRow p;
        p.scenario = row.string("scenario", "custom_" + std::to_string(i));
        const std::string tech = row.string("technology", "udn");
        if (tech == "wifi")
          p.technology = Technology::WiFiChannelized;
        else if (tech == "udn")
          p.technology = Technology::UDN;
        else
          ObjectReader::fail(row.path("technology"), "expected \"wifi\" or \"udn\"");
        p.area_m2 = row.number("area_m2", p.area_m2);
        p.target_capacity_bps_m2 = row.number("target_capacity_bps_m2", p.target_capacity_bps_m2);
        p.lambda_u = row.number("lambda_u_per_m2", p.lambda_u);
        check(detail::positive(p.area_m2), row.path("area_m2"), "must be > 0");
        check(detail::positive(p.target_capacity_bps_m2), row.path("target_capacity_bps_m2"),
              "must be > 0");
        check(detail::positive(p.lambda_u), row.path("lambda_u_per_m2"), "must be > 0");
        if (p.technology == Technology::WiFiChannelized) {
          p.peak_rate_bps = row.number("peak_rate_bps", p.peak_rate_bps);
          p.channel_bw_hz = row.number("channel_bw_hz", p.channel_bw_hz);
          check(detail::positive(p.peak_rate_bps), row.path("peak_rate_bps"), "must be > 0");
          check(detail::positive(p.channel_bw_hz), row.path("channel_bw_hz"), "must be > 0");
          const std::string rounding = row.string("rounding", "ceil");
          if (rounding == "ceil")
            p.rounding = Rounding::Ceil;
          else if (rounding == "nearest")
            p.rounding = Rounding::Nearest;
          else
            ObjectReader::fail(row.path("rounding"), "expected \"ceil\" or \"nearest\"");
        } else {
          p.ratio = row.number("ratio", p.ratio);
          p.alpha = row.number("alpha", p.alpha);
          check(detail::positive(p.ratio), row.path("ratio"), "must be > 0");
          check(detail::positive(p.alpha), row.path("alpha"), "must be > 0");
          p.gain_c = detail::read_gain(row, p.gain_c);
        }
        row.finish();
        cfg.plan_rows.push_back(std::move(p));
      }
    }
    r.finish();
  }

  if (const auto* j = top.get("classify")) {
    ObjectReader r(*j, "$.classify");
    cfg.classify_available_hz = r.number("available_spectrum_hz", cfg.classify_available_hz);
    cfg.classify_required_hz = r.number("required_spectrum_hz", cfg.classify_required_hz);
    check(detail::positive(cfg.classify_available_hz), r.path("available_spectrum_hz"),
          "must be > 0");
    check(detail::positive(cfg.classify_required_hz), r.path("required_spectrum_hz"),
          "must be > 0");
    const std::string env = r.string("environment", "closed");
    if (env == "closed")
      cfg.classify_environment = Environment::Closed;
    else if (env == "open")
      cfg.classify_environment = Environment::Open;
    else
      ObjectReader::fail(r.path("environment"), "expected \"closed\" or \"open\"");
    r.finish();
  }

  top.finish();
  return cfg;
}

inline ScenarioConfig parse_config_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("$: malformed JSON: ") + e.what());
  }
  return parse_config(j);
}

inline ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("$: cannot open config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

}  // namespace udn
