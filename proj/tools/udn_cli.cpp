#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "udn/commands.hpp"
#include "udn/config.hpp"

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;

using Command = std::function<void(const udn::ScenarioConfig&, std::ostream&)>;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ultra-dense indoor network simulator and planner"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> snapshots;
  std::optional<unsigned> threads;

  const std::map<std::string, std::pair<std::string, Command>> commands{
      {"simulate", {"Monte Carlo area capacity over the density sweep", udn::cmd_simulate}},
      {"capacity-curve", {"Closed-form per-user rate vs AP/user ratio", udn::cmd_capacity_curve}},
      {"energy-curve", {"Closed-form power per user vs AP/user ratio", udn::cmd_energy_curve}},
      {"spectrum-plan", {"Spectrum needed for a target area capacity", udn::cmd_spectrum_plan}},
      {"cost-compare", {"Deployment cost curves per architecture", udn::cmd_cost_compare}},
      {"classify", {"Architecture region for a spectrum/environment scenario", udn::cmd_classify}},
  };

  for (const auto& [name, entry] : commands) {
    CLI::App* sub = app.add_subcommand(name, entry.first);
    sub->add_option("--config", config_path, "Scenario configuration (JSON)");
    sub->add_option("--out", out_path, "Output CSV path (default: stdout)");
    sub->add_option("--seed", seed, "Override simulation.seed");
    sub->add_option("--snapshots", snapshots, "Override simulation.snapshots");
    sub->add_option("--threads", threads, "Override simulation.threads (0 = all cores)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  udn::ScenarioConfig cfg;
  try {
    if (!config_path.empty()) cfg = udn::load_config(config_path);
    if (seed) cfg.simulation.seed = *seed;
    if (snapshots) {
      if (*snapshots < 1) throw udn::ConfigError("--snapshots: must be >= 1");
      cfg.simulation.snapshots = *snapshots;
    }
    if (threads) cfg.simulation.threads = *threads;
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }

  const Command* command = nullptr;
  for (const auto& [name, entry] : commands)
    if (app.got_subcommand(name)) command = &entry.second;

  try {
    // Render fully before touching the output so failures leave no partial file.
    std::ostringstream csv;
    (*command)(cfg, csv);
    if (out_path.empty()) {
      std::cout << csv.str();
    } else {
      std::ofstream file(out_path, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open output file " + out_path);
      file << csv.str();
      if (!file) throw std::runtime_error("failed writing " + out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return 0;
}
