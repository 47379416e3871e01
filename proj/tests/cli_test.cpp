#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

const std::string kCli = UDN_CLI_PATH;
const std::string kConfigs = UDN_CONFIG_DIR;

int run(const std::string& args) {
  const int status = std::system((kCli + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string temp_path(const std::string& name) {
  return ::testing::TempDir() + "udn_cli_" + name;
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST(Cli, ShippedConfigsRun) {
  for (const char* cmd : {"simulate", "capacity-curve", "energy-curve", "spectrum-plan",
                          "cost-compare", "classify"}) {
    const std::string out = temp_path(std::string(cmd) + ".csv");
    EXPECT_EQ(run(std::string(cmd) + " --config " + kConfigs + "/example.json --snapshots 3 --out " + out), 0)
        << cmd;
    EXPECT_FALSE(slurp(out).empty()) << cmd;
  }
}

TEST(Cli, SimulateIsByteIdenticalAcrossRunsAndThreads) {
  const std::string a = temp_path("a.csv"), b = temp_path("b.csv"), c = temp_path("c.csv");
  const std::string base = "simulate --config " + kConfigs + "/example.json --snapshots 20 --seed 5";
  ASSERT_EQ(run(base + " --threads 1 --out " + a), 0);
  ASSERT_EQ(run(base + " --threads 1 --out " + b), 0);
  ASSERT_EQ(run(base + " --threads 3 --out " + c), 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_EQ(slurp(a), slurp(c));
  ASSERT_EQ(run("simulate --config " + kConfigs + "/example.json --snapshots 20 --seed 6 --out " + b), 0);
  EXPECT_NE(slurp(a), slurp(b));
}

TEST(Cli, ExitCodes) {
  const std::string bad = temp_path("bad.json");
  write(bad, R"({"schema_version": 1, "radio": {"bandwidth_hz": -5}})");
  EXPECT_EQ(run("simulate --config " + bad), 2);
  write(bad, R"({"schema_version": 1, "channel": {"gain_c_db": 20, "gain_c_linear": 100}})");
  EXPECT_EQ(run("capacity-curve --config " + bad), 2);
  EXPECT_EQ(run("simulate --config /nonexistent/cfg.json"), 2);
  EXPECT_EQ(run("simulate --snapshots 0"), 2);
  EXPECT_EQ(run("no-such-command"), 2);

  const std::string zero_aps = temp_path("zero_aps.json");
  write(zero_aps, R"({"schema_version": 1, "densities": {"lambda_u_per_m2": 0.1, "lambda_ap_per_m2": 0}})");
  EXPECT_EQ(run("simulate --snapshots 2 --config " + zero_aps), 1);
  EXPECT_EQ(run("spectrum-plan --out /nonexistent/dir/out.csv"), 1);
  EXPECT_EQ(run("classify"), 0);
}

TEST(Cli, ConfigErrorNamesField) {
  const std::string bad = temp_path("bad2.json");
  write(bad, R"({"schema_version": 1, "simulation": {"snapshots": -1}})");
  const std::string err = temp_path("err.txt");
  const int status = std::system((kCli + " simulate --config " + bad + " 2>" + err).c_str());
  EXPECT_EQ(WEXITSTATUS(status), 2);
  EXPECT_NE(slurp(err).find("$.simulation.snapshots"), std::string::npos);
}
