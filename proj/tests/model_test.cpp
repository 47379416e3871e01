#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "udn/model.hpp"

namespace {

using udn::DensityPair;
using udn::EnergyParams;
using udn::RadioConfig;

constexpr double kHuge = 1e300;

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

// Index of the smallest power_per_user over a log-spaced grid.
std::pair<std::vector<double>, std::size_t> grid_minimum(double lambda_u, const EnergyParams& p,
                                                         double lo, double hi, std::size_t n) {
  std::vector<double> grid(n);
  std::size_t best = 0;
  double best_v = INFINITY;
  for (std::size_t i = 0; i < n; ++i) {
    grid[i] = lo * std::pow(hi / lo, static_cast<double>(i) / static_cast<double>(n - 1));
    const double v = udn::power_per_user({grid[i], lambda_u}, p);
    if (v < best_v) {
      best_v = v;
      best = i;
    }
  }
  return {grid, best};
}

}  // namespace

TEST(PerUserRate, Examples) {
  EXPECT_DOUBLE_EQ(udn::per_user_rate_closed_form(1.0, RadioConfig{1.0, kHuge}, 1.0, 2.0), 1.0);
  // 150 APs for 30 users in 150 m^2 with ~2 GHz of spectrum gives ~1 Gbit/s/m^2.
  const double rate = udn::per_user_rate_closed_form(5.0, RadioConfig{1.934e9, kHuge}, 1.0, 2.0);
  EXPECT_NEAR(rate, 5.0e9, 0.001 * 5.0e9);
  EXPECT_NEAR(0.2 * rate, 1.0e9, 0.001 * 1.0e9);
}

TEST(PerUserRate, ExactlyPeakBeyondCriticalRatio) {
  const RadioConfig radio{1e8, 7e8};
  const double crit = udn::critical_ratio(radio, 3.0, 2.5);
  for (double f : {1.0, 1.0 + 1e-15, 1.5, 10.0, 1e6})
    EXPECT_EQ(udn::per_user_rate_closed_form(crit * f, radio, 3.0, 2.5), radio.peak_rate_bps);
  EXPECT_LT(udn::per_user_rate_closed_form(crit * 0.99, radio, 3.0, 2.5), radio.peak_rate_bps);
  EXPECT_THROW(udn::per_user_rate_closed_form(-1.0, radio, 1.0, 2.0), udn::InvalidParameter);
}

TEST(PerUserRate, MonotoneInRatioGainAndBandwidth) {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const double alpha = 1.0 + 5.0 * u01(rng);
    const double gain = std::pow(10.0, -1.0 + 4.0 * u01(rng));
    const RadioConfig radio{std::pow(10.0, 6.0 + 3.0 * u01(rng)), std::pow(10.0, 7.0 + 4.0 * u01(rng))};
    const double r1 = std::pow(10.0, -3.0 + 6.0 * u01(rng));
    const double r2 = r1 * (1.0 + 3.0 * u01(rng));
    const double base = udn::per_user_rate_closed_form(r1, radio, gain, alpha);
    EXPECT_LE(base, udn::per_user_rate_closed_form(r2, radio, gain, alpha));
    EXPECT_LE(base, udn::per_user_rate_closed_form(r1, radio, gain * 2.0, alpha));
    EXPECT_LE(base, udn::per_user_rate_closed_form(
                        r1, RadioConfig{radio.bandwidth_hz * 2.0, radio.peak_rate_bps}, gain, alpha));
    EXPECT_LE(base, radio.peak_rate_bps);
  }
}

TEST(PerUserRate, ContinuousAtBranchPoint) {
  const RadioConfig radio{2e8, 1.3e9};
  const double crit = udn::critical_ratio(radio, 7.0, 3.0);
  const double below = udn::per_user_rate_closed_form(crit * (1 - 1e-12), radio, 7.0, 3.0);
  EXPECT_LT(rel(below, radio.peak_rate_bps), 1e-9);
}

TEST(AreaCapacity, Examples) {
  const RadioConfig radio{1e9, 2e9};
  const double lu = 0.3;
  const double crit = udn::critical_ap_density(lu, radio, 1.0, 2.0);
  EXPECT_EQ(udn::area_capacity_closed_form({crit * 2, lu}, radio, 1.0, 2.0), 2e9 * lu);
  const double one = udn::area_capacity_closed_form({0.6, 0.3}, RadioConfig{1e9, kHuge}, 1.0, 2.0);
  const double two = udn::area_capacity_closed_form({1.2, 0.6}, RadioConfig{1e9, kHuge}, 1.0, 2.0);
  EXPECT_DOUBLE_EQ(two, 2.0 * one);
  EXPECT_EQ(udn::area_capacity_closed_form({1.0, 0.0}, radio, 1.0, 2.0), 0.0);
  // Beamformed UDN room: c = 20 dB, ~557.5 MHz.
  const double bf = udn::area_capacity_closed_form({1.0, 0.2}, RadioConfig{5.575e8, kHuge},
                                                   udn::db_to_linear(20.0), 2.0);
  EXPECT_NEAR(bf, 1.0e9, 1e-3 * 1.0e9);
}

TEST(CriticalDensity, Examples) {
  EXPECT_NEAR(udn::critical_ap_density(0.2, RadioConfig{1e9, 1e9}, 1.0, 2.0), 0.2, 1e-15);
  EXPECT_NEAR(udn::critical_ap_density(0.2, RadioConfig{1e9, 1e9}, 100.0, 2.0), 0.002, 1e-17);
  EXPECT_LT(udn::critical_ap_density(0.2, RadioConfig{1e9, 1e-3}, 1.0, 2.0), 1e-11);
  EXPECT_THROW(udn::critical_ap_density(0.0, RadioConfig{}, 1.0, 2.0), udn::InvalidParameter);
}

TEST(CriticalDensity, IsExactInverse) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double alpha = 1.0 + 5.0 * u01(rng);
    const double gain = std::pow(10.0, -1.0 + 3.0 * u01(rng));
    const double lu = std::pow(10.0, -3.0 + 3.0 * u01(rng));
    const double w = std::pow(10.0, 7.0 + 3.0 * u01(rng));
    const RadioConfig r{w, w * (0.1 + 10.0 * u01(rng))};
    const double crit = udn::critical_ap_density(lu, r, gain, alpha);
    // The open branch evaluated at the critical ratio, without the cap.
    const double open = r.bandwidth_hz * std::log2(1.0 + gain * std::pow(crit / lu, alpha / 2.0));
    EXPECT_LT(rel(open, r.peak_rate_bps), 1e-9);
    EXPECT_LT(rel(udn::per_user_rate_closed_form(crit / lu, r, gain, alpha), r.peak_rate_bps), 1e-9);
  }
}

TEST(PowerPerUser, Examples) {
  EXPECT_DOUBLE_EQ(udn::power_per_user({3.0, 1.5}, {0.0, 2.0, 2.0}), 2.0 * 3.0 / 1.5);
  EXPECT_DOUBLE_EQ(udn::power_per_user({4.0, 1.0}, {1.0, 0.0, 2.0}), 0.25);
  EXPECT_DOUBLE_EQ(udn::power_per_user({1.0, 1.0}, {1.0, 1.0, 2.0}), 2.0);
}

TEST(PowerPerUser, Errors) {
  EXPECT_THROW(udn::power_per_user({0.0, 1.0}, {1.0, 1.0, 2.0}), udn::DivergentInput);
  EXPECT_EQ(udn::power_per_user({0.0, 1.0}, {0.0, 1.0, 2.0}), 0.0);
  EXPECT_THROW(udn::power_per_user({1.0, 1.0}, {0.0, 0.0, 2.0}), udn::InvalidParameter);
  EXPECT_THROW(udn::power_per_user({1.0, 1.0}, {1.0, -1.0, 2.0}), udn::InvalidParameter);
}

TEST(PowerPerUser, JointDensityScaling) {
  const EnergyParams p{2.0, 0.5, 3.0};
  for (double k : {0.1, 2.0, 17.0}) {
    const double la = 0.7, lu = 0.2;
    const double expect = p.c1 * std::pow(k * la, -p.alpha / 2.0) + p.c2 * la / lu;
    EXPECT_NEAR(udn::power_per_user({k * la, k * lu}, p), expect, 1e-12 * expect);
  }
}

TEST(OptimalDensity, Examples) {
  EXPECT_NEAR(udn::optimal_ap_density(1.0, {1.0, 1.0, 2.0}), 1.0, 1e-15);
  EXPECT_NEAR(udn::optimal_ap_density(1.0, {4.0, 1.0, 2.0}), 2.0, 1e-15);
  EXPECT_THROW(udn::optimal_ap_density(1.0, {0.0, 1.0, 2.0}), udn::NoInteriorMinimum);
  EXPECT_THROW(udn::optimal_ap_density(1.0, {1.0, 0.0, 2.0}), udn::NoInteriorMinimum);
}

TEST(OptimalDensity, UnitCaseMatchesGridSearch) {
  const EnergyParams p{1.0, 1.0, 2.0};
  const auto [grid, best] = grid_minimum(1.0, p, 0.01, 100.0, 2001);
  EXPECT_NEAR(std::log(grid[best]), std::log(udn::optimal_ap_density(1.0, p)),
              std::log(grid[1] / grid[0]));
}

TEST(OptimalDensity, RandomParamsMatchGridAndPowerIsConvex) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const EnergyParams p{std::pow(10.0, -2.0 + 4.0 * u01(rng)), std::pow(10.0, -2.0 + 4.0 * u01(rng)),
                         1.0 + 5.0 * u01(rng)};
    const double lu = std::pow(10.0, -2.0 + 2.0 * u01(rng));
    const double opt = udn::optimal_ap_density(lu, p);
    const auto [grid, best] = grid_minimum(lu, p, opt * 1e-2, opt * 1e2, 1001);
    EXPECT_NEAR(std::log(grid[best]), std::log(opt), std::log(grid[1] / grid[0]));
    for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
      const double v = udn::power_per_user({grid[k], lu}, p);
      const double w = udn::power_per_user({grid[k + 1], lu}, p);
      if (grid[k + 1] <= opt) {
        EXPECT_GT(v, w);
      } else if (grid[k] >= opt) {
        EXPECT_LT(v, w);
      }
    }
  }
}
