#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <random>
#include <thread>
#include <vector>

#include "udn/channel.hpp"
#include "udn/errors.hpp"
#include "udn/geometry.hpp"
#include "udn/radio.hpp"
#include "udn/snapshot.hpp"

namespace udn {

// Rate for one user given its geometric SIR. No interference means the
// equipment cap is the only limit.
inline double user_rate(const Sir& sir, const RadioConfig& radio, double gain_c) {
  if (!sir) return radio.peak_rate_bps;
  return capped_shannon_rate(gain_c * *sir, radio);
}

enum class CountMode {
  Poisson,  // counts drawn from Poisson(lambda * area)
  Fixed,    // counts fixed at round(lambda * area)
};

struct SimulationOptions {
  std::size_t snapshots = 100;
  std::uint64_t seed = 1;
  // 0 selects std::thread::hardware_concurrency().
  unsigned threads = 1;
  CountMode ap_count = CountMode::Poisson;
  CountMode user_count = CountMode::Poisson;
};

struct CapacityEstimate {
  double mean_area_capacity_bps_per_m2 = 0.0;
  double standard_error_of_area_capacity = 0.0;
  double mean_user_rate_bps = 0.0;
  double max_user_rate_bps = 0.0;
  std::vector<double> sir_samples;  // snapshot order, then user order
  std::size_t no_interference_count = 0;
  std::size_t user_count = 0;
  std::size_t snapshot_count = 0;
};

// Per-user results of one realization.
struct SnapshotResult {
  double area_capacity_bps_per_m2 = 0.0;
  double rate_sum_bps = 0.0;
  double max_rate_bps = 0.0;
  std::vector<double> sir;
  std::size_t no_interference = 0;
  std::size_t users = 0;
};

// Rates of co-served users are time-shared equally by their AP.
inline SnapshotResult evaluate_snapshot(const Snapshot& snap, const ChannelModel& channel,
                                        const RadioConfig& radio) {
  SnapshotResult r;
  r.users = snap.users().size();
  r.sir.reserve(r.users);
  for (std::size_t u = 0; u < r.users; ++u) {
    const Sir sir = sir_at_user(u, snap, channel);
    if (sir)
      r.sir.push_back(*sir);
    else
      ++r.no_interference;
    const double rate =
        user_rate(sir, radio, channel.gain_c) / static_cast<double>(snap.load(snap.serving(u)));
    r.rate_sum_bps += rate;
    r.max_rate_bps = std::max(r.max_rate_bps, rate);
  }
  r.area_capacity_bps_per_m2 = r.rate_sum_bps / snap.region().area();
  return r;
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

template <class Urbg>
PointPattern sample_points(double intensity, const Region& region, CountMode mode, Urbg& rng) {
  if (mode == CountMode::Poisson) return sample_poisson_process(intensity, region, rng);
  if (!(intensity >= 0.0)) throw InvalidParameter("intensity must be >= 0");
  const auto count = static_cast<std::size_t>(std::llround(intensity * region.area()));
  return sample_uniform_points(count, region, rng);
}

}  // namespace detail

// Seed of snapshot `index`; a function of (seed, index) only.
inline std::uint64_t snapshot_seed(std::uint64_t seed, std::size_t index) {
  return detail::splitmix64(seed ^ detail::splitmix64(static_cast<std::uint64_t>(index)));
}

inline SnapshotResult simulate_snapshot(double lambda_ap, double lambda_u, const Region& region,
                                        const ChannelModel& channel, const RadioConfig& radio,
                                        const SimulationOptions& opts, std::size_t index) {
  std::mt19937_64 rng(snapshot_seed(opts.seed, index));
  PointPattern aps = detail::sample_points(lambda_ap, region, opts.ap_count, rng);
  PointPattern users = detail::sample_points(lambda_u, region, opts.user_count, rng);
  const Snapshot snap(std::move(aps), std::move(users), region);
  return evaluate_snapshot(snap, channel, radio);
}

// Monte Carlo area capacity. Snapshots may run on several threads; results
// are reduced in snapshot order, so the estimate does not depend on the
// thread count.
inline CapacityEstimate estimate_area_capacity(double lambda_ap, double lambda_u,
                                               const Region& region, const ChannelModel& channel,
                                               const RadioConfig& radio,
                                               const SimulationOptions& opts) {
  detail::require(opts.snapshots >= 1, "snapshots must be >= 1");
  detail::require(lambda_ap >= 0.0 && std::isfinite(lambda_ap), "lambda_ap must be >= 0");
  detail::require(lambda_u >= 0.0 && std::isfinite(lambda_u), "lambda_u must be >= 0");
  channel.validate();
  radio.validate();
  if (lambda_ap == 0.0 && lambda_u > 0.0)
    throw NoCandidate("estimate_area_capacity: users present but AP density is zero");

  const std::size_t n = opts.snapshots;
  std::vector<SnapshotResult> results(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        results[i] = simulate_snapshot(lambda_ap, lambda_u, region, channel, radio, opts, i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  unsigned threads = opts.threads == 0 ? std::thread::hardware_concurrency() : opts.threads;
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  CapacityEstimate est;
  est.snapshot_count = n;
  double sum = 0.0;
  double rate_sum = 0.0;
  for (const auto& r : results) {
    sum += r.area_capacity_bps_per_m2;
    rate_sum += r.rate_sum_bps;
    est.user_count += r.users;
    est.no_interference_count += r.no_interference;
    est.max_user_rate_bps = std::max(est.max_user_rate_bps, r.max_rate_bps);
    est.sir_samples.insert(est.sir_samples.end(), r.sir.begin(), r.sir.end());
  }
  const double mean = sum / static_cast<double>(n);
  double sq = 0.0;
  for (const auto& r : results) {
    const double d = r.area_capacity_bps_per_m2 - mean;
    sq += d * d;
  }
  est.mean_area_capacity_bps_per_m2 = mean;
  est.standard_error_of_area_capacity =
      n > 1 ? std::sqrt(sq / static_cast<double>(n - 1) / static_cast<double>(n)) : 0.0;
  est.mean_user_rate_bps =
      est.user_count > 0 ? rate_sum / static_cast<double>(est.user_count) : 0.0;
  return est;
}

inline double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + static_cast<long>(mid), values.end());
  const double upper = values[mid];
  if (values.size() % 2 == 1) return upper;
  const double lower = *std::max_element(values.begin(), values.begin() + static_cast<long>(mid));
  return 0.5 * (lower + upper);
}

}  // namespace udn
