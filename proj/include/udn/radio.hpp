#pragma once

#include <algorithm>
#include <cmath>

#include "udn/errors.hpp"

namespace udn {

struct RadioConfig {
  double bandwidth_hz = 1e9;    // W_SYS
  double peak_rate_bps = 1e10;  // R_max

  void validate() const {
    detail::require(std::isfinite(bandwidth_hz) && bandwidth_hz > 0.0,
                    "radio bandwidth_hz must be > 0");
    detail::require(peak_rate_bps > 0.0, "radio peak_rate_bps must be > 0");
  }
};

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

// Shannon rate with the equipment cap.
inline double capped_shannon_rate(double effective_sir, const RadioConfig& radio) {
  return std::min(radio.bandwidth_hz * std::log2(1.0 + effective_sir), radio.peak_rate_bps);
}

}  // namespace udn
