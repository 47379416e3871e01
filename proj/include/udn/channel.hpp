#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>

#include "udn/errors.hpp"
#include "udn/geometry.hpp"
#include "udn/snapshot.hpp"

namespace udn {

enum class InterferenceMode {
  NearestInterferer,  // only the closest other active AP
  SumInterference,    // every other active AP
};

// Power-law propagation. Transmit power is common to all APs and cancels in
// every ratio computed here, so it is not a parameter.
struct ChannelModel {
  double alpha = 2.0;
  // Linear interference-suppression gain. Applied inside the rate formula,
  // never to the geometric SIR.
  double gain_c = 1.0;
  InterferenceMode mode = InterferenceMode::NearestInterferer;
  double d_min = 0.1;

  void validate() const {
    detail::require(std::isfinite(alpha) && alpha > 0.0, "channel alpha must be > 0");
    detail::require(std::isfinite(gain_c) && gain_c > 0.0, "channel gain_c must be > 0");
    detail::require(std::isfinite(d_min) && d_min > 0.0, "channel d_min must be > 0");
  }
};

inline double path_gain(double d, const ChannelModel& model) {
  return std::pow(std::max(d, model.d_min), -model.alpha);
}

// Linear SIR, or nullopt when no other AP is active (no interference at all).
using Sir = std::optional<double>;

inline Sir sir_at_user(std::size_t user, const Snapshot& snap, const ChannelModel& model) {
  if (user >= snap.users().size())
    throw InvalidState("sir_at_user: user " + std::to_string(user) + " is not associated");
  const Region& region = snap.region();
  const Point& u = snap.users()[user];
  const std::size_t serving = snap.serving(user);
  const double signal = path_gain(distance(u, snap.aps()[serving], region), model);
  const std::size_t own_slot = snap.active_slot(serving);

  if (model.mode == InterferenceMode::NearestInterferer) {
    const auto hit = snap.active_index().nearest_if(
        u, [own_slot](std::size_t slot) { return slot == own_slot; });
    if (!hit) return std::nullopt;
    return signal / path_gain(hit->distance, model);
  }

  const PointPattern& active = snap.active_points();
  double interference = 0.0;
  bool any = false;
  for (std::size_t slot = 0; slot < active.size(); ++slot) {
    if (slot == own_slot) continue;
    interference += path_gain(distance(u, active[slot], region), model);
    any = true;
  }
  if (!any) return std::nullopt;
  return signal / interference;
}

}  // namespace udn
