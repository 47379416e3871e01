#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <vector>

#include "udn/errors.hpp"
#include "udn/geometry.hpp"

namespace udn {

// One spatial realization: every user attached to its nearest AP, and the
// set of APs that serve at least one user. All other APs are silent.
class Snapshot {
public:
  Snapshot(PointPattern aps, PointPattern users, const Region& region)
      : aps_(std::move(aps)), users_(std::move(users)), region_(region) {
    if (!users_.empty() && aps_.empty())
      throw NoCandidate("build_snapshot: users present but no access points");

    load_.assign(aps_.size(), 0);
    serving_.reserve(users_.size());
    if (!users_.empty()) {
      const SpatialIndex index(aps_, region_);
      for (const Point& u : users_.points) {
        const std::size_t ap = index.nearest(u)->index;
        serving_.push_back(ap);
        ++load_[ap];
      }
    }
    for (std::size_t a = 0; a < aps_.size(); ++a) {
      if (load_[a] > 0) active_.push_back(a);
    }
    active_points_.points.reserve(active_.size());
    for (std::size_t a : active_) active_points_.points.push_back(aps_[a]);
    active_index_ = std::make_unique<SpatialIndex>(active_points_, region_);
  }

  Snapshot(const Snapshot&) = delete;
  Snapshot& operator=(const Snapshot&) = delete;
  Snapshot(Snapshot&&) = delete;
  Snapshot& operator=(Snapshot&&) = delete;

  const PointPattern& aps() const noexcept { return aps_; }
  const PointPattern& users() const noexcept { return users_; }
  const Region& region() const noexcept { return region_; }

  std::size_t serving(std::size_t user) const { return serving_.at(user); }
  const std::vector<std::size_t>& serving() const noexcept { return serving_; }

  // Ascending AP indices with load > 0.
  const std::vector<std::size_t>& active() const noexcept { return active_; }
  std::size_t load(std::size_t ap) const { return load_.at(ap); }

  // Active AP positions, in the order of active(), plus their index.
  const PointPattern& active_points() const noexcept { return active_points_; }
  const SpatialIndex& active_index() const noexcept { return *active_index_; }

  // Position of an active AP inside active(), or active().size() if idle.
  std::size_t active_slot(std::size_t ap) const {
    const auto it = std::lower_bound(active_.begin(), active_.end(), ap);
    return (it != active_.end() && *it == ap) ? static_cast<std::size_t>(it - active_.begin())
                                              : active_.size();
  }

private:
  PointPattern aps_;
  PointPattern users_;
  Region region_;
  std::vector<std::size_t> serving_;
  std::vector<std::size_t> load_;
  std::vector<std::size_t> active_;
  PointPattern active_points_;
  // Points into active_points_, hence the pinned (non-movable) snapshot.
  std::unique_ptr<SpatialIndex> active_index_;
};

inline std::unique_ptr<Snapshot> build_snapshot(PointPattern aps, PointPattern users,
                                                const Region& region) {
  return std::make_unique<Snapshot>(std::move(aps), std::move(users), region);
}

}  // namespace udn
