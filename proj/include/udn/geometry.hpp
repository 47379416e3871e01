#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "udn/errors.hpp"

namespace udn {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

// Rectangular arena [0, width) x [0, height). With wrap the opposite edges are
// identified and distances use the minimum image.
class Region {
public:
  Region(double width, double height, bool wrap = true)
      : width_(width), height_(height), wrap_(wrap) {
    detail::require(std::isfinite(width) && width > 0.0, "region width must be > 0");
    detail::require(std::isfinite(height) && height > 0.0, "region height must be > 0");
  }

  double width() const noexcept { return width_; }
  double height() const noexcept { return height_; }
  bool wrap() const noexcept { return wrap_; }
  double area() const noexcept { return width_ * height_; }

  bool contains(const Point& p) const noexcept {
    return p.x >= 0.0 && p.x < width_ && p.y >= 0.0 && p.y < height_;
  }

private:
  double width_;
  double height_;
  bool wrap_;
};

struct PointPattern {
  std::vector<Point> points;

  std::size_t size() const noexcept { return points.size(); }
  bool empty() const noexcept { return points.empty(); }
  const Point& operator[](std::size_t i) const { return points[i]; }

  friend bool operator==(const PointPattern&, const PointPattern&) = default;
};

inline bool inside(const PointPattern& pattern, const Region& region) {
  return std::all_of(pattern.points.begin(), pattern.points.end(),
                     [&](const Point& p) { return region.contains(p); });
}

inline double distance(const Point& p, const Point& q, const Region& region) {
  double dx = std::abs(p.x - q.x);
  double dy = std::abs(p.y - q.y);
  if (region.wrap()) {
    dx = std::min(dx, region.width() - dx);
    dy = std::min(dy, region.height() - dy);
  }
  return std::sqrt(dx * dx + dy * dy);
}

namespace detail {

// Uniform in [0, upper). libstdc++'s canonical generator can round up to the
// upper bound, so such draws are rejected.
template <class Urbg>
double uniform_below(double upper, Urbg& rng) {
  std::uniform_real_distribution<double> dist(0.0, upper);
  for (;;) {
    const double v = dist(rng);
    if (v < upper) return v;
  }
}

}  // namespace detail

// `count` independent uniform points over the region.
template <class Urbg>
PointPattern sample_uniform_points(std::size_t count, const Region& region, Urbg& rng) {
  PointPattern out;
  out.points.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double x = detail::uniform_below(region.width(), rng);
    const double y = detail::uniform_below(region.height(), rng);
    out.points.push_back({x, y});
  }
  return out;
}

// Homogeneous Poisson point process: Poisson(intensity * area) count, then
// uniform placement.
template <class Urbg>
PointPattern sample_poisson_process(double intensity, const Region& region, Urbg& rng) {
  if (!(intensity >= 0.0) || !std::isfinite(intensity))
    throw InvalidParameter("intensity must be finite and >= 0");
  const double mean = intensity * region.area();
  if (mean == 0.0) return {};
  std::poisson_distribution<std::uint64_t> count_dist(mean);
  const auto count = static_cast<std::size_t>(count_dist(rng));
  return sample_uniform_points(count, region, rng);
}

struct Neighbor {
  std::size_t index = 0;
  double distance = 0.0;
};

// Exhaustive scan. Ties go to the lowest index.
inline Neighbor nearest_neighbor(const Point& p, const PointPattern& pattern, const Region& region,
                                 const std::set<std::size_t>* exclude = nullptr) {
  std::optional<Neighbor> best;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (exclude != nullptr && exclude->count(i) != 0) continue;
    const double d = distance(p, pattern[i], region);
    if (!best || d < best->distance) best = Neighbor{i, d};
  }
  if (!best) throw NoCandidate("nearest_neighbor: no candidate points");
  return *best;
}

// Uniform cell grid over a point set for nearest-neighbor queries. Returns the
// same answer as the exhaustive scan, including the lowest-index tie rule.
// Holds indices into the pattern it was built from, not a copy of it.
class SpatialIndex {
public:
  SpatialIndex(const PointPattern& pattern, const Region& region,
               double points_per_cell = 2.0)
      : pattern_(&pattern), region_(region) {
    const double n = static_cast<double>(std::max<std::size_t>(pattern.size(), 1));
    const double target_cell = std::sqrt(region.area() * points_per_cell / n);
    nx_ = clamp_cells(region.width() / target_cell);
    ny_ = clamp_cells(region.height() / target_cell);
    cell_w_ = region.width() / static_cast<double>(nx_);
    cell_h_ = region.height() / static_cast<double>(ny_);

    // Counting sort into a compressed layout; indices stay ascending per cell.
    offsets_.assign(nx_ * ny_ + 1, 0);
    std::vector<std::size_t> cell_of(pattern.size());
    for (std::size_t i = 0; i < pattern.size(); ++i) {
      cell_of[i] = cell_id(cell_x(pattern[i].x), cell_y(pattern[i].y));
      ++offsets_[cell_of[i] + 1];
    }
    for (std::size_t c = 0; c < nx_ * ny_; ++c) offsets_[c + 1] += offsets_[c];
    items_.resize(pattern.size());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (std::size_t i = 0; i < pattern.size(); ++i) items_[fill[cell_of[i]]++] = i;
  }

  template <class Excluded>
  std::optional<Neighbor> nearest_if(const Point& p, Excluded&& excluded) const {
    std::optional<Neighbor> best;
    const auto cx = static_cast<long>(cell_x(p.x));
    const auto cy = static_cast<long>(cell_y(p.y));
    const double cell_min = std::min(cell_w_, cell_h_);
    const long max_ring = static_cast<long>(std::max(nx_, ny_));

    auto scan_cell = [&](long ix, long iy) {
      if (region_.wrap()) {
        ix = wrap_index(ix, nx_);
        iy = wrap_index(iy, ny_);
      } else if (ix < 0 || iy < 0 || ix >= static_cast<long>(nx_) ||
                 iy >= static_cast<long>(ny_)) {
        return;
      }
      const std::size_t c = cell_id(static_cast<std::size_t>(ix), static_cast<std::size_t>(iy));
      for (std::size_t k = offsets_[c]; k < offsets_[c + 1]; ++k) {
        const std::size_t i = items_[k];
        if (excluded(i)) continue;
        const double d = distance(p, (*pattern_)[i], region_);
        if (!best || d < best->distance || (d == best->distance && i < best->index))
          best = Neighbor{i, d};
      }
    };

    for (long r = 0; r <= max_ring; ++r) {
      if (r == 0) {
        scan_cell(cx, cy);
      } else {
        for (long dx = -r; dx <= r; ++dx) {
          scan_cell(cx + dx, cy - r);
          scan_cell(cx + dx, cy + r);
        }
        for (long dy = -r + 1; dy <= r - 1; ++dy) {
          scan_cell(cx - r, cy + dy);
          scan_cell(cx + r, cy + dy);
        }
      }
      // Anything outside rings 0..r is at least r whole cells away.
      if (best && best->distance < static_cast<double>(r) * cell_min) break;
    }
    return best;
  }

  std::optional<Neighbor> nearest(const Point& p) const {
    return nearest_if(p, [](std::size_t) { return false; });
  }

private:
  static std::size_t clamp_cells(double v) {
    if (!std::isfinite(v) || v < 1.0) return 1;
    return static_cast<std::size_t>(std::min(v, 4096.0));
  }
  static long wrap_index(long i, std::size_t n) {
    const long m = static_cast<long>(n);
    i %= m;
    return i < 0 ? i + m : i;
  }
  std::size_t cell_x(double x) const {
    return std::min(static_cast<std::size_t>(x / cell_w_), nx_ - 1);
  }
  std::size_t cell_y(double y) const {
    return std::min(static_cast<std::size_t>(y / cell_h_), ny_ - 1);
  }
  std::size_t cell_id(std::size_t ix, std::size_t iy) const { return iy * nx_ + ix; }

  const PointPattern* pattern_;
  Region region_;
  std::size_t nx_ = 1;
  std::size_t ny_ = 1;
  double cell_w_ = 0.0;
  double cell_h_ = 0.0;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> items_;
};

}  // namespace udn
