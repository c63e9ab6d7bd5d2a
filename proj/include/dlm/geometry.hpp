#pragma once

#include <cmath>
#include <vector>

#include "dlm/errors.hpp"

namespace dlm {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

struct Position {
  double x = 0.0;  // meters
  double y = 0.0;  // meters
};

inline double distance(const Position& a, const Position& b) {
  double dx = a.x - b.x;
  double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

// Axis-aligned search rectangle. Containment is half-open ([min, min+size))
// so that a w x h area at resolution d holds exactly (w/d)*(h/d) grid cells.
struct Rect {
  double xmin = 0.0;
  double ymin = 0.0;
  double width = 0.0;
  double height = 0.0;

  bool contains(const Position& p) const {
    return p.x >= xmin && p.x < xmin + width && p.y >= ymin &&
           p.y < ymin + height;
  }
  static Rect centered(double cx, double cy, double width, double height) {
    return Rect{cx - width / 2.0, cy - height / 2.0, width, height};
  }
};

// Scene description shared by every stage: sensor and source positions, the
// search area, the maximum delay covered by the delay grids, and the
// propagation speed. Immutable after construction; safe to share across
// concurrent trials.
struct Scenario {
  std::vector<Position> sensors;
  std::vector<Position> sources;
  Rect search_area;
  double tau_max = 0.0;          // seconds
  double c = kSpeedOfLight;      // m/s

  int num_sensors() const { return static_cast<int>(sensors.size()); }
  int num_sources() const { return static_cast<int>(sources.size()); }
};

// Propagation delay ||p - sensor|| / c of a direct path.
double propagation_delay(const Position& p, const Position& sensor, double c);

// Largest direct-path delay from any sensor to any corner of the area;
// every in-area path fits in [0, tau] iff tau is at least this.
double max_area_delay(const Scenario& s);

// Default tau_max rule: (area diagonal + farthest sensor-to-corner
// distance)/c, rounded up to a whole sample period of f_s.
double default_tau_max(const Scenario& s, double f_s);

// Throws Error(SourceOutsideSearchArea) or Error(TauMaxTooSmall) when the
// scenario invariants fail.
void validate_scenario(const Scenario& s);

}  // namespace dlm
