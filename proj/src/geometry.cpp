#include "dlm/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace dlm {

double propagation_delay(const Position& p, const Position& sensor, double c) {
  return distance(p, sensor) / c;
}

double max_area_delay(const Scenario& s) {
  const Rect& a = s.search_area;
  Position corners[4] = {{a.xmin, a.ymin},
                         {a.xmin + a.width, a.ymin},
                         {a.xmin, a.ymin + a.height},
                         {a.xmin + a.width, a.ymin + a.height}};
  double worst = 0.0;
  for (const auto& sensor : s.sensors)
    for (const auto& corner : corners)
      worst = std::max(worst, propagation_delay(corner, sensor, s.c));
  return worst;
}

double default_tau_max(const Scenario& s, double f_s) {
  const Rect& a = s.search_area;
  double diag = std::hypot(a.width, a.height);
  double far = 0.0;
  Position corners[4] = {{a.xmin, a.ymin},
                         {a.xmin + a.width, a.ymin},
                         {a.xmin, a.ymin + a.height},
                         {a.xmin + a.width, a.ymin + a.height}};
  for (const auto& sensor : s.sensors)
    for (const auto& corner : corners)
      far = std::max(far, distance(corner, sensor));
  double tau = (diag + far) / s.c;
  double period = 1.0 / f_s;
  return std::ceil(tau / period - 1e-12) * period;
}

void validate_scenario(const Scenario& s) {
  if (s.sensors.empty() || s.sources.empty())
    throw Error(ErrorCode::InvalidArgument, "scenario needs sensors and sources");
  for (std::size_t q = 0; q < s.sources.size(); ++q) {
    if (!s.search_area.contains(s.sources[q]))
      throw Error(ErrorCode::SourceOutsideSearchArea,
                  "source " + std::to_string(q) + " outside the search area");
  }
  if (s.tau_max < max_area_delay(s))
    throw Error(ErrorCode::TauMaxTooSmall,
                "tau_max smaller than the largest in-area propagation delay");
}

}  // namespace dlm
