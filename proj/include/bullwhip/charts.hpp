#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bullwhip/harness.hpp"

namespace bullwhip {

/// Self-contained SVG: one on-hand polyline per entity, disruption window
/// shaded when given. Throws ConfigError on an empty trace.
std::string render_timeseries_svg(const std::vector<DayRecord>& trace,
                                  std::optional<std::pair<int, int>> shaded_window,
                                  const std::string& title);

/// Cost vs service scatter with one labeled marker per strategy. An empty
/// point set yields a valid chart with bare axes.
std::string render_frontier_svg(const std::vector<FrontierPoint>& points,
                                const std::string& title);

}  // namespace bullwhip
