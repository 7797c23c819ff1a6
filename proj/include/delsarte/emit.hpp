#pragma once

#include <string>
#include <vector>

#include "delsarte/asymptotics.hpp"

namespace delsarte {

/// CSV with header `delta,<id>[,<id>...]` and 12 significant digits per
/// value. All curves must share the same delta grid.
std::string emit_csv(const std::vector<BoundCurve>& curves);

/// Minimal SVG 1.1 rendering: 800x600 viewport, linear axes, y range fixed
/// to [0, 1.05], one polyline per curve plus a legend.
std::string emit_svg(const std::vector<BoundCurve>& curves);

}  // namespace delsarte
