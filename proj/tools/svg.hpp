#pragma once

#include <gitfan/stability.hpp>

#include <string>

namespace gitfan::io {

/// SVG drawing of a fan on a rank-2 character space: one polygon per
/// full-dimensional chamber clipped to the viewport, a stroke per wall ray,
/// chamber indices as labels and a marker at the origin. Throws Unsupported
/// for other ranks.
std::string render_fan_svg(const GITFan& fan);

}  // namespace gitfan::io
