#pragma once

// SVG rendering of the subdivision triangles and a point
// configuration, in mathematical orientation (y grows upward).
// Output is byte-deterministic for identical inputs: fixed formatting,
// no timestamps.

#include "rquant/algebra.hpp"

#include <string>
#include <vector>

namespace rquant {

struct RenderSpec {
    int depth = 3;            // draw cell outlines for levels 0..depth
    int width_px = 800;
    int point_radius_px = 4;
    bool show_labels = false;
};

// Throws std::invalid_argument if spec violates depth <= 8,
// width_px >= 64, or point_radius_px < 1.
std::string render_svg(const std::vector<PointQ>& points, const RenderSpec& spec);

}  // namespace rquant
