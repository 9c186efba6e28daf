#pragma once

#include <string>

#include "saddlelink/params.hpp"

namespace saddlelink {

struct RenderOptions {
    int leaves = 12;      // seeds per foliation, equispaced on the viewport boundary
    double radius = 1.0;  // half-width of the square viewport
    bool shade_sector = true;
    int size = 600;       // pixels
};

/// SVG 1.1 phase portrait of the characteristic foliation pair of a (2-1) parameter set.
std::string render_svg(const NormalizedParams& np, const RenderOptions& opts);

} // namespace saddlelink
