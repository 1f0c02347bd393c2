#pragma once

// Deterministic SVG rendering of a point configuration: fixed 600x600 canvas,
// every pairwise segment stroked, segments lying on a collinear triple dashed.
// Identical input produces byte-identical output.

#include <string>

#include "trigeo/pointfile.hpp"

namespace trigeo {

std::string render_svg(const PointFile& pf);

}  // namespace trigeo
