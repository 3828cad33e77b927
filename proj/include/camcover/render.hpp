#pragma once

#include <string>

#include "camcover/contour.hpp"
#include "camcover/coverage.hpp"

namespace camcover {

/// Draws the deployment over the deforming contour: one polygon per camera
/// field of view, the contour at its first and last instant, and one marker
/// per contour point at `sample_index` (1-based), classed "covered" or
/// "uncovered". An empty deployment renders the contours only. Byte output
/// is deterministic for fixed inputs.
std::string render_svg(const DeformableContour& contour, const Deployment& deployment,
                       int sample_index);

}  // namespace camcover
