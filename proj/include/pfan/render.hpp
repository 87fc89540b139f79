#pragma once
// Static SVG diagrams.

#include <array>
#include <string>

#include "pfan/cw_complex.hpp"

namespace pfan {

/// Rays and chambers of a two-dimensional fan; chambers shaded by block when a partition is given.
std::string render_fan_svg(const Fan& fan, const Partition* partition = nullptr);

/// Stereographic image of a three-dimensional fan on the unit sphere, projected from `point`.
std::string render_stereographic_svg(const Fan& fan, std::array<double, 3> point = {1.0, 1.0, 1.0});

/// 1-skeleton of a CW complex with 0-cells on a circle.
std::string render_cw_svg(const CWComplex& cw);

}  // namespace pfan
