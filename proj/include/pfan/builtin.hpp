#pragma once
// Built-in fans and arrangements used by the examples and tests.

#include <string>
#include <vector>

#include "pfan/arrangement.hpp"

namespace pfan {

/// Quadrant fan of R^2: rays (1,0),(0,-1),(-1,0),(0,1); cones {0,3},{0,1},{1,2},{2,3}.
Fan fan_square();
/// Hirzebruch fan: as the square with the third ray replaced by (-1,a).
Fan fan_hirzebruch(long a);
/// Six chambers in R^2 cut by the lines through (1,0), (0,1) and (-2,3).
Fan fan_three_lines();
/// Orthant fan of R^n.
Fan fan_coordinate(std::size_t n);

Arrangement arrangement_coordinate(std::size_t n);
/// Normals e1, e2, e1+e2.
Arrangement arrangement_three_lines();

/// Names accepted by the `examples` command.
std::vector<std::string> example_names();

}  // namespace pfan
