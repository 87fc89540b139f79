#include "pfan/builtin.hpp"

namespace pfan {

Fan fan_square() { return fan_hirzebruch(0); }

Fan fan_hirzebruch(long a) {
  return Fan(2, {{1, 0}, {0, -1}, {-1, a}, {0, 1}}, {{0, 3}, {0, 1}, {1, 2}, {2, 3}});
}

Fan fan_three_lines() {
  return Fan(2, {{1, 0}, {0, 1}, {-2, 3}, {-1, 0}, {0, -1}, {2, -3}},
             {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
}

Fan fan_coordinate(std::size_t n) {
  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < n; ++i)
    for (int s : {1, -1}) {
      IntVector v(n, 0);
      v[i] = s;
      rays.push_back(v);
    }
  std::vector<RaySet> cones;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    RaySet c;
    for (std::size_t i = 0; i < n; ++i) c.push_back(static_cast<int>(2 * i + ((mask >> i) & 1u)));
    cones.push_back(c);
  }
  return Fan(n, rays, cones);
}

Arrangement arrangement_coordinate(std::size_t n) {
  std::vector<IntVector> normals;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector v(n, 0);
    v[i] = 1;
    normals.push_back(v);
  }
  return make_arrangement(n, normals);
}

Arrangement arrangement_three_lines() { return make_arrangement(2, {{1, 0}, {0, 1}, {1, 1}}); }

std::vector<std::string> example_names() {
  return {"brauer3", "coordinate3", "hirzebruch-a1", "square", "three-lines", "three-lines-arrangement"};
}

}  // namespace pfan
