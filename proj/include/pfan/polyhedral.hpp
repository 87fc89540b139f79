#pragma once

// Double description for homogeneous cones {x : A x >= 0, E x = 0}.

#include <vector>

#include "pfan/linalg.hpp"

namespace pfan {

struct ConeGenerators {
  std::vector<IntVector> lineality;  ///< basis of the lineality space
  std::vector<IntVector> rays;       ///< extreme rays modulo lineality, primitive and sorted

  std::size_t dimension(std::size_t n) const;
};

struct HRep {
  std::vector<IntVector> inequalities;  ///< a . x >= 0
  std::vector<IntVector> equalities;    ///< e . x = 0
};

ConeGenerators double_description(std::size_t n, const HRep& h);

/// H-representation of cone(rays) for linearly independent rays.
HRep simplicial_hrep(std::size_t n, const std::vector<IntVector>& rays);

/// H-representation of cone(generators) for arbitrary generators.
HRep hrep_of_generated(std::size_t n, const std::vector<IntVector>& generators);

HRep intersect(const HRep& a, const HRep& b);

/// True iff some x satisfies s_i * (normals[i] . x) > 0 for s_i = +-1 and = 0 for s_i = 0.
bool sign_vector_feasible(std::size_t n, const std::vector<IntVector>& normals, const std::vector<int>& signs);

}  // namespace pfan
