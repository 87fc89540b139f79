#pragma once
// The wall algebra of the rank-3 Brauer cycle arrangement.

#include <array>
#include <string>
#include <vector>

#include "pfan/arrangement.hpp"
#include "pfan/presentation.hpp"

namespace pfan {

/// The seven 0/1 normals in R^3.
Arrangement builtin_brauer();

/// Basis: index 0 is the zero vector (the unit), 1..7 the Brauer normals, 8 the absorbing symbol.
constexpr std::size_t kWallBasis = 9;
constexpr std::size_t kWallUnit = 0;
constexpr std::size_t kWallAbsorb = 8;
using WallElement = std::vector<Integer>;

WallElement wall_basis(std::size_t i);
/// Product of basis symbols.
std::size_t wall_basis_mul(std::size_t i, std::size_t j);
/// Bilinear product. Throws WrongBasis for elements of the wrong length.
WallElement wa_mul(const WallElement& a, const WallElement& b);
/// Equality after discarding the absorbing coefficient.
bool wa_equal_contracted(const WallElement& a, const WallElement& b);
std::string wall_element_text(const WallElement& a);

struct WallAlgebraCertificate {
  bool associative = false;
  bool commutative = false;
  bool unital = false;
  std::vector<std::size_t> failing_relators;
  bool relators_hold() const { return failing_relators.empty(); }
  bool valid() const { return associative && commutative && unital && relators_hold(); }
};

/// Checks the algebra laws and that X_m -> unit + m respects every relator.
/// Throws WrongArrangement unless the arrangement is the Brauer one and every generator lies in a hyperplane.
WallAlgebraCertificate wa_certify(const Arrangement& arr, const Presentation& presentation);

}  // namespace pfan
