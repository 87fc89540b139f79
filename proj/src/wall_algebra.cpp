#include "pfan/wall_algebra.hpp"

#include <algorithm>
#include <sstream>

#include "pfan/error.hpp"

namespace pfan {

namespace {

const std::vector<IntVector>& brauer_normals() {
  static const std::vector<IntVector> normals = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0},
                                                 {0, 1, 1}, {1, 0, 1}, {1, 1, 1}};
  return normals;
}

IntVector symbol_vector(std::size_t i) { return i == kWallUnit ? IntVector(3, 0) : brauer_normals().at(i - 1); }

}  // namespace

Arrangement builtin_brauer() { return make_arrangement(3, brauer_normals()); }

WallElement wall_basis(std::size_t i) {
  if (i >= kWallBasis) throw Error("WrongBasis", "basis index out of range", i);
  WallElement e(kWallBasis, 0);
  e[i] = 1;
  return e;
}

std::size_t wall_basis_mul(std::size_t i, std::size_t j) {
  if (i >= kWallBasis || j >= kWallBasis) throw Error("WrongBasis", "basis index out of range", {i, j});
  if (i == kWallAbsorb || j == kWallAbsorb) return kWallAbsorb;
  IntVector s = symbol_vector(i);
  const IntVector b = symbol_vector(j);
  for (std::size_t k = 0; k < 3; ++k) s[k] += b[k];
  for (std::size_t k = 0; k < kWallAbsorb; ++k)
    if (symbol_vector(k) == s) return k;
  return kWallAbsorb;
}

WallElement wa_mul(const WallElement& a, const WallElement& b) {
  if (a.size() != kWallBasis || b.size() != kWallBasis)
    throw Error("WrongBasis", "element is not over the Brauer wall basis", {a.size(), b.size()});
  WallElement out(kWallBasis, 0);
  for (std::size_t i = 0; i < kWallBasis; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < kWallBasis; ++j)
      if (b[j] != 0) out[wall_basis_mul(i, j)] += a[i] * b[j];
  }
  return out;
}

bool wa_equal_contracted(const WallElement& a, const WallElement& b) {
  for (std::size_t i = 0; i < kWallBasis; ++i)
    if (i != kWallAbsorb && a.at(i) != b.at(i)) return false;
  return true;
}

std::string wall_element_text(const WallElement& a) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!first) os << (a[i] > 0 ? " + " : " - ");
    else if (a[i] < 0) os << "-";
    first = false;
    Integer c = a[i] < 0 ? Integer(-a[i]) : a[i];
    if (c != 1) os << c << "*";
    if (i == kWallUnit) os << "e";
    else if (i == kWallAbsorb) os << "0";
    else os << to_string(symbol_vector(i));
  }
  if (first) os << "zero";
  return os.str();
}

WallAlgebraCertificate wa_certify(const Arrangement& arr, const Presentation& presentation) {
  auto sorted = [](std::vector<IntVector> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (arr.dim != 3 || sorted(arr.normals) != sorted(brauer_normals()))
    throw Error("WrongArrangement", "the wall algebra is defined only for the Brauer arrangement");
  WallAlgebraCertificate cert;
  cert.associative = cert.commutative = cert.unital = true;
  for (std::size_t i = 0; i < kWallBasis; ++i) {
    if (wall_basis_mul(kWallUnit, i) != i || wall_basis_mul(kWallAbsorb, i) != kWallAbsorb) cert.unital = false;
    for (std::size_t j = 0; j < kWallBasis; ++j) {
      if (wall_basis_mul(i, j) != wall_basis_mul(j, i)) cert.commutative = false;
      for (std::size_t k = 0; k < kWallBasis; ++k)
        if (wall_basis_mul(wall_basis_mul(i, j), k) != wall_basis_mul(i, wall_basis_mul(j, k))) cert.associative = false;
    }
  }
  std::vector<std::size_t> symbol;
  for (const auto& g : presentation.generators) {
    std::size_t found = 0;
    for (std::size_t k = 1; k < kWallAbsorb && !found; ++k) {
      bool inside = !g.rays.empty();
      for (const auto& r : g.rays)
        if (r.size() != 3 || dot(symbol_vector(k), r) != 0) inside = false;
      if (inside) found = k;
    }
    if (!found) throw Error("WrongArrangement", "generator does not lie in a Brauer hyperplane", g.name);
    symbol.push_back(found);
  }
  const WallElement unit = wall_basis(kWallUnit);
  for (std::size_t r = 0; r < presentation.relators.size(); ++r) {
    WallElement acc = unit;
    for (const auto& l : presentation.relators[r]) {
      WallElement img = unit;
      img[symbol.at(static_cast<std::size_t>(l.gen))] += l.exp;
      acc = wa_mul(acc, img);
    }
    if (!wa_equal_contracted(acc, unit)) cert.failing_relators.push_back(r);
  }
  return cert;
}

}  // namespace pfan
