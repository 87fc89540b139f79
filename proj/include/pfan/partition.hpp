#pragma once

// Partitions of the cones of a fan: potential identifications, admissibility, closure, lattice.

#include <optional>
#include <utility>
#include <vector>

#include "pfan/fan.hpp"

namespace pfan {

using BlockId = int;

/// A partition of cone ids 0..n-1. Blocks are ordered by least member; members ascend.
class Partition {
 public:
  Partition() = default;
  /// Cones with equal labels share a block.
  static Partition from_labels(const std::vector<int>& labels);
  /// Unlisted cones become singletons.
  static Partition from_blocks(std::size_t n, const std::vector<std::vector<ConeId>>& blocks);
  static Partition finest(std::size_t n);

  std::size_t size() const { return block_of_.size(); }
  std::size_t num_blocks() const { return blocks_.size(); }
  BlockId block_of(ConeId c) const { return block_of_.at(static_cast<std::size_t>(c)); }
  const std::vector<ConeId>& block(BlockId b) const { return blocks_.at(static_cast<std::size_t>(b)); }
  const std::vector<std::vector<ConeId>>& blocks() const { return blocks_; }
  bool same(ConeId a, ConeId b) const { return block_of(a) == block_of(b); }
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> block_of_;
  std::vector<std::vector<ConeId>> blocks_;
};

/// The E-classes: cones with equal span and equal projected star.
struct IdentTable {
  Partition classes;
};

IdentTable potential_identifications(const Fan& fan);

struct AdmissibilityWitness {
  ConeId sigma1, sigma2, tau1, tau2;
};

struct AdmissibilityResult {
  bool admissible;
  std::optional<AdmissibilityWitness> witness;
};

AdmissibilityResult is_admissible(const Fan& fan, const Partition& p);

Partition admissible_closure(const Fan& fan, const std::vector<std::pair<ConeId, ConeId>>& seeds);

Partition meet(const Partition& a, const Partition& b);
Partition join(const Partition& a, const Partition& b);
/// True iff every block of a lies inside a block of b.
bool refines(const Partition& a, const Partition& b);

/// All admissible partitions, by exhaustive search over refinements of the E-classes.
std::vector<Partition> enumerate_admissible(const Fan& fan, std::size_t cone_limit = 16);

}  // namespace pfan
