#pragma once
// CW structure of the classifying space of a partitioned fan.

#include <vector>

#include "pfan/partition.hpp"
#include "pfan/presentation.hpp"

namespace pfan {

struct OneCell {
  BlockId block;
  BlockId tail;
  BlockId head;
  int tail_signature;  ///< interned projected cone of the inclusion into the tail chamber
  int head_signature;
};

struct TwoCell {
  BlockId block;
  ConeId representative;
  std::vector<ConeId> chambers;  ///< cyclic order around the representative
  Word boundary;                 ///< letters index one-cells
};

/// Holds a reference to the fan, which must outlive the complex.
struct CWComplex {
  const Fan* fan = nullptr;
  Partition partition;
  std::vector<std::vector<BlockId>> cells;  ///< cells[d] = blocks of cones of dimension n - d
  std::vector<BlockId> zero_cells;
  std::vector<OneCell> one_cells;
  std::vector<TwoCell> two_cells;
  std::vector<std::size_t> counts() const;
};

/// Throws NotComplete and NotAdmissible.
CWComplex build_cw(const Fan& fan, const Partition& partition);
long euler_characteristic(const CWComplex& cw);

/// Spanning tree by breadth-first search from the first 0-cell. Throws Disconnected.
Presentation pi1_presentation(const CWComplex& cw);

struct Pi1Comparison {
  std::size_t pi1_generators = 0;
  std::size_t picture_generators = 0;
  Abelianization pi1_abelianization;
  Abelianization picture_abelianization;
  bool generators_match() const { return pi1_generators == picture_generators; }
  bool abelianizations_match() const { return pi1_abelianization == picture_abelianization; }
  bool match() const { return generators_match() && abelianizations_match(); }
};
/// Requires a single 0-cell. Throws PreconditionUnmet.
Pi1Comparison compare_pi1_picture(const CWComplex& cw, const Presentation& picture);

}  // namespace pfan
