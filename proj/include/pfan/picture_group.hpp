#pragma once
// Picture-group presentations over a partitioned fan poset and the functor from the category.

#include <cstddef>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pfan/category.hpp"
#include "pfan/fan_poset.hpp"
#include "pfan/presentation.hpp"

namespace pfan {

enum class PictureMode { Full, Codim2 };

/// Codimension-1 blocks in generator order.
std::vector<BlockId> picture_generator_blocks(const Fan& fan, const Partition& p);
/// "X" followed by the block label, e.g. "X[(1,0)]".
std::string generator_name(const Fan& fan, const Partition& p, BlockId b);

/// Label word of a chain of covers from `from` up to `to`; the first path in cone-id order is used.
/// Throws IntervalBroken when `to` is not above `from`.
Word chain_word(const Fan& fan, const Partition& p, const FanPoset& poset, ConeId from, ConeId to);

/// Maximal chains of the facial interval of sigma, each as its list of chambers.
std::vector<std::vector<ConeId>> maximal_chains(const FanPoset& poset, ConeId sigma, std::size_t limit = 1000000);

/// Throws PosetInvalid if a needed facial interval is broken and ChainLimit past `chain_limit`.
Presentation picture_group(const Fan& fan, const Partition& p, const FanPoset& poset, PictureMode mode,
                           std::size_t chain_limit = 1000000);

/// Relators equating the chain words of identified inclusions (emitted regardless of non-degeneracy).
std::vector<Word> identification_relators(const Fan& fan, const Partition& p, const FanPoset& poset);

/// Generators X per codimension-1 block followed by g per maximal cone. Throws Degenerate.
Presentation alt_presentation(const Fan& fan, const Partition& p, const FanPoset& poset);

/// Word of a morphism class over the picture-group generators. Throws IntervalBroken.
Word psi(const Category& cat, const FanPoset& poset, MorphId f);

struct FunctorCheckReport {
  bool passed = true;
  std::size_t pairs_checked = 0;
  std::vector<std::pair<MorphId, MorphId>> failures;
};
/// Checks psi(g o f) against psi(f) psi(g) using the relators of `relations`.
FunctorCheckReport functor_check(const Category& cat, const FanPoset& poset, const Presentation& relations);
/// As above with the full-mode picture group plus identification relators.
FunctorCheckReport functor_check(const Category& cat, const FanPoset& poset);

/// Adds X_[a] = X_[b] for codimension-1 cones identified by `coarse` but not by `fine`.
/// Throws NotComparable unless fine refines coarse.
Presentation quotient_presentation(const Presentation& fine_presentation, const Fan& fan, const Partition& fine,
                                   const Partition& coarse);

struct FaithfulnessCertificate {
  bool certified = true;
  std::size_t pairs_checked = 0;
  nlohmann::json witness;
};
/// Distinct parallel morphisms have distinct psi-words in the group, certified by free reduction,
/// the Freiheitssatz or the abelianization. Throws NotRank2.
FaithfulnessCertificate rank2_faithfulness_certificate(const Category& cat, const FanPoset& poset);

struct WallAlgebraCertificate;
/// Distinct parallel morphisms from a common cone reach different interval minima.
/// Throws MissingWallAlgebraCertificate unless a passing certificate is supplied.
FaithfulnessCertificate hom_distinctness_certificate(const Category& cat, const FanPoset& poset,
                                                     const WallAlgebraCertificate* certificate);

}  // namespace pfan
