#pragma once

// Posets on the maximal cones of a complete fan, with wall-labelled covers.

#include <optional>
#include <utility>
#include <vector>

#include "pfan/partition.hpp"

namespace pfan {

struct Cover {
  ConeId lower;
  ConeId upper;
  ConeId wall;
  bool operator==(const Cover&) const = default;
};

/// Holds a reference to the fan, which must outlive the poset.
class FanPoset {
 public:
  /// Covers given as (lower, upper) maximal cones; each pair must share a wall. Throws PosetInvalid.
  FanPoset(const Fan& fan, const std::vector<std::pair<ConeId, ConeId>>& covers);

  const Fan& fan() const { return *fan_; }
  const std::vector<ConeId>& elements() const { return elements_; }
  const std::vector<Cover>& covers() const { return covers_; }
  bool leq(ConeId a, ConeId b) const;
  bool less(ConeId a, ConeId b) const { return a != b && leq(a, b); }
  std::optional<ConeId> minimum() const;
  std::optional<ConeId> maximum() const;
  /// Covers that are also covering relations of the derived order.
  std::vector<Cover> hasse() const;
  std::optional<Cover> cover_between(ConeId lower, ConeId upper) const;

 private:
  std::size_t index(ConeId c) const;

  const Fan* fan_;
  std::vector<ConeId> elements_;
  std::vector<Cover> covers_;
  std::vector<std::vector<bool>> leq_;
};

/// Primitive normal of a wall, pointing from `from` into the other maximal cone.
IntVector wall_normal(const Fan& fan, ConeId wall, ConeId from);

FanPoset poset_from_linear_functional(const Fan& fan, const RationalVector& b);
FanPoset rank2_bisector_poset(const Fan& fan, ConeId base);

struct FacialInterval {
  ConeId cone;
  ConeId minimum;
  ConeId maximum;
  std::vector<ConeId> members;
};

FacialInterval facial_interval(const FanPoset& poset, ConeId sigma);

struct WeakFanPosetReport {
  std::vector<ConeId> facial_failures;                     ///< cones whose star is not an interval
  std::vector<std::pair<ConeId, ConeId>> cone_failures;    ///< intervals whose union is not a cone
  std::vector<Cover> non_hasse_covers;                     ///< covers implied by longer chains
  bool weak_variant_checked = false;
  bool facial_ok() const { return facial_failures.empty(); }
  bool cone_ok() const { return cone_failures.empty(); }
  bool ok() const { return facial_ok() && cone_ok() && non_hasse_covers.empty(); }
};

WeakFanPosetReport check_weak_fan_poset(const FanPoset& poset);

struct NondegeneracyResult {
  bool nondegenerate;
  BlockId block = -1;
  ConeId sigma1 = -1, sigma2 = -1;
  std::optional<Cover> cover;
};

NondegeneracyResult check_nondegenerate(const Partition& p, const FanPoset& poset);

}  // namespace pfan
