#pragma once

// The category of a partitioned fan.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pfan/partition.hpp"

namespace pfan {

using MorphId = int;

struct MorphClass {
  BlockId source;
  BlockId target;
  int signature;  ///< interned canonical cone pi_sigma(tau)
  int rank;
  std::vector<std::pair<ConeId, ConeId>> representatives;  ///< sorted inclusion pairs
};

/// Composition that failed to be well defined while building the table.
struct CompositionIssue {
  MorphId f, g;
  std::string detail;
};

/// Objects are partition blocks; morphisms are classes of inclusions with equal projected cone.
/// Holds a reference to the fan, which must outlive the category.
class Category {
 public:
  Category(const Fan& fan, Partition partition);

  const Fan& fan() const { return *fan_; }
  const Partition& partition() const { return partition_; }
  std::size_t num_objects() const { return partition_.num_blocks(); }
  std::size_t num_morphisms() const { return morphs_.size(); }
  const MorphClass& morphism(MorphId m) const { return morphs_.at(static_cast<std::size_t>(m)); }
  const std::vector<MorphClass>& morphisms() const { return morphs_; }
  MorphId identity(BlockId b) const { return identity_.at(static_cast<std::size_t>(b)); }
  MorphId class_of(ConeId sigma, ConeId tau) const;
  std::vector<MorphId> hom(BlockId source, BlockId target) const;
  const std::vector<MorphId>& out(BlockId b) const { return out_.at(static_cast<std::size_t>(b)); }
  const std::vector<MorphId>& in(BlockId b) const { return in_.at(static_cast<std::size_t>(b)); }
  /// Dimension of the cones in a block.
  std::size_t block_dim(BlockId b) const { return fan_->cone_dim(partition_.block(b).front()); }

  /// g o f, when target(f) = source(g).
  std::optional<MorphId> composite(MorphId f, MorphId g) const;
  /// Keyed by (f, g), value g o f.
  const std::map<std::pair<MorphId, MorphId>, MorphId>& composition_table() const { return compose_; }
  const std::vector<CompositionIssue>& composition_issues() const { return issues_; }
  /// Replaces one table entry; used to exercise the axiom checks on broken tables.
  void override_composition(MorphId f, MorphId g, MorphId result) { compose_[{f, g}] = result; }

  /// Representative targets of m whose source is sigma.
  std::vector<ConeId> targets_from(MorphId m, ConeId sigma) const;

 private:
  const Fan* fan_;
  Partition partition_;
  std::vector<MorphClass> morphs_;
  std::vector<MorphId> identity_;
  std::vector<std::vector<MorphId>> class_by_star_;  // aligned with fan.star(sigma)
  std::vector<std::vector<MorphId>> out_, in_;
  std::map<std::pair<MorphId, MorphId>, MorphId> compose_;
  std::vector<CompositionIssue> issues_;
};

Category build_category(const Fan& fan, const Partition& partition);

/// g o f; throws NotComposable.
MorphId compose(const Category& cat, MorphId f, MorphId g);

struct Factorization {
  unsigned mask;   ///< subset of the anchor's added rays
  MorphId first;   ///< g
  MorphId second;  ///< h, with h o g = anchor
  BlockId middle;
};

struct FactorizationCube {
  MorphId anchor;
  int rank;
  std::vector<Factorization> objects;  ///< indexed by mask
  std::vector<std::pair<unsigned, unsigned>> edges;
};

FactorizationCube factorization_cube(const Category& cat, MorphId f);

struct AxiomViolation {
  int axiom;
  std::string detail;
  nlohmann::json witness;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool passes(int axiom) const;
  bool all_pass() const { return violations.empty(); }
};

AxiomReport check_cubical(const Category& cat);

std::vector<MorphId> first_factors(const Category& cat, MorphId f);
std::vector<MorphId> last_factors(const Category& cat, MorphId f);

struct CompatibilityResult {
  bool compatible;
  std::vector<MorphId> counterexample;  ///< pairwise compatible set with no joint morphism
  BlockId object = -1;
};

CompatibilityResult check_last_factor_compatibility(const Category& cat);

/// Functor to the category of a coarser partition of the same fan.
struct CoarseningFunctorReport {
  bool well_defined = true;
  bool faithful = true;
  bool surjective_on_objects = true;
  std::vector<MorphId> image;  ///< fine morphism -> coarse morphism
  nlohmann::json witness;
};

CoarseningFunctorReport coarsening_functor(const Category& fine, const Category& coarse);

std::string block_label(const Fan& fan, const Partition& p, BlockId b);
std::string export_category_dot(const Category& cat);

}  // namespace pfan
