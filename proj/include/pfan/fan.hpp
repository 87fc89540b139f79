#pragma once

// Simplicial fans with derived face sets and cached star projections.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pfan/linalg.hpp"

namespace pfan {

using ConeId = int;
using RaySet = std::vector<int>;               ///< sorted ray indices; empty = zero cone
using CanonicalCone = std::vector<IntVector>;  ///< sorted primitive rays

/// Image of star(sigma) under the projection onto span(sigma)^perp.
struct ProjectedFan {
  std::vector<CanonicalCone> cones;  ///< sorted
  bool operator==(const ProjectedFan&) const = default;
};

class Fan {
 public:
  Fan(std::size_t dim, std::vector<IntVector> rays, std::vector<RaySet> max_cones);

  std::size_t dim() const { return dim_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  /// Maximal cones in input order.
  const std::vector<RaySet>& max_cones() const { return max_cones_; }

  std::size_t num_cones() const { return faces_.size(); }
  const RaySet& cone(ConeId c) const { return faces_.at(static_cast<std::size_t>(c)); }
  std::size_t cone_dim(ConeId c) const { return cone(c).size(); }
  std::optional<ConeId> find(const RaySet& rays) const;
  ConeId id(const RaySet& rays) const;  ///< throws UnknownCone
  ConeId zero() const { return 0; }
  bool contains(ConeId outer, ConeId inner) const;
  std::vector<IntVector> cone_rays(ConeId c) const;
  CanonicalCone canonical(ConeId c) const;

  /// Cones containing c, in id order (c first).
  const std::vector<ConeId>& star(ConeId c) const { return star_.at(static_cast<std::size_t>(c)); }
  /// Maximal cones by inclusion, in id order.
  const std::vector<ConeId>& maximal() const { return maximal_; }
  std::vector<ConeId> cones_of_dim(std::size_t d) const;
  std::vector<ConeId> maximal_in_star(ConeId c) const;

  const RationalMatrix& projection(ConeId c) const { return projection_.at(static_cast<std::size_t>(c)); }
  /// Interned id of the canonical cone pi_sigma(tau); requires sigma subset of tau.
  int projected_id(ConeId sigma, ConeId tau) const;
  const CanonicalCone& interned(int id) const { return interned_.at(static_cast<std::size_t>(id)); }
  std::optional<int> intern_lookup(const CanonicalCone& c) const;
  /// The unique tau in star(sigma) with pi_sigma(tau) = interned(id), if any.
  std::optional<ConeId> star_member_with(ConeId sigma, int projected) const;
  /// Sorted interned ids of pi_sigma(star(sigma)).
  const std::vector<int>& projected_star_ids(ConeId sigma) const {
    return projected_star_ids_.at(static_cast<std::size_t>(sigma));
  }
  /// Interned id of the subspace span(c).
  int span_id(ConeId c) const { return span_id_.at(static_cast<std::size_t>(c)); }

 private:
  std::size_t dim_;
  std::vector<IntVector> rays_;
  std::vector<RaySet> max_cones_;
  std::vector<RaySet> faces_;
  std::map<RaySet, ConeId> index_;
  std::vector<std::vector<ConeId>> star_;
  std::vector<ConeId> maximal_;
  std::vector<RationalMatrix> projection_;
  std::vector<std::vector<int>> star_projection_;  // aligned with star_
  std::vector<std::vector<int>> projected_star_ids_;
  std::vector<CanonicalCone> interned_;
  std::map<CanonicalCone, int> intern_index_;
  std::vector<int> span_id_;
};

Fan build_fan(std::size_t dim, const std::vector<IntVector>& rays, const std::vector<RaySet>& max_cones);

struct FanViolation {
  ConeId first;
  ConeId second;
  CanonicalCone intersection;  ///< extreme rays of cone(first) & cone(second)
};

struct ValidationReport {
  std::vector<FanViolation> violations;
  bool valid() const { return violations.empty(); }
};

ValidationReport validate_fan(const Fan& fan);
bool is_finite_complete(const Fan& fan);
std::vector<ConeId> star(const Fan& fan, ConeId sigma);
ProjectedFan project_star(const Fan& fan, ConeId sigma);

struct LinkComplex {
  ConeId representative;
  std::vector<ConeId> vertices;               ///< cones of dimension k+1 in star(sigma)
  std::vector<std::vector<int>> simplices;    ///< nonempty vertex-index sets, sorted
  std::size_t dimension() const;
  /// Pure, and every ridge lies in exactly two facets (two points in dimension 0).
  bool is_sphere_like(std::size_t expected_dim) const;
};

LinkComplex link_complex(const Fan& fan, const std::vector<ConeId>& block);

/// Member whose canonical ray list is lexicographically least.
ConeId least_member(const Fan& fan, const std::vector<ConeId>& cones);
/// "0" for the zero cone, else the sorted rays joined by '|', e.g. "(0,1)|(1,0)".
std::string cone_label(const Fan& fan, ConeId c);

/// Codimension-1 cones with the maximal cones on either side.
struct Wall {
  ConeId wall;
  ConeId first;
  ConeId second;
};
std::vector<Wall> walls(const Fan& fan);

}  // namespace pfan
