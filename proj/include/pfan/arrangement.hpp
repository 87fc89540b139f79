#pragma once
// Central hyperplane arrangements: induced fan, flats, poset of regions and shards.

#include <cstddef>
#include <vector>

#include "pfan/fan_poset.hpp"

namespace pfan {

struct Arrangement {
  std::size_t dim = 0;
  std::vector<IntVector> normals;  ///< primitive, pairwise non-parallel
};

/// Validates and normalizes the normals. Throws DimensionMismatch, ZeroVector, ParallelNormals.
Arrangement make_arrangement(std::size_t dim, std::vector<IntVector> normals);

using SignVector = std::vector<int>;

/// Signs of the relative interior of a cone against every normal.
SignVector face_signs(const Arrangement& arr, const Fan& fan, ConeId c);

/// Fan of all faces, found by sign-vector enumeration (at most 12 hyperplanes).
/// Throws EnumerationLimit and NotSimplicialArrangement.
Fan arrangement_fan(const Arrangement& arr);

/// A flat, given by the hyperplanes containing it.
struct Flat {
  std::vector<int> hyperplanes;  ///< sorted; empty = ambient space
  std::size_t rank = 0;          ///< codimension of the flat
  bool operator==(const Flat&) const = default;
};

std::vector<Flat> flats(const Arrangement& arr);
/// Throws UnknownFace.
Flat support(const Arrangement& arr, const Fan& fan, ConeId c);
Partition flat_partition(const Arrangement& arr, const Fan& fan);

/// The chamber with all signs positive. Throws NotAChamber if there is none.
ConeId default_base(const Arrangement& arr, const Fan& fan);
/// The chamber containing a point off all hyperplanes. Throws NotAChamber.
ConeId chamber_containing(const Arrangement& arr, const Fan& fan, const IntVector& point);

/// Throws NotAChamber.
std::vector<int> separating_set(const Arrangement& arr, const Fan& fan, ConeId base, ConeId region);
FanPoset poset_of_regions(const Arrangement& arr, const Fan& fan, ConeId base);

struct Shard {
  int hyperplane;
  std::vector<ConeId> walls;  ///< codimension-1 cones, sorted
  bool operator==(const Shard&) const = default;
};

/// Hyperplanes of the rank-2 subarrangement through a codimension-2 flat that bound its base region.
std::vector<int> basic_hyperplanes(const Arrangement& arr, const Flat& flat, const SignVector& base_signs);

std::vector<Shard> shards(const Arrangement& arr, const Fan& fan, ConeId base);
Partition shard_partition(const Arrangement& arr, const Fan& fan, ConeId base);

}  // namespace pfan
