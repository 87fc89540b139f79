#pragma once
// Shared fixtures and independent oracles for the test suites.

#include <algorithm>
#include <cstdlib>
#include <string>
#include <set>
#include <vector>

#include "pfan/pfan.hpp"

namespace pfan::testing {

/// The k-th ray as a cone (1-based, input order).
inline ConeId ray_cone(const Fan& fan, int k) { return fan.id({k - 1}); }
/// The k-th input maximal cone (1-based).
inline ConeId max_cone(const Fan& fan, int k) { return fan.id(fan.max_cones().at(static_cast<std::size_t>(k - 1))); }

inline std::set<std::set<ConeId>> as_sets(const Partition& p) {
  std::set<std::set<ConeId>> out;
  for (const auto& b : p.blocks()) out.emplace(b.begin(), b.end());
  return out;
}

/// Square fan with opposite rays identified: closure of s1~s3, s2~s4.
inline Partition torus_partition(const Fan& sq) {
  return admissible_closure(sq, {{ray_cone(sq, 1), ray_cone(sq, 3)}, {ray_cone(sq, 2), ray_cone(sq, 4)}});
}

/// The E-classes; on the three-lines fan this identifies opposite rays and all chambers.
inline Partition coarsest_partition(const Fan& fan) { return potential_identifications(fan).classes; }

inline Partition all_chambers_partition(const Fan& fan) {
  return Partition::from_blocks(fan.num_cones(), {fan.maximal()});
}

/// pi_sigma(tau) as sorted primitive rays, computed from scratch with a fresh projection matrix.
inline CanonicalCone projected_cone_oracle(const Fan& fan, ConeId sigma, ConeId tau) {
  const RationalMatrix proj = complement_projection(fan.cone_rays(sigma), fan.dim());
  CanonicalCone out;
  for (const auto& r : fan.cone_rays(tau)) {
    const RationalVector v = proj.apply(to_rational(r));
    if (!is_zero(v)) out.push_back(primitive_ray(v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Cones containing sigma, found by ray-set inclusion.
inline std::vector<ConeId> star_oracle(const Fan& fan, ConeId sigma) {
  std::vector<ConeId> out;
  const RaySet& s = fan.cone(sigma);
  for (ConeId t = 0; t < static_cast<ConeId>(fan.num_cones()); ++t) {
    const RaySet& r = fan.cone(t);
    if (std::includes(r.begin(), r.end(), s.begin(), s.end())) out.push_back(t);
  }
  return out;
}

/// Possible identification of two cones by the definition: equal spans and equal projected stars.
inline bool possible_oracle(const Fan& fan, ConeId a, ConeId b) {
  if (!span_equal(fan.cone_rays(a), fan.cone_rays(b))) return false;
  std::set<CanonicalCone> sa, sb;
  for (ConeId t : star_oracle(fan, a)) sa.insert(projected_cone_oracle(fan, a, t));
  for (ConeId t : star_oracle(fan, b)) sb.insert(projected_cone_oracle(fan, b, t));
  return sa == sb;
}

/// Admissibility by the definition, quantifying over all identified pairs and all star members.
inline bool admissible_oracle(const Fan& fan, const Partition& p) {
  for (const auto& block : p.blocks())
    for (ConeId s1 : block)
      for (ConeId s2 : block)
        for (ConeId t1 : star_oracle(fan, s1))
          for (ConeId t2 : star_oracle(fan, s2))
            if (projected_cone_oracle(fan, s1, t1) == projected_cone_oracle(fan, s2, t2) && !p.same(t1, t2))
              return false;
  return true;
}

/// Every set partition of `items`, as label vectors over 0..n-1 (cones outside `items` keep label -1).
inline void set_partitions(const std::vector<ConeId>& items, std::size_t i, std::vector<int>& labels, int used,
                           std::vector<std::vector<int>>& out) {
  if (i == items.size()) {
    out.push_back(labels);
    return;
  }
  for (int l = 0; l <= used; ++l) {
    labels[static_cast<std::size_t>(items[i])] = l;
    set_partitions(items, i + 1, labels, std::max(used, l + 1), out);
  }
}

/// All partitions refining the given one, by brute force over each block's set partitions.
inline std::vector<Partition> all_refinements(const Partition& coarse) {
  std::vector<std::vector<int>> current{std::vector<int>(coarse.size(), 0)};
  int offset = 0;
  for (const auto& block : coarse.blocks()) {
    std::vector<std::vector<int>> local;
    std::vector<int> labels(coarse.size(), -1);
    set_partitions(block, 0, labels, 0, local);
    std::vector<std::vector<int>> next;
    for (const auto& base : current)
      for (const auto& l : local) {
        std::vector<int> merged = base;
        for (ConeId c : block) merged[static_cast<std::size_t>(c)] = offset + l[static_cast<std::size_t>(c)];
        next.push_back(merged);
      }
    current = std::move(next);
    offset += static_cast<int>(block.size());
  }
  std::vector<Partition> out;
  for (const auto& l : current) out.push_back(Partition::from_labels(l));
  return out;
}

/// Hirzebruch partition with sigma2 ~ sigma4, tau1 ~ tau2 and tau3 ~ tau4.
inline Partition hirzebruch_p1(const Fan& hz) {
  return Partition::from_blocks(hz.num_cones(), {{ray_cone(hz, 2), ray_cone(hz, 4)},
                                                 {max_cone(hz, 1), max_cone(hz, 2)},
                                                 {max_cone(hz, 3), max_cone(hz, 4)}});
}

template <class F>
std::string error_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

inline IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

/// Rank of a small integer matrix by fraction-free elimination in machine integers.
inline std::size_t small_rank(std::vector<std::vector<long long>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      const long long a = m[r][c], b = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = a * m[i][j] - b * m[r][j];
    }
    ++r;
  }
  return r;
}

/// Region count of a central arrangement: sum over subsets S of (-1)^(|S| - rank S).
inline std::size_t whitney_region_count(const Arrangement& arr) {
  const std::size_t m = arr.normals.size();
  long long total = 0;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<std::vector<long long>> rows;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (1u << i)) {
        std::vector<long long> row;
        for (const auto& x : arr.normals[i]) row.push_back(x.convert_to<long long>());
        rows.push_back(row);
      }
    const long long e = static_cast<long long>(rows.size()) - static_cast<long long>(small_rank(rows));
    total += (e % 2 == 0) ? 1 : -1;
  }
  return static_cast<std::size_t>(total);
}

}  // namespace pfan::testing
