#include "pfan/fan_poset.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "pfan/error.hpp"
#include "pfan/polyhedral.hpp"

namespace pfan {

FanPoset::FanPoset(const Fan& fan, const std::vector<std::pair<ConeId, ConeId>>& covers)
    : fan_(&fan), elements_(fan.maximal()) {
  const std::size_t m = elements_.size();
  for (auto [lo, hi] : covers) {
    if (!std::binary_search(elements_.begin(), elements_.end(), lo) ||
        !std::binary_search(elements_.begin(), elements_.end(), hi))
      throw Error("PosetInvalid", "cover endpoint is not a maximal cone", {lo, hi});
    RaySet common;
    std::set_intersection(fan.cone(lo).begin(), fan.cone(lo).end(), fan.cone(hi).begin(), fan.cone(hi).end(),
                          std::back_inserter(common));
    if (lo == hi || fan.cone_dim(lo) != fan.dim() || fan.cone_dim(hi) != fan.dim() || common.size() + 1 != fan.dim())
      throw Error("PosetInvalid", "cover does not join wall-adjacent maximal cones", {lo, hi});
    covers_.push_back({lo, hi, fan.id(common)});
  }
  std::sort(covers_.begin(), covers_.end(), [](const Cover& a, const Cover& b) {
    return std::tie(a.lower, a.upper) < std::tie(b.lower, b.upper);
  });
  covers_.erase(std::unique(covers_.begin(), covers_.end()), covers_.end());

  std::vector<std::vector<std::size_t>> up(m);
  for (const auto& c : covers_) up[index(c.lower)].push_back(index(c.upper));
  leq_.assign(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    std::deque<std::size_t> q{i};
    leq_[i][i] = true;
    while (!q.empty()) {
      std::size_t x = q.front();
      q.pop_front();
      for (std::size_t y : up[x])
        if (!leq_[i][y]) {
          leq_[i][y] = true;
          q.push_back(y);
        }
    }
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (leq_[i][j] && leq_[j][i]) throw Error("PosetInvalid", "covers contain a cycle", {elements_[i], elements_[j]});
}

std::size_t FanPoset::index(ConeId c) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), c);
  if (it == elements_.end() || *it != c) throw Error("NotAChamber", "cone is not a maximal cone", c);
  return static_cast<std::size_t>(it - elements_.begin());
}

bool FanPoset::leq(ConeId a, ConeId b) const { return leq_[index(a)][index(b)]; }

std::optional<ConeId> FanPoset::minimum() const {
  for (ConeId a : elements_) {
    bool all = true;
    for (ConeId b : elements_)
      if (!leq(a, b)) {
        all = false;
        break;
      }
    if (all) return a;
  }
  return std::nullopt;
}

std::optional<ConeId> FanPoset::maximum() const {
  for (ConeId a : elements_) {
    bool all = true;
    for (ConeId b : elements_)
      if (!leq(b, a)) {
        all = false;
        break;
      }
    if (all) return a;
  }
  return std::nullopt;
}

std::vector<Cover> FanPoset::hasse() const {
  std::vector<Cover> out;
  for (const auto& c : covers_) {
    bool direct = true;
    for (ConeId x : elements_)
      if (less(c.lower, x) && less(x, c.upper)) {
        direct = false;
        break;
      }
    if (direct) out.push_back(c);
  }
  return out;
}

std::optional<Cover> FanPoset::cover_between(ConeId lower, ConeId upper) const {
  for (const auto& c : covers_)
    if (c.lower == lower && c.upper == upper) return c;
  return std::nullopt;
}

IntVector wall_normal(const Fan& fan, ConeId wall, ConeId from) {
  auto normals = null_space(fan.cone_rays(wall), fan.dim());
  if (normals.size() != 1) throw Error("PosetInvalid", "cone is not a wall", wall);
  IntVector nu = normals.front();
  for (ConeId other : fan.maximal_in_star(wall)) {
    if (other == from) continue;
    for (int r : fan.cone(other)) {
      Integer s = dot(nu, fan.rays()[static_cast<std::size_t>(r)]);
      if (s == 0) continue;
      if (s < 0)
        for (auto& x : nu) x = -x;
      return nu;
    }
  }
  throw Error("PosetInvalid", "wall has no second maximal cone", wall);
}

FanPoset poset_from_linear_functional(const Fan& fan, const RationalVector& b) {
  if (b.size() != fan.dim()) throw Error("DimensionMismatch", "functional length differs from fan dimension");
  if (!is_finite_complete(fan)) throw Error("NotComplete", "poset requires a finite complete fan");
  std::vector<std::pair<ConeId, ConeId>> covers;
  for (const auto& w : walls(fan)) {
    Rational s = dot(b, to_rational(wall_normal(fan, w.wall, w.first)));
    if (s == 0) throw Error("DegenerateFunctional", "functional vanishes on a wall normal", w.wall);
    covers.emplace_back(s > 0 ? std::make_pair(w.first, w.second) : std::make_pair(w.second, w.first));
  }
  return FanPoset(fan, covers);
}

namespace {

Integer cross(const IntVector& a, const IntVector& b) { return a[0] * b[1] - a[1] * b[0]; }

int sgn(const Integer& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// Sign of p/sqrt(a) + q/sqrt(b) for positive a, b.
int sign_of_root_sum(const Integer& p, const Integer& a, const Integer& q, const Integer& b) {
  const int sp = sgn(p), sq = sgn(q);
  if (sp >= 0 && sq >= 0) return (sp || sq) ? 1 : 0;
  if (sp <= 0 && sq <= 0) return -1;
  // opposite signs: compare p^2 b with q^2 a
  Integer lhs = p * p * b, rhs = q * q * a;
  if (lhs == rhs) return 0;
  return (lhs > rhs) ? sp : sq;
}

// Half-plane index then cross product gives the counterclockwise angular order.
bool angle_less(const IntVector& a, const IntVector& b) {
  auto half = [](const IntVector& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

}  // namespace

FanPoset rank2_bisector_poset(const Fan& fan, ConeId base) {
  if (fan.dim() != 2) throw Error("NotRank2", "bisector poset needs a fan in the plane");
  if (!is_finite_complete(fan)) throw Error("NotComplete", "bisector poset requires a finite complete fan");
  const auto& mx = fan.maximal();
  if (!std::binary_search(mx.begin(), mx.end(), base)) throw Error("NotAChamber", "base is not a maximal cone", base);

  std::vector<int> order;
  for (ConeId r : fan.cones_of_dim(1)) order.push_back(fan.cone(r).front());
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return angle_less(fan.rays()[static_cast<std::size_t>(a)], fan.rays()[static_cast<std::size_t>(b)]);
  });
  const std::size_t m = order.size();
  // chamber i lies between ray i and ray i+1 (counterclockwise)
  std::vector<ConeId> chambers(m);
  for (std::size_t i = 0; i < m; ++i) chambers[i] = fan.id({order[i], order[(i + 1) % m]});

  const IntVector& u1 = fan.rays()[static_cast<std::size_t>(fan.cone(base)[0])];
  const IntVector& u2 = fan.rays()[static_cast<std::size_t>(fan.cone(base)[1])];
  const Integer n1 = dot(u1, u1), n2 = dot(u2, u2);
  // d = -(u1/|u1| + u2/|u2|); sign of <v, d> style quantities
  auto side = [&](const IntVector& p) { return -sign_of_root_sum(cross(p, u1), n1, cross(p, u2), n2); };
  auto along = [&](const IntVector& p) { return -sign_of_root_sum(dot(p, u1), n1, dot(p, u2), n2); };

  std::size_t a = m, d = m;
  for (std::size_t i = 0; i < m; ++i)
    if (chambers[i] == base) a = i;
  for (std::size_t i = 0; i < m && d == m; ++i) {
    const IntVector& p = fan.rays()[static_cast<std::size_t>(order[i])];
    const IntVector& q = fan.rays()[static_cast<std::size_t>(order[(i + 1) % m])];
    // on ray i the chamber counterclockwise from it is taken
    if (side(p) == 0 && along(p) > 0) d = i;
    else if (side(p) > 0 && -side(q) > 0) d = i;
  }
  if (d == m || d == a) throw Error("PosetInvalid", "could not locate the opposite chamber", base);
  // a maximum sharing a wall with the base leaves one chain empty; step one chamber further away
  if (m >= 4) {
    if (d == (a + 1) % m) d = (a + 2) % m;
    else if ((d + 1) % m == a) d = (a + m - 2) % m;
  }

  std::vector<std::pair<ConeId, ConeId>> covers;
  for (std::size_t i = a; i != d; i = (i + 1) % m) covers.emplace_back(chambers[i], chambers[(i + 1) % m]);
  for (std::size_t i = a; i != d; i = (i + m - 1) % m) covers.emplace_back(chambers[i], chambers[(i + m - 1) % m]);
  return FanPoset(fan, covers);
}

FacialInterval facial_interval(const FanPoset& poset, ConeId sigma) {
  const Fan& fan = poset.fan();
  FacialInterval fi;
  fi.cone = sigma;
  fi.members = fan.maximal_in_star(sigma);
  std::optional<ConeId> lo, hi;
  for (ConeId a : fi.members) {
    bool is_min = true, is_max = true;
    for (ConeId b : fi.members) {
      if (!poset.leq(a, b)) is_min = false;
      if (!poset.leq(b, a)) is_max = false;
    }
    if (is_min) lo = a;
    if (is_max) hi = a;
  }
  if (!lo || !hi) throw Error("NotAnInterval", "star has no unique minimum and maximum", sigma);
  std::vector<ConeId> interval;
  for (ConeId x : poset.elements())
    if (poset.leq(*lo, x) && poset.leq(x, *hi)) interval.push_back(x);
  if (interval != fi.members) throw Error("NotAnInterval", "star differs from the interval between its extremes", sigma);
  fi.minimum = *lo;
  fi.maximum = *hi;
  return fi;
}

WeakFanPosetReport check_weak_fan_poset(const FanPoset& poset) {
  const Fan& fan = poset.fan();
  const std::size_t n = fan.dim();
  WeakFanPosetReport report;
  for (std::size_t c = 0; c < fan.num_cones(); ++c) {
    try {
      facial_interval(poset, static_cast<ConeId>(c));
    } catch (const Error&) {
      report.facial_failures.push_back(static_cast<ConeId>(c));
    }
  }
  const auto hasse = poset.hasse();
  for (const auto& c : poset.covers())
    if (std::find(hasse.begin(), hasse.end(), c) == hasse.end()) report.non_hasse_covers.push_back(c);

  std::vector<HRep> chamber_hrep;
  for (ConeId x : poset.elements()) chamber_hrep.push_back(simplicial_hrep(n, fan.cone_rays(x)));
  const auto& el = poset.elements();
  for (ConeId a : el)
    for (ConeId b : el) {
      if (!poset.leq(a, b)) continue;
      std::set<int> ray_ids;
      std::vector<bool> inside(el.size(), false);
      for (std::size_t i = 0; i < el.size(); ++i)
        if (poset.leq(a, el[i]) && poset.leq(el[i], b)) {
          inside[i] = true;
          ray_ids.insert(fan.cone(el[i]).begin(), fan.cone(el[i]).end());
        }
      std::vector<IntVector> gens;
      for (int r : ray_ids) gens.push_back(fan.rays()[static_cast<std::size_t>(r)]);
      HRep c = hrep_of_generated(n, gens);
      for (std::size_t i = 0; i < el.size(); ++i) {
        if (inside[i]) continue;
        if (double_description(n, intersect(c, chamber_hrep[i])).dimension(n) == n) {
          report.cone_failures.emplace_back(a, b);
          break;
        }
      }
    }
  return report;
}

NondegeneracyResult check_nondegenerate(const Partition& p, const FanPoset& poset) {
  const Fan& fan = poset.fan();
  if (p.size() != fan.num_cones()) throw Error("FanMismatch", "partition and poset over different fans");
  for (std::size_t b = 0; b < p.num_blocks(); ++b) {
    const auto& block = p.block(static_cast<BlockId>(b));
    const ConeId s1 = block.front();
    for (std::size_t j = 1; j < block.size(); ++j) {
      const ConeId s2 = block[j];
      for (const auto& c : poset.covers()) {
        if (!fan.contains(c.wall, s1)) continue;
        auto lo = fan.star_member_with(s2, fan.projected_id(s1, c.lower));
        auto hi = fan.star_member_with(s2, fan.projected_id(s1, c.upper));
        if (!lo || !hi || !poset.cover_between(*lo, *hi)) return {false, static_cast<BlockId>(b), s1, s2, c};
      }
    }
  }
  return {true, -1, -1, -1, std::nullopt};
}

}  // namespace pfan
