#include <gtest/gtest.h>

#include "test_support.hpp"

namespace pfan {
namespace {

using namespace pfan::testing;

RationalVector rv(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Order oracle: reflexive-transitive closure of the covers by depth-first search.
bool reachable(const FanPoset& p, ConeId a, ConeId b) {
  std::vector<ConeId> stack{a};
  std::set<ConeId> seen{a};
  while (!stack.empty()) {
    const ConeId x = stack.back();
    stack.pop_back();
    if (x == b) return true;
    for (const auto& c : p.covers())
      if (c.lower == x && seen.insert(c.upper).second) stack.push_back(c.upper);
  }
  return false;
}

TEST(LinearFunctional, SquareDiagonal) {
  const Fan sq = fan_square();
  const FanPoset p = poset_from_linear_functional(sq, rv({1, 1}));
  EXPECT_EQ(p.minimum(), max_cone(sq, 3));
  EXPECT_EQ(p.maximum(), max_cone(sq, 1));
  EXPECT_EQ(p.covers().size(), 4u);
  for (const auto& c : p.covers()) {
    EXPECT_TRUE(sq.contains(c.lower, c.wall));
    EXPECT_TRUE(sq.contains(c.upper, c.wall));
    EXPECT_GT(dot(rv({1, 1}), to_rational(wall_normal(sq, c.wall, c.lower))), 0);
  }
}

TEST(LinearFunctional, Errors) {
  const Fan sq = fan_square();
  EXPECT_EQ(error_code([&] { poset_from_linear_functional(sq, rv({1, 0})); }), "DegenerateFunctional");
  EXPECT_EQ(error_code([&] { poset_from_linear_functional(sq, rv({1, 1, 1})); }), "DimensionMismatch");
  const Fan quadrant(2, {iv({1, 0}), iv({0, 1})}, {{0, 1}});
  EXPECT_EQ(error_code([&] { poset_from_linear_functional(quadrant, rv({1, 1})); }), "NotComplete");
}

TEST(LinearFunctional, HirzebruchIsAcyclicTotal) {
  const Fan hz = fan_hirzebruch(1);
  const FanPoset p = poset_from_linear_functional(hz, rv({1, 2}));
  EXPECT_EQ(p.elements().size(), 4u);
  for (ConeId a : p.elements())
    for (ConeId b : p.elements()) {
      EXPECT_EQ(p.leq(a, b), reachable(p, a, b));
      if (a != b) EXPECT_FALSE(p.leq(a, b) && p.leq(b, a));
    }
  EXPECT_TRUE(p.minimum());
  EXPECT_TRUE(p.maximum());
}

TEST(Bisector, SquareFromFirstQuadrant) {
  const Fan sq = fan_square();
  const FanPoset p = rank2_bisector_poset(sq, max_cone(sq, 1));
  EXPECT_EQ(p.minimum(), max_cone(sq, 1));
  EXPECT_EQ(p.maximum(), sq.id({1, 2}));
  EXPECT_EQ(p.hasse().size(), 4u);
  EXPECT_TRUE(p.less(max_cone(sq, 1), max_cone(sq, 2)));
  EXPECT_TRUE(p.less(max_cone(sq, 1), max_cone(sq, 4)));
  EXPECT_FALSE(p.leq(max_cone(sq, 2), max_cone(sq, 4)));
}

TEST(Bisector, HirzebruchHasFourElements) {
  const Fan hz = fan_hirzebruch(1);
  const FanPoset p = rank2_bisector_poset(hz, max_cone(hz, 1));
  EXPECT_EQ(p.elements().size(), 4u);
  EXPECT_EQ(p.minimum(), max_cone(hz, 1));
  EXPECT_TRUE(check_weak_fan_poset(p).facial_ok());
}

TEST(Bisector, TieBreakTakesCounterclockwiseChamber) {
  // the opposite bisector of the first quadrant is the ray (-1,-1)
  const Fan f(2, {iv({1, 0}), iv({0, 1}), iv({-1, 0}), iv({-1, -1}), iv({0, -1})},
              {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  const FanPoset p = rank2_bisector_poset(f, f.id({0, 1}));
  EXPECT_EQ(p.maximum(), f.id({3, 4}));
  EXPECT_TRUE(check_weak_fan_poset(p).facial_ok());
}

TEST(Bisector, TieBreakAvoidsChambersAdjacentToBase) {
  const Fan hz = fan_hirzebruch(1);
  const FanPoset p = rank2_bisector_poset(hz, max_cone(hz, 2));
  EXPECT_TRUE(check_weak_fan_poset(p).facial_ok());
  EXPECT_EQ(p.maximum(), max_cone(hz, 4));
}

TEST(Bisector, FacialIntervalsOnAllBases) {
  for (const auto& f : {fan_square(), fan_hirzebruch(1), fan_hirzebruch(2), fan_hirzebruch(3), fan_three_lines()})
    for (ConeId base : f.maximal()) {
      const FanPoset p = rank2_bisector_poset(f, base);
      EXPECT_TRUE(check_weak_fan_poset(p).facial_ok()) << cone_label(f, base);
      EXPECT_EQ(p.minimum(), base);
      const auto fi = facial_interval(p, f.zero());
      EXPECT_EQ(fi.minimum, *p.minimum());
      EXPECT_EQ(fi.maximum, *p.maximum());
    }
}

TEST(Bisector, Errors) {
  EXPECT_EQ(error_code([] {
              const Fan c3 = fan_coordinate(3);
              rank2_bisector_poset(c3, c3.maximal().front());
            }),
            "NotRank2");
  const Fan sq = fan_square();
  EXPECT_EQ(error_code([&] { rank2_bisector_poset(sq, ray_cone(sq, 1)); }), "NotAChamber");
}

TEST(WeakFanPoset, Checks) {
  const Fan sq = fan_square();
  const FanPoset p = poset_from_linear_functional(sq, rv({1, 1}));
  const auto report = check_weak_fan_poset(p);
  EXPECT_TRUE(report.ok());
  EXPECT_FALSE(report.weak_variant_checked);
  EXPECT_EQ(facial_interval(p, sq.zero()).members.size(), 4u);
  EXPECT_TRUE(check_weak_fan_poset(rank2_bisector_poset(sq, max_cone(sq, 1))).facial_ok());

  // reversing the cover across (0,1) makes the poset a chain, so the star of (-1,0) is no longer an interval
  std::vector<std::pair<ConeId, ConeId>> covers;
  for (const auto& c : p.covers()) covers.emplace_back(c.lower, c.upper);
  const ConeId t1 = max_cone(sq, 1), t4 = max_cone(sq, 4);
  for (auto& c : covers)
    if (c == std::make_pair(t4, t1)) c = {t1, t4};
  const FanPoset broken(sq, covers);
  const auto bad = check_weak_fan_poset(broken);
  EXPECT_FALSE(bad.facial_ok());
  EXPECT_EQ(bad.facial_failures, std::vector<ConeId>{ray_cone(sq, 3)});
}

TEST(FanPosetType, Errors) {
  const Fan sq = fan_square();
  EXPECT_EQ(error_code([&] { FanPoset(sq, {{max_cone(sq, 1), max_cone(sq, 3)}}); }), "PosetInvalid");
  EXPECT_EQ(error_code([&] {
              FanPoset(sq, {{max_cone(sq, 1), max_cone(sq, 2)}, {max_cone(sq, 2), max_cone(sq, 1)}});
            }),
            "PosetInvalid");
}

TEST(FacialInterval, Examples) {
  const Fan sq = fan_square();
  const FanPoset p = poset_from_linear_functional(sq, rv({1, 1}));
  const auto chamber = facial_interval(p, max_cone(sq, 2));
  EXPECT_EQ(chamber.minimum, max_cone(sq, 2));
  EXPECT_EQ(chamber.maximum, max_cone(sq, 2));
  const auto ray = facial_interval(p, ray_cone(sq, 1));
  EXPECT_EQ(std::set<ConeId>(ray.members.begin(), ray.members.end()),
            (std::set<ConeId>{max_cone(sq, 1), max_cone(sq, 2)}));
  EXPECT_EQ(ray.minimum, max_cone(sq, 2));
  EXPECT_EQ(ray.maximum, max_cone(sq, 1));
  const auto origin = facial_interval(p, sq.zero());
  EXPECT_EQ(origin.minimum, max_cone(sq, 3));
  EXPECT_EQ(origin.maximum, max_cone(sq, 1));
}

TEST(Nondegenerate, TorusExamples) {
  const Fan sq = fan_square();
  const Partition torus = torus_partition(sq);
  EXPECT_TRUE(check_nondegenerate(torus, poset_from_linear_functional(sq, rv({1, 1}))).nondegenerate);
  // walls on (1,0) and (-1,0) crossed in opposite directions
  const ConeId t1 = max_cone(sq, 1), t2 = max_cone(sq, 2), t3 = max_cone(sq, 3), t4 = max_cone(sq, 4);
  const FanPoset twisted(sq, {{t2, t1}, {t4, t3}, {t3, t2}, {t4, t1}});
  const auto r = check_nondegenerate(torus, twisted);
  EXPECT_FALSE(r.nondegenerate);
  EXPECT_EQ(r.block, torus.block_of(ray_cone(sq, 1)));
  for (const auto& f : {fan_square(), fan_hirzebruch(1)})
    EXPECT_TRUE(check_nondegenerate(Partition::finest(f.num_cones()), rank2_bisector_poset(f, f.maximal()[0]))
                    .nondegenerate);
}

TEST(Nondegenerate, FunctionalPosetsOnAllAdmissiblePartitions) {
  const std::vector<RationalVector> functionals{rv({1, 2}), rv({3, 1}), rv({-1, 2}), rv({-2, -5})};
  for (const auto& f : {fan_square(), fan_hirzebruch(1), fan_three_lines()}) {
    const auto partitions = f.num_cones() <= 9 ? enumerate_admissible(f)
                                               : std::vector<Partition>{coarsest_partition(f)};
    for (const auto& b : functionals) {
      const FanPoset poset = poset_from_linear_functional(f, b);
      for (const auto& p : partitions) EXPECT_TRUE(check_nondegenerate(p, poset).nondegenerate);
    }
  }
  const Fan c3 = fan_coordinate(3);
  EXPECT_TRUE(check_nondegenerate(coarsest_partition(c3), poset_from_linear_functional(c3, rv({1, 2, 3}))).nondegenerate);
}

}  // namespace
}  // namespace pfan
