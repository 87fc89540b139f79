#include <gtest/gtest.h>

#include "test_support.hpp"

namespace pfan {
namespace {

using namespace pfan::testing;

std::vector<std::pair<const Fan*, Partition>> corpus(const Fan& sq, const Fan& hz, const Fan& tl, const Fan& c3) {
  std::vector<std::pair<const Fan*, Partition>> out;
  for (const auto& p : enumerate_admissible(sq)) out.emplace_back(&sq, p);
  for (const auto& p : enumerate_admissible(hz)) out.emplace_back(&hz, p);
  out.emplace_back(&tl, Partition::finest(tl.num_cones()));
  out.emplace_back(&tl, coarsest_partition(tl));
  out.emplace_back(&c3, Partition::finest(c3.num_cones()));
  out.emplace_back(&c3, coarsest_partition(c3));
  return out;
}

TEST(BuildCategory, HomSetExamples) {
  const Fan hz = fan_hirzebruch(1);
  const Partition p1 = hirzebruch_p1(hz);
  const Category cat(hz, p1);
  const BlockId s2 = p1.block_of(ray_cone(hz, 2));
  EXPECT_EQ(cat.hom(s2, p1.block_of(max_cone(hz, 1))).size(), 1u);
  EXPECT_EQ(cat.hom(s2, p1.block_of(max_cone(hz, 3))).size(), 1u);
  EXPECT_EQ(cat.out(s2).size(), 3u);

  const Fan sq = fan_square();
  const Category fine(sq, Partition::finest(sq.num_cones()));
  for (BlockId a = 0; a < static_cast<BlockId>(fine.num_objects()); ++a)
    for (BlockId b = 0; b < static_cast<BlockId>(fine.num_objects()); ++b)
      EXPECT_EQ(fine.hom(a, b).size(), sq.contains(fine.partition().block(b)[0], fine.partition().block(a)[0]) ? 1u : 0u);

  const Partition torus = torus_partition(sq);
  const Category tc(sq, torus);
  EXPECT_EQ(tc.hom(torus.block_of(sq.zero()), torus.block_of(max_cone(sq, 1))).size(), 4u);
  EXPECT_EQ(error_code([&] {
              Category(hz, Partition::from_blocks(hz.num_cones(), {{ray_cone(hz, 2), ray_cone(hz, 4)}}));
            }),
            "NotAdmissible");
}

TEST(BuildCategory, HomSizesMatchDistinctProjections) {
  const Fan sq = fan_square(), hz = fan_hirzebruch(1), tl = fan_three_lines(), c3 = fan_coordinate(3);
  for (const auto& [fan, p] : corpus(sq, hz, tl, c3)) {
    const Category cat(*fan, p);
    std::map<std::pair<BlockId, BlockId>, std::set<CanonicalCone>> oracle;
    for (ConeId s = 0; s < static_cast<ConeId>(fan->num_cones()); ++s)
      for (ConeId t : star_oracle(*fan, s))
        oracle[{p.block_of(s), p.block_of(t)}].insert(projected_cone_oracle(*fan, s, t));
    std::size_t total = 0;
    for (BlockId a = 0; a < static_cast<BlockId>(cat.num_objects()); ++a)
      for (BlockId b = 0; b < static_cast<BlockId>(cat.num_objects()); ++b) {
        auto it = oracle.find({a, b});
        EXPECT_EQ(cat.hom(a, b).size(), it == oracle.end() ? 0u : it->second.size());
        total += cat.hom(a, b).size();
      }
    EXPECT_EQ(total, cat.num_morphisms());
    for (const auto& m : cat.morphisms())
      for (auto [s, t] : m.representatives) EXPECT_EQ(static_cast<int>(fan->cone_dim(t) - fan->cone_dim(s)), m.rank);
  }
}

TEST(Compose, Examples) {
  const Fan sq = fan_square();
  const Partition torus = torus_partition(sq);
  const Category cat(sq, torus);
  const ConeId s1 = ray_cone(sq, 1), t1 = max_cone(sq, 1);
  const MorphId f = cat.class_of(sq.zero(), s1), g = cat.class_of(s1, t1);
  EXPECT_EQ(compose(cat, f, g), cat.class_of(sq.zero(), t1));
  EXPECT_EQ(compose(cat, cat.identity(torus.block_of(sq.zero())), f), f);
  EXPECT_EQ(compose(cat, f, cat.identity(torus.block_of(s1))), f);
  EXPECT_EQ(error_code([&] { compose(cat, g, f); }), "NotComposable");

  const Fan hz = fan_hirzebruch(1);
  const Category hc(hz, hirzebruch_p1(hz));
  const MorphId a = hc.class_of(ray_cone(hz, 2), max_cone(hz, 2));
  EXPECT_EQ(a, hc.class_of(ray_cone(hz, 4), max_cone(hz, 1)));
  EXPECT_EQ(compose(hc, hc.class_of(hz.zero(), ray_cone(hz, 2)), a), hc.class_of(hz.zero(), max_cone(hz, 2)));
  EXPECT_EQ(compose(hc, hc.class_of(hz.zero(), ray_cone(hz, 4)), a), hc.class_of(hz.zero(), max_cone(hz, 1)));
}

TEST(Compose, RespectsRepresentativesAndAssociates) {
  const Fan sq = fan_square(), hz = fan_hirzebruch(1), tl = fan_three_lines(), c3 = fan_coordinate(3);
  for (const auto& [fan, p] : corpus(sq, hz, tl, c3)) {
    const Category cat(*fan, p);
    EXPECT_TRUE(cat.composition_issues().empty());
    // any chain of inclusions sigma <= kappa <= tau composes to the class of (sigma, tau)
    for (ConeId s = 0; s < static_cast<ConeId>(fan->num_cones()); ++s)
      for (ConeId k : fan->star(s))
        for (ConeId t : fan->star(k))
          EXPECT_EQ(compose(cat, cat.class_of(s, k), cat.class_of(k, t)), cat.class_of(s, t));
    for (const auto& [fg, h] : cat.composition_table()) {
      for (MorphId k : cat.out(cat.morphism(h).target)) {
        const MorphId left = compose(cat, fg.first, compose(cat, fg.second, k));
        EXPECT_EQ(compose(cat, h, k), left);
      }
    }
  }
}

TEST(FactorizationCube, Examples) {
  const Fan sq = fan_square();
  const Category cat(sq, Partition::finest(sq.num_cones()));
  const MorphId id = cat.identity(0);
  EXPECT_EQ(factorization_cube(cat, id).objects.size(), 1u);
  const auto cube = factorization_cube(cat, cat.class_of(sq.zero(), max_cone(sq, 1)));
  EXPECT_EQ(cube.rank, 2);
  EXPECT_EQ(cube.objects.size(), 4u);
  EXPECT_EQ(cube.edges.size(), 4u);
  std::set<BlockId> middles;
  for (const auto& o : cube.objects) {
    middles.insert(o.middle);
    EXPECT_EQ(compose(cat, o.first, o.second), cube.anchor);
  }
  EXPECT_EQ(middles.size(), 4u);
}

TEST(FactorizationCube, IdentifiedOppositeAxes) {
  const Fan c3 = fan_coordinate(3);
  const ConeId e1 = c3.id({0}), m1 = c3.id({1});
  const Partition p = admissible_closure(c3, {{e1, m1}});
  const Category cat(c3, p);
  const ConeId pos = c3.id({0, 2, 4}), neg = c3.id({1, 2, 4});
  const MorphId f = cat.class_of(e1, pos);
  ASSERT_EQ(f, cat.class_of(m1, neg));
  for (int extra : {2, 4}) {
    const ConeId k1 = c3.id({0, extra}), k2 = c3.id({1, extra});
    EXPECT_EQ(cat.class_of(e1, k1), cat.class_of(m1, k2));
    EXPECT_EQ(cat.class_of(k1, pos), cat.class_of(k2, neg));
    EXPECT_TRUE(p.same(k1, k2));
  }
  const auto cube = factorization_cube(cat, f);
  EXPECT_EQ(cube.objects.size(), 4u);
  for (std::size_t i = 0; i < cube.edges.size(); ++i) {
    const auto [lo, hi] = cube.edges[i];
    EXPECT_EQ(lo & hi, lo);
    EXPECT_EQ(__builtin_popcount(lo ^ hi), 1);
  }
}

TEST(Factors, Examples) {
  const Fan sq = fan_square();
  const Category cat(sq, Partition::finest(sq.num_cones()));
  const MorphId r1 = cat.class_of(ray_cone(sq, 1), max_cone(sq, 1));
  EXPECT_EQ(first_factors(cat, r1), std::vector<MorphId>{r1});
  EXPECT_EQ(last_factors(cat, r1), std::vector<MorphId>{r1});
  const auto last = last_factors(cat, cat.class_of(sq.zero(), max_cone(sq, 1)));
  const std::set<MorphId> expected{cat.class_of(ray_cone(sq, 1), max_cone(sq, 1)),
                                   cat.class_of(ray_cone(sq, 4), max_cone(sq, 1))};
  EXPECT_EQ(std::set<MorphId>(last.begin(), last.end()), expected);
  EXPECT_EQ(error_code([&] { last_factors(cat, cat.identity(0)); }), "RankZero");

  const Fan c3 = fan_coordinate(3);
  const Category cc(c3, Partition::finest(c3.num_cones()));
  const MorphId octant = cc.class_of(c3.zero(), c3.id({0, 2, 4}));
  EXPECT_EQ(first_factors(cc, octant).size(), 3u);
  EXPECT_EQ(last_factors(cc, octant).size(), 3u);
}

TEST(CheckCubical, PassesOnCorpus) {
  const Fan sq = fan_square(), hz = fan_hirzebruch(1), tl = fan_three_lines(), c3 = fan_coordinate(3);
  for (const auto& [fan, p] : corpus(sq, hz, tl, c3)) EXPECT_TRUE(check_cubical(Category(*fan, p)).all_pass());
}

TEST(CheckCubical, CorruptedTableFailsRankAdditivity) {
  const Fan sq = fan_square();
  Category cat(sq, torus_partition(sq));
  const ConeId s1 = ray_cone(sq, 1);
  const MorphId f = cat.class_of(sq.zero(), s1), g = cat.class_of(s1, max_cone(sq, 1));
  cat.override_composition(f, g, f);
  const AxiomReport report = check_cubical(cat);
  EXPECT_FALSE(report.passes(1));
  ASSERT_FALSE(report.violations.empty());
  EXPECT_FALSE(report.violations.front().witness.is_null());
}

TEST(LastFactorCompatibility, Examples) {
  const Fan tl = fan_three_lines();
  const Category bad(tl, coarsest_partition(tl));
  const auto r = check_last_factor_compatibility(bad);
  EXPECT_FALSE(r.compatible);
  ASSERT_EQ(r.counterexample.size(), 3u);
  for (MorphId m : r.counterexample) {
    EXPECT_EQ(bad.morphism(m).rank, 1);
    EXPECT_EQ(bad.morphism(m).target, r.object);
  }
  const Fan sq = fan_square(), hz = fan_hirzebruch(1);
  EXPECT_TRUE(check_last_factor_compatibility(Category(sq, torus_partition(sq))).compatible);
  EXPECT_TRUE(check_last_factor_compatibility(Category(hz, hirzebruch_p1(hz))).compatible);
  for (const Fan* f : {&sq, &hz, &tl})
    EXPECT_TRUE(check_last_factor_compatibility(Category(*f, Partition::finest(f->num_cones()))).compatible);
}

TEST(LastFactorCompatibility, CounterexampleIsPairwiseCompatible) {
  const Fan tl = fan_three_lines();
  const Category cat(tl, coarsest_partition(tl));
  const auto r = check_last_factor_compatibility(cat);
  ASSERT_FALSE(r.compatible);
  // oracle: a pair is compatible iff some rank-2 morphism has exactly that pair as last factors
  std::set<std::set<MorphId>> pairs;
  for (const auto& m : cat.morphisms())
    if (m.rank == 2 && m.target == r.object) {
      const auto lf = last_factors(cat, static_cast<MorphId>(&m - cat.morphisms().data()));
      pairs.insert(std::set<MorphId>(lf.begin(), lf.end()));
    }
  const auto& c = r.counterexample;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) EXPECT_TRUE(pairs.count({c[i], c[j]})) << i << "," << j;
}

TEST(ExportDot, NodeCounts) {
  auto nodes = [](const std::string& dot) {
    std::size_t n = 0;
    std::istringstream is(dot);
    for (std::string line; std::getline(is, line);)
      if (line.find("[label=") != std::string::npos && line.find("->") == std::string::npos) ++n;
    return n;
  };
  const Fan hz = fan_hirzebruch(1);
  EXPECT_EQ(nodes(export_category_dot(Category(hz, hirzebruch_p1(hz)))), 6u);
  const Fan sq = fan_square();
  EXPECT_EQ(nodes(export_category_dot(Category(sq, torus_partition(sq)))), 4u);
  const std::string face_poset = export_category_dot(Category(sq, Partition::finest(sq.num_cones())));
  EXPECT_EQ(nodes(face_poset), 9u);
  EXPECT_EQ(std::count(face_poset.begin(), face_poset.end(), '>'), 12);
}

TEST(CoarseningFunctor, ShardToFlatOnThreeLines) {
  const Arrangement arr = arrangement_three_lines();
  const Fan fan = arrangement_fan(arr);
  const ConeId base = default_base(arr, fan);
  const Category fine(fan, shard_partition(arr, fan, base));
  const Category coarse(fan, flat_partition(arr, fan));
  const auto report = coarsening_functor(fine, coarse);
  EXPECT_TRUE(report.well_defined);
  EXPECT_TRUE(report.surjective_on_objects);
  EXPECT_EQ(report.image.size(), fine.num_morphisms());
  EXPECT_EQ(error_code([&] { coarsening_functor(coarse, fine); }), "NotComparable");
}

}  // namespace
}  // namespace pfan
