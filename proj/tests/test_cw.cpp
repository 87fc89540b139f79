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

Partition cylinder_partition(const Fan& sq) { return admissible_closure(sq, {{ray_cone(sq, 1), ray_cone(sq, 3)}}); }

TEST(CellCounts, SquareExamples) {
  const Fan sq = fan_square();
  const CWComplex disk = build_cw(sq, Partition::finest(sq.num_cones()));
  EXPECT_EQ(disk.counts(), (std::vector<std::size_t>{4, 4, 1}));
  EXPECT_EQ(euler_characteristic(disk), 1);
  const CWComplex cylinder = build_cw(sq, cylinder_partition(sq));
  EXPECT_EQ(cylinder.counts(), (std::vector<std::size_t>{2, 3, 1}));
  EXPECT_EQ(euler_characteristic(cylinder), 0);
  const CWComplex torus = build_cw(sq, torus_partition(sq));
  EXPECT_EQ(torus.counts(), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(euler_characteristic(torus), 0);
}

TEST(CellCounts, MatchBlockCountsPerDimension) {
  for (const auto& f : {fan_square(), fan_hirzebruch(1), fan_hirzebruch(2)})
    for (const auto& p : enumerate_admissible(f)) {
      std::vector<std::size_t> expected(f.dim() + 1, 0);
      std::set<BlockId> counted;
      for (ConeId c = 0; c < static_cast<ConeId>(f.num_cones()); ++c)
        if (counted.insert(p.block_of(c)).second) ++expected[f.dim() - f.cone_dim(c)];
      const CWComplex cw = build_cw(f, p);
      EXPECT_EQ(cw.counts(), expected);
      EXPECT_EQ(cw.zero_cells, cw.cells[0]);
      EXPECT_EQ(cw.one_cells.size(), cw.cells[1].size());
      EXPECT_EQ(cw.two_cells.size(), cw.cells[2].size());
    }
}

TEST(CellCounts, FinestComplexesAreContractibleByEuler) {
  // a complete fan in R^n has alternating face sum (-1)^n, so the finest complex has Euler characteristic 1
  for (const auto& f : {fan_square(), fan_hirzebruch(3), fan_three_lines(), fan_coordinate(3)})
    EXPECT_EQ(euler_characteristic(build_cw(f, Partition::finest(f.num_cones()))), 1);
}

TEST(TwoCells, BoundaryIsAClosedLoopAroundTheStar) {
  const Fan c3 = fan_coordinate(3);
  std::vector<std::pair<const Fan*, Partition>> cases;
  const Fan sq = fan_square(), hz = fan_hirzebruch(1), tl = fan_three_lines();
  for (const auto& p : enumerate_admissible(sq)) cases.emplace_back(&sq, p);
  for (const auto& p : enumerate_admissible(hz)) cases.emplace_back(&hz, p);
  cases.emplace_back(&tl, coarsest_partition(tl));
  cases.emplace_back(&c3, coarsest_partition(c3));
  cases.emplace_back(&c3, Partition::finest(c3.num_cones()));
  for (const auto& [f, p] : cases) {
    const CWComplex cw = build_cw(*f, p);
    for (const auto& cell : cw.two_cells) {
      std::set<ConeId> star;
      for (ConeId t : star_oracle(*f, cell.representative))
        if (f->cone_dim(t) == f->dim()) star.insert(t);
      EXPECT_EQ(std::set<ConeId>(cell.chambers.begin(), cell.chambers.end()), star);
      ASSERT_EQ(cell.boundary.size(), cell.chambers.size());
      const std::size_t k = cell.chambers.size();
      for (std::size_t i = 0; i < k; ++i) {
        const auto& l = cell.boundary[i];
        const OneCell& e = cw.one_cells[static_cast<std::size_t>(l.gen)];
        const BlockId from = l.exp > 0 ? e.tail : e.head, to = l.exp > 0 ? e.head : e.tail;
        EXPECT_EQ(from, p.block_of(cell.chambers[i]));
        EXPECT_EQ(to, p.block_of(cell.chambers[(i + 1) % k]));
      }
    }
  }
}

TEST(TwoCells, DegreesCancelOnTheTorus) {
  const Fan sq = fan_square();
  const CWComplex cw = build_cw(sq, torus_partition(sq));
  ASSERT_EQ(cw.two_cells.size(), 1u);
  std::vector<int> degree(cw.one_cells.size(), 0);
  for (const auto& l : cw.two_cells[0].boundary) degree[static_cast<std::size_t>(l.gen)] += l.exp;
  EXPECT_EQ(degree, (std::vector<int>{0, 0}));
}

TEST(FundamentalGroup, SquareExamples) {
  const Fan sq = fan_square();
  const Presentation torus = pi1_presentation(build_cw(sq, torus_partition(sq)));
  EXPECT_EQ(torus.generators.size(), 2u);
  EXPECT_EQ(torus.normalized_relators().size(), 1u);
  EXPECT_EQ(abelianization(torus).free_rank, 2u);
  EXPECT_TRUE(abelianization(torus).torsion.empty());

  const Presentation disk = eliminate_single_occurrences(pi1_presentation(build_cw(sq, Partition::finest(sq.num_cones()))));
  EXPECT_TRUE(disk.generators.empty());

  const Presentation cylinder = eliminate_single_occurrences(pi1_presentation(build_cw(sq, cylinder_partition(sq))));
  EXPECT_EQ(cylinder.generators.size(), 1u);
  EXPECT_EQ(abelianization(cylinder).free_rank, 1u);
}

TEST(FundamentalGroup, FinestBoundaryAbelianizesToZero) {
  for (const auto& f : {fan_square(), fan_hirzebruch(2), fan_three_lines(), fan_coordinate(3)}) {
    const Abelianization ab = abelianization(pi1_presentation(build_cw(f, Partition::finest(f.num_cones()))));
    EXPECT_EQ(ab.free_rank, 0u);
    EXPECT_TRUE(ab.torsion.empty());
  }
}

TEST(Comparison, TorusMatchesPictureGroup) {
  const Fan sq = fan_square();
  const Partition torus = torus_partition(sq);
  const auto c = compare_pi1_picture(build_cw(sq, torus),
                                     picture_group(sq, torus, poset_from_linear_functional(sq, rv({1, 1})), PictureMode::Full));
  EXPECT_TRUE(c.match());
  EXPECT_EQ(c.pi1_generators, 2u);
  EXPECT_EQ(c.pi1_abelianization.free_rank, 2u);
}

TEST(Comparison, ThreeLinesCoarsest) {
  const Fan tl = fan_three_lines();
  const Partition p = coarsest_partition(tl);
  const auto c = compare_pi1_picture(build_cw(tl, p),
                                     picture_group(tl, p, poset_from_linear_functional(tl, rv({1, 2})), PictureMode::Codim2));
  EXPECT_TRUE(c.match());
  EXPECT_EQ(c.pi1_generators, 3u);
}

TEST(Comparison, BrauerShards) {
  const Arrangement arr = builtin_brauer();
  const Fan fan = arrangement_fan(arr);
  const ConeId base = default_base(arr, fan);
  const Partition p = shard_partition(arr, fan, base);
  const CWComplex cw = build_cw(fan, p);
  EXPECT_EQ(cw.zero_cells.size(), 1u);
  const auto c = compare_pi1_picture(cw, picture_group(fan, p, poset_of_regions(arr, fan, base), PictureMode::Codim2));
  EXPECT_TRUE(c.match());
  EXPECT_EQ(c.pi1_generators, 15u);
}

TEST(Errors, Preconditions) {
  const Fan quadrant(2, {iv({1, 0}), iv({0, 1})}, {{0, 1}});
  EXPECT_EQ(error_code([&] { build_cw(quadrant, Partition::finest(quadrant.num_cones())); }), "NotComplete");
  const Fan hz = fan_hirzebruch(1);
  EXPECT_EQ(error_code([&] {
              build_cw(hz, Partition::from_blocks(hz.num_cones(), {{ray_cone(hz, 2), ray_cone(hz, 4)}}));
            }),
            "NotAdmissible");
  const Fan sq = fan_square();
  const Partition fin = Partition::finest(sq.num_cones());
  EXPECT_EQ(error_code([&] {
              compare_pi1_picture(build_cw(sq, fin),
                                  picture_group(sq, fin, poset_from_linear_functional(sq, rv({1, 1})), PictureMode::Full));
            }),
            "PreconditionUnmet");
}

}  // namespace
}  // namespace pfan
