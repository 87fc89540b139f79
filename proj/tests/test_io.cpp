#include <gtest/gtest.h>

#include "test_support.hpp"

namespace pfan {
namespace {

using namespace pfan::testing;

TEST(Json, IntegersBeyondMachineRange) {
  const Integer big("123456789012345678901234567890");
  EXPECT_TRUE(integer_json(big).is_string());
  EXPECT_EQ(integer_from_json(integer_json(big)), big);
  EXPECT_EQ(integer_from_json(integer_json(Integer(-7))), -7);
  EXPECT_EQ(error_code([] { integer_from_json(json("x1")); }), "ParseError");
  EXPECT_EQ(vector_from_json(vector_json(iv({3, -4, 0}))), iv({3, -4, 0}));
}

TEST(Json, FanRoundTrip) {
  for (const auto& f : {fan_square(), fan_hirzebruch(2), fan_three_lines(), fan_coordinate(3)}) {
    const json j = fan_to_json(f);
    EXPECT_EQ(j.at("dim"), f.dim());
    EXPECT_TRUE(j.contains("max_cones"));
    const Fan g = fan_from_json(j);
    EXPECT_EQ(g.rays(), f.rays());
    EXPECT_EQ(g.max_cones(), f.max_cones());
    EXPECT_EQ(g.num_cones(), f.num_cones());
    EXPECT_EQ(fan_to_json(g), j);
  }
}

TEST(Json, FanAcceptsConesKey) {
  const json j = {{"dim", 2}, {"rays", {{1, 0}, {0, 1}, {-1, -1}}}, {"cones", {{0, 1}, {1, 2}, {0, 2}}}};
  const Fan f = fan_from_json(j);
  EXPECT_EQ(f.maximal().size(), 3u);
  EXPECT_TRUE(is_finite_complete(f));
  EXPECT_EQ(error_code([] { fan_from_json(json{{"dim", 2}, {"rays", {{1, 0}}}}); }), "ParseError");
  EXPECT_EQ(error_code([] { fan_from_json(json{{"dim", 2}, {"rays", {{1, 0}}}, {"max_cones", {{0, 5}}}}); }), "BadIndex");
}

TEST(Json, PartitionRoundTrip) {
  const Fan sq = fan_square(), hz = fan_hirzebruch(1);
  for (const auto& [f, p] : std::vector<std::pair<const Fan*, Partition>>{
           {&sq, torus_partition(sq)}, {&hz, hirzebruch_p1(hz)}, {&sq, Partition::finest(sq.num_cones())}}) {
    EXPECT_EQ(partition_from_json(*f, partition_to_json(*f, p)), p);
  }
  // unlisted cones become singletons
  const Partition seeded = partition_from_json(sq, json::array({json::array({json::array({0}), json::array({2})})}));
  EXPECT_EQ(seeded.num_blocks(), sq.num_cones() - 1);
  EXPECT_TRUE(seeded.same(ray_cone(sq, 1), ray_cone(sq, 3)));
  EXPECT_EQ(partition_labels_json(sq, torus_partition(sq)).size(), 4u);
  EXPECT_EQ(error_code([&] { partition_from_json(sq, json::array({json::array({json::array({0, 2})})})); }), "UnknownCone");
}

TEST(Json, PosetRoundTrip) {
  const Fan hz = fan_hirzebruch(1);
  const FanPoset p = rank2_bisector_poset(hz, max_cone(hz, 1));
  const FanPoset q = poset_from_json(hz, poset_to_json(p));
  EXPECT_EQ(poset_to_json(q), poset_to_json(p));
  for (ConeId a : p.elements())
    for (ConeId b : p.elements()) EXPECT_EQ(q.leq(a, b), p.leq(a, b));
  EXPECT_EQ(error_code([&] { poset_from_json(hz, json{{"covers", {{{0, 3}}}}}); }), "ParseError");
}

TEST(Json, ArrangementRoundTrip) {
  const Arrangement b = builtin_brauer();
  const Arrangement c = arrangement_from_json(arrangement_to_json(b));
  EXPECT_EQ(c.dim, b.dim);
  EXPECT_EQ(c.normals, b.normals);
  EXPECT_EQ(error_code([] { arrangement_from_json(json{{"dim", 2}, {"normals", {{1, 0}, {2, 0}}}}); }),
            "ParallelNormals");
}

TEST(Json, PresentationRoundTrip) {
  const Fan sq = fan_square();
  const Presentation g =
      picture_group(sq, torus_partition(sq), poset_from_linear_functional(sq, RationalVector{1, 1}), PictureMode::Full);
  const json j = presentation_to_json(g);
  EXPECT_EQ(j.at("text"), to_text(g));
  const Presentation h = presentation_from_json(j);
  EXPECT_EQ(h.relators, g.relators);
  ASSERT_EQ(h.generators.size(), g.generators.size());
  for (std::size_t i = 0; i < g.generators.size(); ++i) {
    EXPECT_EQ(h.generators[i].name, g.generators[i].name);
    EXPECT_EQ(h.generators[i].rays, g.generators[i].rays);
  }
  EXPECT_EQ(error_code([] { presentation_from_json(json{{"generators", {{{"name", "a"}}}}, {"relators", {{"b"}}}}); }),
            "ParseError");
}

TEST(Json, ComplexAndCategoryShapes) {
  const Fan sq = fan_square();
  const Partition torus = torus_partition(sq);
  const CWComplex cw = build_cw(sq, torus);
  const json c = cw_to_json(cw);
  EXPECT_EQ(c.at("counts"), json({1, 2, 1}));
  EXPECT_EQ(c.at("euler_characteristic"), 0);
  ASSERT_EQ(c.at("two_cells").size(), 1u);
  EXPECT_EQ(c.at("two_cells")[0].at("boundary").size(), 4u);
  const json k = category_to_json(Category(sq, torus));
  EXPECT_EQ(k.at("objects").size(), torus.num_blocks());
  EXPECT_TRUE(k.at("composition_issues").empty());
  for (const auto& m : k.at("morphisms")) {
    EXPECT_TRUE(m.contains("signature"));
    EXPECT_FALSE(m.at("representatives").empty());
  }
}

}  // namespace
}  // namespace pfan
