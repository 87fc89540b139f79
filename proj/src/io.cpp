#include "pfan/io.hpp"

#include <map>

#include "pfan/error.hpp"

namespace pfan {

json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return static_cast<long long>(x);
  return x.str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw Error("ParseError", "expected an integer", j);
}

json vector_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(integer_json(x));
  return out;
}

IntVector vector_from_json(const json& j) {
  if (!j.is_array()) throw Error("ParseError", "expected an integer vector", j);
  IntVector v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error("ParseError", std::string("missing field '") + key + "'", j);
  return j.at(key);
}

json cone_json(const Fan& fan, ConeId c) { return fan.cone(c); }

ConeId cone_from_json(const Fan& fan, const json& j) {
  if (!j.is_array()) throw Error("ParseError", "expected a list of ray indices", j);
  RaySet rs = j.get<RaySet>();
  std::sort(rs.begin(), rs.end());
  return fan.id(rs);
}

json cones_json(const Fan& fan, const CanonicalCone& c) {
  (void)fan;
  json out = json::array();
  for (const auto& r : c) out.push_back(vector_json(r));
  return out;
}

}  // namespace

json fan_to_json(const Fan& fan) {
  json rays = json::array();
  for (const auto& r : fan.rays()) rays.push_back(vector_json(r));
  return {{"dim", fan.dim()}, {"rays", rays}, {"max_cones", fan.max_cones()}};
}

Fan fan_from_json(const json& j) {
  try {
    std::vector<IntVector> rays;
    for (const auto& r : field(j, "rays")) rays.push_back(vector_from_json(r));
    const char* key = j.is_object() && j.contains("cones") && !j.contains("max_cones") ? "cones" : "max_cones";
    return Fan(field(j, "dim").get<std::size_t>(), rays, field(j, key).get<std::vector<RaySet>>());
  } catch (const json::exception& e) {
    throw Error("ParseError", e.what());
  }
}

json partition_to_json(const Fan& fan, const Partition& p) {
  json out = json::array();
  for (const auto& b : p.blocks()) {
    json block = json::array();
    for (ConeId c : b) block.push_back(cone_json(fan, c));
    out.push_back(block);
  }
  return out;
}

Partition partition_from_json(const Fan& fan, const json& j) {
  if (!j.is_array()) throw Error("ParseError", "expected a list of blocks", j);
  std::vector<std::vector<ConeId>> blocks;
  for (const auto& b : j) {
    if (!b.is_array()) throw Error("ParseError", "expected a block as a list of cones", b);
    std::vector<ConeId> block;
    for (const auto& c : b) block.push_back(cone_from_json(fan, c));
    blocks.push_back(block);
  }
  return Partition::from_blocks(fan.num_cones(), blocks);
}

json partition_labels_json(const Fan& fan, const Partition& p) {
  json out = json::array();
  for (const auto& b : p.blocks()) {
    json block = json::array();
    for (ConeId c : b) block.push_back(cone_label(fan, c));
    out.push_back(block);
  }
  return out;
}

json poset_to_json(const FanPoset& poset) {
  json covers = json::array();
  for (const auto& c : poset.covers())
    covers.push_back({cone_json(poset.fan(), c.lower), cone_json(poset.fan(), c.upper)});
  return {{"covers", covers}};
}

FanPoset poset_from_json(const Fan& fan, const json& j) {
  std::vector<std::pair<ConeId, ConeId>> covers;
  for (const auto& c : field(j, "covers")) {
    if (!c.is_array() || c.size() != 2) throw Error("ParseError", "expected a [lower, upper] pair", c);
    covers.emplace_back(cone_from_json(fan, c[0]), cone_from_json(fan, c[1]));
  }
  return FanPoset(fan, covers);
}

json arrangement_to_json(const Arrangement& arr) {
  json normals = json::array();
  for (const auto& n : arr.normals) normals.push_back(vector_json(n));
  return {{"dim", arr.dim}, {"normals", normals}};
}

Arrangement arrangement_from_json(const json& j) {
  std::vector<IntVector> normals;
  for (const auto& n : field(j, "normals")) normals.push_back(vector_from_json(n));
  return make_arrangement(field(j, "dim").get<std::size_t>(), normals);
}

json presentation_to_json(const Presentation& p) {
  json gens = json::array();
  for (const auto& g : p.generators) {
    json rays = json::array();
    for (const auto& r : g.rays) rays.push_back(vector_json(r));
    gens.push_back({{"name", g.name}, {"rays", rays}});
  }
  json rels = json::array();
  for (const auto& r : p.relators) {
    json w = json::array();
    for (const auto& l : r) w.push_back((l.exp < 0 ? "-" : "") + p.generators.at(static_cast<std::size_t>(l.gen)).name);
    rels.push_back(w);
  }
  return {{"generators", gens}, {"relators", rels}, {"text", to_text(p)}};
}

Presentation presentation_from_json(const json& j) {
  Presentation p;
  for (const auto& g : field(j, "generators")) {
    Generator gen{field(g, "name").get<std::string>(), {}};
    if (g.contains("rays"))
      for (const auto& r : g.at("rays")) gen.rays.push_back(vector_from_json(r));
    p.generators.push_back(gen);
  }
  for (const auto& r : field(j, "relators")) {
    Word w;
    for (const auto& tok : r) {
      std::string s = tok.get<std::string>();
      int exp = 1;
      if (s.size() > 1 && s[0] == '-') {
        exp = -1;
        s = s.substr(1);
      }
      auto id = p.find(s);
      if (!id) throw Error("ParseError", "relator uses an undeclared generator", s);
      w.push_back({*id, exp});
    }
    p.relators.push_back(w);
  }
  return p;
}

json abelianization_json(const Abelianization& a) {
  json t = json::array();
  for (const auto& x : a.torsion) t.push_back(integer_json(x));
  return {{"free_rank", a.free_rank}, {"torsion", t}};
}

json category_to_json(const Category& cat) {
  const Fan& fan = cat.fan();
  json objects = json::array();
  for (std::size_t b = 0; b < cat.num_objects(); ++b) {
    json members = json::array();
    for (ConeId c : cat.partition().block(static_cast<BlockId>(b))) members.push_back(cone_json(fan, c));
    objects.push_back({{"id", b},
                       {"label", block_label(fan, cat.partition(), static_cast<BlockId>(b))},
                       {"dim", cat.block_dim(static_cast<BlockId>(b))},
                       {"members", members}});
  }
  json morphisms = json::array();
  for (std::size_t m = 0; m < cat.num_morphisms(); ++m) {
    const auto& mc = cat.morphism(static_cast<MorphId>(m));
    json reps = json::array();
    for (auto [s, t] : mc.representatives) reps.push_back({cone_json(fan, s), cone_json(fan, t)});
    morphisms.push_back({{"id", m},
                         {"source", mc.source},
                         {"target", mc.target},
                         {"rank", mc.rank},
                         {"signature", cones_json(fan, fan.interned(mc.signature))},
                         {"representatives", reps}});
  }
  json issues = json::array();
  for (const auto& i : cat.composition_issues()) issues.push_back({{"f", i.f}, {"g", i.g}, {"detail", i.detail}});
  return {{"objects", objects}, {"morphisms", morphisms}, {"composition_issues", issues}};
}

json axiom_report_json(const AxiomReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) v.push_back({{"axiom", x.axiom}, {"detail", x.detail}, {"witness", x.witness}});
  json passes = json::object();
  for (int a = 1; a <= 5; ++a) passes[std::to_string(a)] = r.passes(a);
  return {{"cubical", r.all_pass()}, {"axioms", passes}, {"violations", v}};
}

json cw_to_json(const CWComplex& cw) {
  const Fan& fan = *cw.fan;
  json cells = json::array();
  for (std::size_t d = 0; d < cw.cells.size(); ++d) {
    json layer = json::array();
    for (BlockId b : cw.cells[d]) layer.push_back({{"block", b}, {"label", block_label(fan, cw.partition, b)}});
    cells.push_back(layer);
  }
  json edges = json::array();
  for (const auto& e : cw.one_cells)
    edges.push_back({{"block", e.block},
                     {"label", block_label(fan, cw.partition, e.block)},
                     {"tail", e.tail},
                     {"head", e.head}});
  json faces = json::array();
  for (const auto& f : cw.two_cells) {
    json word = json::array();
    for (const auto& l : f.boundary) word.push_back(l.exp * (l.gen + 1));
    faces.push_back({{"block", f.block}, {"label", block_label(fan, cw.partition, f.block)}, {"boundary", word}});
  }
  json counts = cw.counts();
  return {{"cells", cells},
          {"counts", counts},
          {"euler_characteristic", euler_characteristic(cw)},
          {"one_cells", edges},
          {"two_cells", faces}};
}

json shards_to_json(const Arrangement& arr, const Fan& fan, const std::vector<Shard>& shards) {
  std::map<int, json> by_plane;
  for (const auto& s : shards) {
    json walls = json::array();
    for (ConeId w : s.walls) walls.push_back(cone_json(fan, w));
    by_plane[s.hyperplane].push_back(walls);
  }
  json out = json::array();
  for (auto& [h, list] : by_plane)
    out.push_back({{"hyperplane", h}, {"normal", vector_json(arr.normals.at(static_cast<std::size_t>(h)))}, {"shards", list}});
  return {{"count", shards.size()}, {"hyperplanes", out}};
}

}  // namespace pfan
