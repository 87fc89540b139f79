// pfan: command-line front end. Documents travel as JSON on stdin/stdout.
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pfan/pfan.hpp"

using namespace pfan;

namespace {

struct Options {
  std::string command;
  std::string input;
  std::string with;
  std::string coarse;
  std::string format = "json";
  std::string mode = "codim2";
  std::string base;
  std::string functional;
  std::string point;
  std::string seed;
  std::string example;
  std::size_t limit = 16;
  bool gap = false;
  bool simplify = false;
  bool skeleton = false;
};

json read_json(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return json::object();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error("ParseError", e.what());
  }
}

json read_document(const std::string& path) {
  if (path.empty() || path == "-") return read_json(std::cin);
  std::ifstream in(path);
  if (!in) throw Error("MissingInput", "cannot open file", path);
  return read_json(in);
}

std::vector<std::string> split_top_level(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '{' || c == '[' || c == '(') ++depth;
    if (c == '}' || c == ']' || c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

IntVector parse_vector(const std::string& s) {
  IntVector v;
  std::string t = s;
  for (char& c : t)
    if (c == '(' || c == ')' || c == '[' || c == ']') c = ' ';
  for (const auto& part : split_top_level(t, ',')) {
    try {
      v.push_back(Integer(part));
    } catch (const std::exception&) {
      throw Error("ParseError", "expected integers", s);
    }
  }
  return v;
}

/// `0`, `s<k>` (k-th ray), `t<k>` (k-th input maximal cone), or `{i,j,...}` (0-based ray indices).
ConeId parse_cone(const Fan& fan, const std::string& s) {
  try {
    if (s == "0") return fan.zero();
    if (s.size() > 1 && s[0] == 's') return fan.id({std::stoi(s.substr(1)) - 1});
    if (s.size() > 1 && s[0] == 't') {
      const auto k = static_cast<std::size_t>(std::stoi(s.substr(1)));
      if (k == 0 || k > fan.max_cones().size()) throw Error("UnknownCone", "no such maximal cone", s);
      return fan.id(fan.max_cones()[k - 1]);
    }
    if (s.size() >= 2 && s.front() == '{' && s.back() == '}') {
      RaySet rs;
      for (const auto& part : split_top_level(s.substr(1, s.size() - 2), ',')) rs.push_back(std::stoi(part));
      std::sort(rs.begin(), rs.end());
      return fan.id(rs);
    }
  } catch (const std::invalid_argument&) {
  } catch (const std::out_of_range&) {
  }
  throw Error("ParseError", "unrecognized cone", s);
}

std::vector<std::pair<ConeId, ConeId>> parse_seeds(const Fan& fan, const std::string& s) {
  std::vector<std::pair<ConeId, ConeId>> out;
  for (const auto& pair : split_top_level(s, ',')) {
    auto parts = split_top_level(pair, '~');
    if (parts.size() != 2) throw Error("ParseError", "seed must look like a~b", pair);
    out.emplace_back(parse_cone(fan, parts[0]), parse_cone(fan, parts[1]));
  }
  return out;
}

class Session {
 public:
  Session(Options opt, json doc) : opt_(std::move(opt)), doc_(std::move(doc)) {}

  const Arrangement& arrangement() {
    if (!arr_) {
      if (!doc_.contains("arrangement")) throw Error("MissingInput", "document has no arrangement");
      arr_ = arrangement_from_json(doc_.at("arrangement"));
    }
    return *arr_;
  }

  const Fan& fan() {
    if (!fan_) {
      if (doc_.contains("fan")) fan_.emplace(fan_from_json(doc_.at("fan")));
      else if (doc_.contains("arrangement")) fan_.emplace(arrangement_fan(arrangement()));
      else throw Error("MissingInput", "document has no fan");
    }
    return *fan_;
  }

  Partition partition() {
    if (doc_.contains("partition")) return partition_from_json(fan(), doc_.at("partition"));
    return Partition::finest(fan().num_cones());
  }

  ConeId base() {
    const Fan& f = fan();
    if (!opt_.point.empty()) return chamber_containing(arrangement(), f, parse_vector(opt_.point));
    if (!opt_.base.empty()) return parse_cone(f, opt_.base);
    if (doc_.contains("arrangement")) return default_base(arrangement(), f);
    return parse_cone(f, "t1");
  }

  const FanPoset& poset() {
    if (!poset_) {
      const Fan& f = fan();
      if (!opt_.functional.empty()) {
        RationalVector b;
        for (const auto& x : parse_vector(opt_.functional)) b.push_back(Rational(x));
        poset_.emplace(poset_from_linear_functional(f, b));
      } else if (doc_.contains("poset")) {
        poset_.emplace(poset_from_json(f, doc_.at("poset")));
      } else if (doc_.contains("arrangement")) {
        poset_.emplace(poset_of_regions(arrangement(), f, base()));
      } else if (f.dim() == 2) {
        poset_.emplace(rank2_bisector_poset(f, base()));
      } else {
        throw Error("MissingInput", "document has no poset");
      }
    }
    return *poset_;
  }

  PictureMode mode() const {
    if (opt_.mode == "full") return PictureMode::Full;
    if (opt_.mode == "codim2") return PictureMode::Codim2;
    throw Error("ParseError", "mode must be full or codim2", opt_.mode);
  }

  json with_fan() {
    json out = doc_;
    out["fan"] = fan_to_json(fan());
    return out;
  }

  json doc() const { return doc_; }
  const Options& opt() const { return opt_; }

 private:
  Options opt_;
  json doc_;
  std::optional<Arrangement> arr_;
  std::optional<Fan> fan_;
  std::optional<FanPoset> poset_;
};

std::string presentation_output(const Presentation& p, const Options& opt) {
  if (opt.gap) return to_gap(p);
  if (opt.format == "text") return to_text(p) + "\n";
  return presentation_to_json(p).dump(2) + "\n";
}

json cone_list(const Fan& fan, const std::vector<ConeId>& cones) {
  json out = json::array();
  for (ConeId c : cones) out.push_back(cone_label(fan, c));
  return out;
}

json example_document(const std::string& name) {
  if (name == "hirzebruch-a1") return {{"fan", fan_to_json(fan_hirzebruch(1))}};
  if (name == "square") return {{"fan", fan_to_json(fan_square())}};
  if (name == "three-lines") return {{"fan", fan_to_json(fan_three_lines())}};
  if (name == "brauer3") return {{"arrangement", arrangement_to_json(builtin_brauer())}};
  if (name == "coordinate3") return {{"arrangement", arrangement_to_json(arrangement_coordinate(3))}};
  if (name == "three-lines-arrangement") return {{"arrangement", arrangement_to_json(arrangement_three_lines())}};
  throw Error("UnknownExample", "no such example", name);
}

std::string run(Session& s) {
  const Options& opt = s.opt();
  const std::string& cmd = opt.command;
  auto out = [](const json& j) { return j.dump(2) + "\n"; };

  if (cmd == "examples") return out(example_document(opt.example));

  if (cmd == "fan validate") {
    const Fan& fan = s.fan();
    const auto report = validate_fan(fan);
    json v = json::array();
    for (const auto& x : report.violations)
      v.push_back({{"first", cone_label(fan, x.first)}, {"second", cone_label(fan, x.second)}});
    return out({{"valid", report.valid()},
                {"violations", v},
                {"cones", fan.num_cones()},
                {"rays", fan.rays().size()},
                {"chambers", fan.maximal().size()},
                {"complete", is_finite_complete(fan)}});
  }
  if (cmd == "fan complete") return out({{"complete", is_finite_complete(s.fan())}});
  if (cmd == "fan from-arrangement") return out(s.with_fan());

  if (cmd == "partition potentials") {
    const Fan& fan = s.fan();
    const auto table = potential_identifications(fan);
    json d = s.with_fan();
    d["classes"] = partition_labels_json(fan, table.classes);
    d["partition"] = partition_to_json(fan, table.classes);
    return out(d);
  }
  if (cmd == "partition check") {
    const Fan& fan = s.fan();
    const auto r = is_admissible(fan, s.partition());
    json w = nullptr;
    if (r.witness)
      w = cone_list(fan, {r.witness->sigma1, r.witness->sigma2, r.witness->tau1, r.witness->tau2});
    return out({{"admissible", r.admissible}, {"witness", w}});
  }
  if (cmd == "partition closure") {
    const Fan& fan = s.fan();
    json d = s.with_fan();
    d["partition"] = partition_to_json(fan, admissible_closure(fan, parse_seeds(fan, opt.seed)));
    return out(d);
  }
  if (cmd == "partition meet" || cmd == "partition join") {
    const Fan& fan = s.fan();
    const json other = read_document(opt.with);
    if (!other.contains("partition")) throw Error("MissingInput", "--with document has no partition");
    const Partition b = partition_from_json(fan, other.at("partition"));
    const Partition a = s.partition();
    json d = s.with_fan();
    d["partition"] = partition_to_json(fan, cmd == "partition meet" ? meet(a, b) : join(a, b));
    return out(d);
  }
  if (cmd == "partition enumerate") {
    const Fan& fan = s.fan();
    json list = json::array();
    const auto all = enumerate_admissible(fan, opt.limit);
    for (const auto& p : all) list.push_back(partition_labels_json(fan, p));
    return out({{"count", all.size()}, {"partitions", list}});
  }

  if (cmd.rfind("category ", 0) == 0) {
    const Fan& fan = s.fan();
    const Category cat(fan, s.partition());
    if (cmd == "category build") return out(category_to_json(cat));
    if (cmd == "category check-cubical") return out(axiom_report_json(check_cubical(cat)));
    if (cmd == "category check-last-factors") {
      const auto r = check_last_factor_compatibility(cat);
      return out({{"compatible", r.compatible},
                  {"counterexample", r.counterexample},
                  {"object", r.compatible ? json(nullptr) : json(block_label(fan, cat.partition(), r.object))}});
    }
    if (cmd == "category export") {
      if (opt.format == "dot") return export_category_dot(cat);
      return out(category_to_json(cat));
    }
  }

  if (cmd == "poset functional" || cmd == "poset bisector" || cmd == "poset regions") {
    const Fan& fan = s.fan();
    json d = s.with_fan();
    if (cmd == "poset functional") {
      if (opt.functional.empty()) throw Error("MissingInput", "--functional is required");
      d["poset"] = poset_to_json(s.poset());
    } else if (cmd == "poset bisector") {
      d["poset"] = poset_to_json(rank2_bisector_poset(fan, s.base()));
    } else {
      d["poset"] = poset_to_json(poset_of_regions(s.arrangement(), fan, s.base()));
    }
    return out(d);
  }
  if (cmd == "poset check") {
    const auto r = check_weak_fan_poset(s.poset());
    const Fan& fan = s.fan();
    json cf = json::array();
    for (auto [a, b] : r.cone_failures) cf.push_back(cone_list(fan, {a, b}));
    json nh = json::array();
    for (const auto& c : r.non_hasse_covers) nh.push_back(cone_list(fan, {c.lower, c.upper}));
    return out({{"facial_intervals", r.facial_ok()},
                {"facial_failures", cone_list(fan, r.facial_failures)},
                {"interval_cones", r.cone_ok()},
                {"cone_failures", cf},
                {"non_hasse_covers", nh},
                {"weak_variant_checked", r.weak_variant_checked}});
  }
  if (cmd == "poset nondegenerate") {
    const Fan& fan = s.fan();
    const auto r = check_nondegenerate(s.partition(), s.poset());
    json w = nullptr;
    if (!r.nondegenerate) w = {{"cones", cone_list(fan, {r.sigma1, r.sigma2})}};
    return out({{"nondegenerate", r.nondegenerate}, {"witness", w}});
  }

  if (cmd == "group picture") return presentation_output(picture_group(s.fan(), s.partition(), s.poset(), s.mode()), opt);
  if (cmd == "group alt") return presentation_output(alt_presentation(s.fan(), s.partition(), s.poset()), opt);
  if (cmd == "group psi") {
    const Fan& fan = s.fan();
    const Category cat(fan, s.partition());
    const Presentation g = picture_group(fan, cat.partition(), s.poset(), PictureMode::Full);
    json list = json::array();
    for (std::size_t m = 0; m < cat.num_morphisms(); ++m) {
      const auto& mc = cat.morphism(static_cast<MorphId>(m));
      list.push_back({{"id", m},
                      {"source", block_label(fan, cat.partition(), mc.source)},
                      {"target", block_label(fan, cat.partition(), mc.target)},
                      {"word", word_to_text(g, psi(cat, s.poset(), static_cast<MorphId>(m)))}});
    }
    return out({{"morphisms", list}});
  }
  if (cmd == "group quotient") {
    const Fan& fan = s.fan();
    const json other = read_document(opt.coarse);
    if (!other.contains("partition")) throw Error("MissingInput", "--coarse document has no partition");
    const Partition fine = s.partition();
    const Partition coarse = partition_from_json(fan, other.at("partition"));
    const Presentation g = picture_group(fan, fine, s.poset(), s.mode());
    return presentation_output(quotient_presentation(g, fan, fine, coarse), opt);
  }
  if (cmd == "group abelianize") {
    const json d = s.doc();
    const Presentation g = d.contains("presentation") ? presentation_from_json(d.at("presentation"))
                           : d.contains("generators") ? presentation_from_json(d)
                                                      : picture_group(s.fan(), s.partition(), s.poset(), s.mode());
    return out(abelianization_json(abelianization(g)));
  }
  if (cmd == "group certify-rank2") {
    const Category cat(s.fan(), s.partition());
    const auto c = rank2_faithfulness_certificate(cat, s.poset());
    return out({{"certified", c.certified}, {"pairs_checked", c.pairs_checked}, {"witness", c.witness}});
  }
  if (cmd == "group certify-brauer") {
    const Fan& fan = s.fan();
    const Arrangement& arr = s.arrangement();
    const Presentation g = picture_group(fan, flat_partition(arr, fan), s.poset(), PictureMode::Codim2);
    const auto wa = wa_certify(arr, g);
    json res = {{"wall_algebra",
                 {{"associative", wa.associative},
                  {"commutative", wa.commutative},
                  {"unital", wa.unital},
                  {"failing_relators", wa.failing_relators},
                  {"valid", wa.valid()}}}};
    if (wa.valid()) {
      const Category cat(fan, s.partition());
      const auto c = hom_distinctness_certificate(cat, s.poset(), &wa);
      res["hom_distinctness"] = {{"certified", c.certified}, {"witness", c.witness}};
    }
    return out(res);
  }

  if (cmd.rfind("cw ", 0) == 0) {
    const Fan& fan = s.fan();
    const CWComplex cw = build_cw(fan, s.partition());
    if (cmd == "cw build") {
      json d = s.with_fan();
      d["partition"] = partition_to_json(fan, cw.partition);
      d["cw"] = cw_to_json(cw);
      return out(d);
    }
    if (cmd == "cw euler") return std::to_string(euler_characteristic(cw)) + "\n";
    if (cmd == "cw pi1") {
      Presentation p = pi1_presentation(cw);
      if (opt.simplify) p = eliminate_single_occurrences(p);
      return presentation_output(p, opt);
    }
    if (cmd == "cw compare") {
      const auto c = compare_pi1_picture(cw, picture_group(fan, cw.partition, s.poset(), PictureMode::Codim2));
      return out({{"match", c.match()},
                  {"generators", {{"pi1", c.pi1_generators}, {"picture", c.picture_generators}}},
                  {"abelianization",
                   {{"pi1", abelianization_json(c.pi1_abelianization)},
                    {"picture", abelianization_json(c.picture_abelianization)}}}});
    }
  }

  if (cmd.rfind("arrangement ", 0) == 0) {
    const Arrangement& arr = s.arrangement();
    if (cmd == "arrangement flats") {
      json list = json::array();
      for (const auto& f : flats(arr)) list.push_back({{"hyperplanes", f.hyperplanes}, {"rank", f.rank}});
      return out({{"count", list.size()}, {"flats", list}});
    }
    if (cmd == "arrangement wall-algebra") {
      json basis = json::array(), table = json::array();
      for (std::size_t i = 0; i < kWallBasis; ++i) basis.push_back(wall_element_text(wall_basis(i)));
      for (std::size_t i = 0; i < kWallBasis; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < kWallBasis; ++j) row.push_back(wall_basis_mul(i, j));
        table.push_back(row);
      }
      const auto c = wa_certify(arr, Presentation{});
      return out({{"basis", basis},
                  {"table", table},
                  {"associative", c.associative},
                  {"commutative", c.commutative},
                  {"unital", c.unital}});
    }
    const Fan& fan = s.fan();
    if (cmd == "arrangement shards") return out(shards_to_json(arr, fan, shards(arr, fan, s.base())));
    if (cmd == "arrangement shard-partition" || cmd == "arrangement flat-partition") {
      json d = s.with_fan();
      d["partition"] = partition_to_json(
          fan, cmd == "arrangement flat-partition" ? flat_partition(arr, fan) : shard_partition(arr, fan, s.base()));
      return out(d);
    }
  }

  if (cmd == "render") {
    const Fan& fan = s.fan();
    if (opt.skeleton) return render_cw_svg(build_cw(fan, s.partition()));
    if (fan.dim() == 2) {
      const Partition p = s.partition();
      return render_fan_svg(fan, &p);
    }
    std::array<double, 3> pt{1, 1, 1};
    if (!opt.point.empty()) {
      const auto v = parse_vector(opt.point);
      if (v.size() != 3) throw Error("DimensionMismatch", "projection point needs three coordinates", opt.point);
      for (std::size_t k = 0; k < 3; ++k) pt[k] = v[k].convert_to<double>();
    }
    return render_stereographic_svg(fan, pt);
  }
  throw Error("UnknownCommand", "unknown command", cmd);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partitioned fans, their categories, picture groups and arrangements"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("-i,--input", opt.input, "input document (default: stdin)");
  app.add_option("--with", opt.with, "second partition document for meet/join");
  app.add_option("--coarse", opt.coarse, "coarser partition document for group quotient");
  app.add_option("-f,--format", opt.format, "json, text, dot or svg")->check(CLI::IsMember({"json", "text", "dot", "svg"}));
  app.add_option("--mode", opt.mode, "picture-group relations: full or codim2")->check(CLI::IsMember({"full", "codim2"}));
  app.add_option("--base", opt.base, "base chamber: t<k> or {i,j,...}");
  app.add_option("--functional", opt.functional, "linear functional, e.g. 1,1");
  app.add_option("--point", opt.point, "point selecting a chamber, or the projection point for render");
  app.add_option("--seed", opt.seed, "seed identifications, e.g. s1~s3,s2~s4");
  app.add_option("--limit", opt.limit, "cone limit for enumeration")->check(CLI::PositiveNumber);
  app.add_flag("--gap", opt.gap, "write presentations in GAP syntax");
  app.add_flag("--simplify", opt.simplify, "eliminate generators occurring once in a relator");
  app.add_flag("--skeleton", opt.skeleton, "render the 1-skeleton of the CW complex");

  const std::vector<std::pair<std::string, std::vector<std::string>>> groups = {
      {"fan", {"validate", "complete", "from-arrangement"}},
      {"partition", {"potentials", "check", "closure", "meet", "join", "enumerate"}},
      {"category", {"build", "check-cubical", "check-last-factors", "export"}},
      {"poset", {"functional", "bisector", "regions", "check", "nondegenerate"}},
      {"group", {"picture", "alt", "psi", "quotient", "abelianize", "certify-rank2", "certify-brauer"}},
      {"cw", {"build", "euler", "pi1", "compare"}},
      {"arrangement", {"flats", "shards", "shard-partition", "flat-partition", "wall-algebra"}},
  };
  for (const auto& [group, actions] : groups) {
    auto* g = app.add_subcommand(group);
    g->require_subcommand(1);
    g->fallthrough();
    for (const auto& action : actions) {
      auto* a = g->add_subcommand(action);
      a->fallthrough();
      a->callback([&opt, cmd = group + " " + action] { opt.command = cmd; });
    }
  }
  auto* ex = app.add_subcommand("examples", "print a built-in example document");
  ex->add_option("name", opt.example)->required()->check(CLI::IsMember(example_names()));
  ex->fallthrough();
  ex->callback([&opt] { opt.command = "examples"; });
  auto* render = app.add_subcommand("render", "SVG of a fan or of the CW 1-skeleton");
  render->fallthrough();
  render->callback([&opt] { opt.command = "render"; });

  CLI11_PARSE(app, argc, argv);

  try {
    json doc = opt.command == "examples" ? json::object() : read_document(opt.input);
    Session session(opt, std::move(doc));
    std::cout << run(session);
    return 0;
  } catch (const Error& e) {
    std::cout << json{{"error", e.code()}, {"message", e.what()}, {"witness", e.witness()}}.dump() << "\n";
    return 1;
  }
}
