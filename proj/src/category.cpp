#include "pfan/category.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "pfan/error.hpp"

namespace pfan {

Category::Category(const Fan& fan, Partition partition) : fan_(&fan), partition_(std::move(partition)) {
  auto adm = is_admissible(fan, partition_);
  if (!adm.admissible) {
    const auto& w = *adm.witness;
    throw Error("NotAdmissible", "partition is not admissible", {w.sigma1, w.sigma2, w.tau1, w.tau2});
  }
  const std::size_t nc = fan.num_cones();
  std::map<std::tuple<BlockId, BlockId, int>, std::vector<std::pair<ConeId, ConeId>>> groups;
  for (std::size_t s = 0; s < nc; ++s) {
    const ConeId sigma = static_cast<ConeId>(s);
    for (ConeId tau : fan.star(sigma))
      groups[{partition_.block_of(sigma), partition_.block_of(tau), fan.projected_id(sigma, tau)}].emplace_back(sigma, tau);
  }
  for (auto& [key, reps] : groups) {
    MorphClass m;
    m.source = std::get<0>(key);
    m.target = std::get<1>(key);
    m.signature = std::get<2>(key);
    m.rank = static_cast<int>(fan.cone_dim(reps.front().second) - fan.cone_dim(reps.front().first));
    std::sort(reps.begin(), reps.end());
    m.representatives = std::move(reps);
    morphs_.push_back(std::move(m));
  }
  std::sort(morphs_.begin(), morphs_.end(), [&](const MorphClass& a, const MorphClass& b) {
    if (a.source != b.source) return a.source < b.source;
    if (a.target != b.target) return a.target < b.target;
    return fan.interned(a.signature) < fan.interned(b.signature);
  });

  class_by_star_.assign(nc, {});
  for (std::size_t s = 0; s < nc; ++s) class_by_star_[s].assign(fan.star(static_cast<ConeId>(s)).size(), -1);
  for (std::size_t m = 0; m < morphs_.size(); ++m)
    for (auto [sigma, tau] : morphs_[m].representatives) {
      const auto& st = fan.star(sigma);
      auto pos = std::lower_bound(st.begin(), st.end(), tau) - st.begin();
      class_by_star_[static_cast<std::size_t>(sigma)][static_cast<std::size_t>(pos)] = static_cast<MorphId>(m);
    }

  const std::size_t nb = partition_.num_blocks();
  identity_.resize(nb);
  out_.assign(nb, {});
  in_.assign(nb, {});
  for (std::size_t b = 0; b < nb; ++b) {
    ConeId c = partition_.block(static_cast<BlockId>(b)).front();
    identity_[b] = class_of(c, c);
  }
  for (std::size_t m = 0; m < morphs_.size(); ++m) {
    out_[static_cast<std::size_t>(morphs_[m].source)].push_back(static_cast<MorphId>(m));
    in_[static_cast<std::size_t>(morphs_[m].target)].push_back(static_cast<MorphId>(m));
  }

  for (std::size_t fi = 0; fi < morphs_.size(); ++fi) {
    const MorphId f = static_cast<MorphId>(fi);
    for (MorphId g : out_[static_cast<std::size_t>(morphs_[fi].target)]) {
      std::optional<MorphId> result;
      for (auto [sigma, kappa] : morphs_[fi].representatives) {
        auto taus = targets_from(g, kappa);
        if (taus.empty()) {
          issues_.push_back({f, g, "no representative of g starts at the target of a representative of f"});
          continue;
        }
        for (ConeId tau : taus) {
          MorphId h = class_of(sigma, tau);
          if (!result) result = h;
          else if (*result != h) issues_.push_back({f, g, "representatives give different composites"});
        }
      }
      if (result) compose_[{f, g}] = *result;
    }
  }
}

MorphId Category::class_of(ConeId sigma, ConeId tau) const {
  const auto& st = fan_->star(sigma);
  auto it = std::lower_bound(st.begin(), st.end(), tau);
  if (it == st.end() || *it != tau) throw Error("UnknownCone", "not an inclusion pair", {sigma, tau});
  return class_by_star_[static_cast<std::size_t>(sigma)][static_cast<std::size_t>(it - st.begin())];
}

std::vector<MorphId> Category::hom(BlockId source, BlockId target) const {
  std::vector<MorphId> out;
  for (MorphId m : out_.at(static_cast<std::size_t>(source)))
    if (morphs_[static_cast<std::size_t>(m)].target == target) out.push_back(m);
  return out;
}

std::optional<MorphId> Category::composite(MorphId f, MorphId g) const {
  auto it = compose_.find({f, g});
  if (it == compose_.end()) return std::nullopt;
  return it->second;
}

std::vector<ConeId> Category::targets_from(MorphId m, ConeId sigma) const {
  const auto& reps = morphism(m).representatives;
  std::vector<ConeId> out;
  for (auto it = std::lower_bound(reps.begin(), reps.end(), std::make_pair(sigma, ConeId{-1}));
       it != reps.end() && it->first == sigma; ++it)
    out.push_back(it->second);
  return out;
}

Category build_category(const Fan& fan, const Partition& partition) { return Category(fan, partition); }

MorphId compose(const Category& cat, MorphId f, MorphId g) {
  if (cat.morphism(f).target != cat.morphism(g).source)
    throw Error("NotComposable", "target of f differs from source of g", {f, g});
  auto h = cat.composite(f, g);
  if (!h) throw Error("NotComposable", "composition table has no entry", {f, g});
  return *h;
}

FactorizationCube factorization_cube(const Category& cat, MorphId f) {
  const Fan& fan = cat.fan();
  const auto [sigma, tau] = cat.morphism(f).representatives.front();
  std::vector<int> added;
  std::set_difference(fan.cone(tau).begin(), fan.cone(tau).end(), fan.cone(sigma).begin(), fan.cone(sigma).end(),
                      std::back_inserter(added));
  FactorizationCube cube;
  cube.anchor = f;
  cube.rank = static_cast<int>(added.size());
  const unsigned full = 1u << added.size();
  for (unsigned mask = 0; mask < full; ++mask) {
    RaySet kappa = fan.cone(sigma);
    for (std::size_t i = 0; i < added.size(); ++i)
      if (mask & (1u << i)) kappa.push_back(added[i]);
    ConeId k = fan.id(kappa);
    cube.objects.push_back({mask, cat.class_of(sigma, k), cat.class_of(k, tau), cat.partition().block_of(k)});
    for (std::size_t i = 0; i < added.size(); ++i)
      if (!(mask & (1u << i))) cube.edges.emplace_back(mask, mask | (1u << i));
  }
  return cube;
}

bool AxiomReport::passes(int axiom) const {
  for (const auto& v : violations)
    if (v.axiom == axiom) return false;
  return true;
}

namespace {

struct AbstractFactorizations {
  std::vector<std::pair<MorphId, MorphId>> objects;
};

// All (g, h) with h o g = f, read from the composition table only.
AbstractFactorizations factorizations_of(const Category& cat, MorphId f) {
  AbstractFactorizations out;
  const auto& mf = cat.morphism(f);
  for (MorphId g : cat.out(mf.source))
    for (MorphId h : cat.out(cat.morphism(g).target)) {
      if (cat.morphism(h).target != mf.target) continue;
      auto c = cat.composite(g, h);
      if (c && *c == f) out.objects.emplace_back(g, h);
    }
  return out;
}

// Morphisms phi : (g1,h1) -> (g2,h2) with phi o g1 = g2 and h2 o phi = h1.
std::vector<MorphId> factorization_morphisms(const Category& cat, std::pair<MorphId, MorphId> a,
                                             std::pair<MorphId, MorphId> b) {
  std::vector<MorphId> out;
  const BlockId from = cat.morphism(a.first).target;
  const BlockId to = cat.morphism(b.first).target;
  for (MorphId phi : cat.out(from)) {
    if (cat.morphism(phi).target != to) continue;
    auto x = cat.composite(a.first, phi);
    auto y = cat.composite(phi, b.second);
    if (x && y && *x == b.first && *y == a.second) out.push_back(phi);
  }
  return out;
}

}  // namespace

AxiomReport check_cubical(const Category& cat) {
  AxiomReport report;
  for (const auto& issue : cat.composition_issues())
    report.violations.push_back({1, "composition not well defined: " + issue.detail, {issue.f, issue.g}});
  for (const auto& [key, h] : cat.composition_table()) {
    const auto [f, g] = key;
    if (cat.morphism(h).rank != cat.morphism(f).rank + cat.morphism(g).rank)
      report.violations.push_back({1, "rank not additive", {f, g, h}});
    if (cat.morphism(h).source != cat.morphism(f).source || cat.morphism(h).target != cat.morphism(g).target)
      report.violations.push_back({1, "composite has wrong endpoints", {f, g, h}});
  }

  std::map<std::pair<int, std::vector<MorphId>>, MorphId> by_first, by_last;
  for (std::size_t fi = 0; fi < cat.num_morphisms(); ++fi) {
    const MorphId f = static_cast<MorphId>(fi);
    const int k = cat.morphism(f).rank;
    const auto fac = factorizations_of(cat, f);
    const std::size_t expected = std::size_t{1} << k;
    if (fac.objects.size() != expected) {
      report.violations.push_back({2, "factorization count differs from 2^rank", {f, fac.objects.size(), expected}});
      continue;
    }
    std::vector<std::size_t> atoms;
    for (std::size_t i = 0; i < fac.objects.size(); ++i)
      if (cat.morphism(fac.objects[i].first).rank == 1) atoms.push_back(i);
    if (atoms.size() != static_cast<std::size_t>(k)) {
      report.violations.push_back({2, "number of rank-1 first factors differs from rank", {f}});
      continue;
    }
    std::vector<unsigned> masks(fac.objects.size(), 0);
    bool ok = true;
    for (std::size_t i = 0; i < fac.objects.size() && ok; ++i)
      for (std::size_t a = 0; a < atoms.size(); ++a) {
        auto phis = factorization_morphisms(cat, fac.objects[atoms[a]], fac.objects[i]);
        if (phis.size() > 1) {
          report.violations.push_back({3, "more than one morphism between factorizations", {f, atoms[a], i}});
          ok = false;
          break;
        }
        if (!phis.empty()) masks[i] |= 1u << a;
      }
    if (!ok) continue;
    std::set<unsigned> distinct(masks.begin(), masks.end());
    if (distinct.size() != expected) {
      report.violations.push_back({2, "factorizations are not indexed by subsets", {f}});
      continue;
    }
    for (std::size_t i = 0; i < fac.objects.size() && ok; ++i)
      for (std::size_t j = 0; j < fac.objects.size(); ++j) {
        auto phis = factorization_morphisms(cat, fac.objects[i], fac.objects[j]);
        const bool below = (masks[i] & ~masks[j]) == 0;
        if (phis.size() > 1) {
          report.violations.push_back({3, "more than one morphism between factorizations", {f, i, j}});
          ok = false;
          break;
        }
        if (below != (phis.size() == 1)) {
          report.violations.push_back({2, "factorization morphisms differ from subset inclusion", {f, i, j}});
          ok = false;
          break;
        }
      }
    if (!ok) continue;
    std::set<BlockId> middles;
    for (const auto& [g, h] : fac.objects) middles.insert(cat.morphism(g).target);
    if (middles.size() != fac.objects.size())
      report.violations.push_back({3, "middle-object map is not injective", {f}});

    if (k == 0) continue;
    std::vector<MorphId> ff, lf;
    for (const auto& [g, h] : fac.objects) {
      if (cat.morphism(g).rank == 1) ff.push_back(g);
      if (cat.morphism(h).rank == 1) lf.push_back(h);
    }
    std::sort(ff.begin(), ff.end());
    std::sort(lf.begin(), lf.end());
    if (ff != first_factors(cat, f)) report.violations.push_back({4, "first factors differ from geometric ones", {f}});
    if (lf != last_factors(cat, f)) report.violations.push_back({5, "last factors differ from geometric ones", {f}});
    auto [it1, fresh1] = by_first.emplace(std::make_pair(k, ff), f);
    if (!fresh1) report.violations.push_back({4, "two morphisms share their first factors", {it1->second, f}});
    auto [it2, fresh2] = by_last.emplace(std::make_pair(k, lf), f);
    if (!fresh2) report.violations.push_back({5, "two morphisms share their last factors", {it2->second, f}});
  }
  return report;
}

std::vector<MorphId> first_factors(const Category& cat, MorphId f) {
  const auto& m = cat.morphism(f);
  if (m.rank == 0) throw Error("RankZero", "first factors of a rank-0 morphism", f);
  const Fan& fan = cat.fan();
  const auto [sigma, tau] = m.representatives.front();
  std::vector<MorphId> out;
  for (int r : fan.cone(tau)) {
    if (std::binary_search(fan.cone(sigma).begin(), fan.cone(sigma).end(), r)) continue;
    RaySet k = fan.cone(sigma);
    k.push_back(r);
    out.push_back(cat.class_of(sigma, fan.id(k)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<MorphId> last_factors(const Category& cat, MorphId f) {
  const auto& m = cat.morphism(f);
  if (m.rank == 0) throw Error("RankZero", "last factors of a rank-0 morphism", f);
  const Fan& fan = cat.fan();
  const auto [sigma, tau] = m.representatives.front();
  std::vector<MorphId> out;
  for (int r : fan.cone(tau)) {
    if (std::binary_search(fan.cone(sigma).begin(), fan.cone(sigma).end(), r)) continue;
    RaySet lambda;
    for (int x : fan.cone(tau))
      if (x != r) lambda.push_back(x);
    out.push_back(cat.class_of(fan.id(lambda), tau));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

bool extend_cliques(const std::vector<MorphId>& nodes, const std::set<std::pair<MorphId, MorphId>>& edges,
                    const std::set<std::vector<MorphId>>& joint, std::vector<MorphId>& current, std::size_t start,
                    std::vector<MorphId>& bad) {
  for (std::size_t i = start; i < nodes.size(); ++i) {
    bool ok = true;
    for (MorphId c : current)
      if (!edges.count({std::min(c, nodes[i]), std::max(c, nodes[i])})) {
        ok = false;
        break;
      }
    if (!ok) continue;
    current.push_back(nodes[i]);
    if (current.size() >= 3 && !joint.count(current)) {
      bad = current;
      return false;
    }
    if (!extend_cliques(nodes, edges, joint, current, i + 1, bad)) return false;
    current.pop_back();
  }
  return true;
}

}  // namespace

CompatibilityResult check_last_factor_compatibility(const Category& cat) {
  for (std::size_t b = 0; b < cat.num_objects(); ++b) {
    const BlockId kappa = static_cast<BlockId>(b);
    std::vector<MorphId> rank1;
    std::set<std::pair<MorphId, MorphId>> compatible;
    std::set<std::vector<MorphId>> joint;
    for (MorphId m : cat.in(kappa)) {
      const int r = cat.morphism(m).rank;
      if (r == 1) rank1.push_back(m);
      if (r < 2) continue;
      auto lf = last_factors(cat, m);
      joint.insert(lf);
      if (r == 2 && lf.size() == 2) compatible.emplace(lf[0], lf[1]);
    }
    std::vector<MorphId> current, bad;
    if (!extend_cliques(rank1, compatible, joint, current, 0, bad)) return {false, bad, kappa};
  }
  return {true, {}, -1};
}

CoarseningFunctorReport coarsening_functor(const Category& fine, const Category& coarse) {
  CoarseningFunctorReport r;
  if (&fine.fan() != &coarse.fan() && fine.fan().num_cones() != coarse.fan().num_cones())
    throw Error("FanMismatch", "categories over different fans");
  if (!refines(fine.partition(), coarse.partition()))
    throw Error("NotComparable", "fine partition does not refine the coarse one");
  r.image.resize(fine.num_morphisms());
  for (std::size_t m = 0; m < fine.num_morphisms(); ++m) {
    std::set<MorphId> images;
    for (auto [s, t] : fine.morphism(static_cast<MorphId>(m)).representatives) images.insert(coarse.class_of(s, t));
    if (images.size() != 1 && r.well_defined) {
      r.well_defined = false;
      r.witness = {{"morphism", m}};
    }
    r.image[m] = *images.begin();
  }
  std::map<MorphId, MorphId> seen;
  for (std::size_t b = 0; b < fine.num_objects(); ++b)
    for (std::size_t c = 0; c < fine.num_objects(); ++c) {
      std::map<MorphId, MorphId> used;
      for (MorphId m : fine.hom(static_cast<BlockId>(b), static_cast<BlockId>(c))) {
        auto [it, fresh] = used.emplace(r.image[static_cast<std::size_t>(m)], m);
        if (!fresh && r.faithful) {
          r.faithful = false;
          r.witness = {{"parallel", {it->second, m}}};
        }
      }
    }
  std::set<BlockId> hit;
  for (std::size_t b = 0; b < fine.num_objects(); ++b)
    hit.insert(coarse.partition().block_of(fine.partition().block(static_cast<BlockId>(b)).front()));
  r.surjective_on_objects = hit.size() == coarse.num_objects();
  return r;
}

std::string block_label(const Fan& fan, const Partition& p, BlockId b) {
  return "[" + cone_label(fan, least_member(fan, p.block(b))) + "]";
}

std::string export_category_dot(const Category& cat) {
  std::ostringstream os;
  os << "digraph category {\n  rankdir=BT;\n";
  for (std::size_t b = 0; b < cat.num_objects(); ++b)
    os << "  b" << b << " [label=\"" << block_label(cat.fan(), cat.partition(), static_cast<BlockId>(b)) << "\"];\n";
  for (std::size_t m = 0; m < cat.num_morphisms(); ++m) {
    const auto& mc = cat.morphism(static_cast<MorphId>(m));
    if (mc.rank != 1) continue;
    std::string sig;
    for (const auto& r : cat.fan().interned(mc.signature)) sig += to_string(r);
    os << "  b" << mc.source << " -> b" << mc.target << " [label=\"m" << m << " " << sig << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace pfan
