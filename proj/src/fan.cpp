#include "pfan/fan.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "pfan/error.hpp"
#include "pfan/polyhedral.hpp"

namespace pfan {

namespace {

bool is_subset(const RaySet& small, const RaySet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool face_order(const RaySet& a, const RaySet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

Fan::Fan(std::size_t dim, std::vector<IntVector> rays, std::vector<RaySet> max_cones) : dim_(dim) {
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (rays[i].size() != dim) throw Error("DimensionMismatch", "ray length differs from fan dimension", i);
    if (is_zero(rays[i])) throw Error("ZeroVector", "zero ray", i);
    rays_.push_back(primitive_ray(rays[i]));
  }

  std::vector<RaySet> cones;
  for (auto c : max_cones) {
    RaySet sorted = c;
    std::sort(sorted.begin(), sorted.end());
    for (int idx : sorted)
      if (idx < 0 || static_cast<std::size_t>(idx) >= rays_.size())
        throw Error("BadIndex", "ray index out of range", c);
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error("BadIndex", "repeated ray index in a cone", c);
    std::vector<IntVector> gens;
    for (int idx : sorted) gens.push_back(rays_[static_cast<std::size_t>(idx)]);
    if (rank(gens, dim) != gens.size()) throw Error("NonSimplicialCone", "cone generators are dependent", c);
    cones.push_back(std::move(sorted));
  }
  // dependent cones take precedence over duplicate rays
  for (std::size_t i = 0; i < rays_.size(); ++i)
    for (std::size_t j = i + 1; j < rays_.size(); ++j)
      if (rays_[i] == rays_[j]) throw Error("DuplicateRay", "two rays are equal after normalization", {i, j});
  for (std::size_t i = 0; i < cones.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < cones.size() && keep; ++j) {
      if (i == j) continue;
      if (cones[i] == cones[j]) keep = j > i;
      else if (is_subset(cones[i], cones[j])) keep = false;
    }
    if (keep) max_cones_.push_back(cones[i]);
  }

  std::set<RaySet> all{RaySet{}};
  for (const auto& c : max_cones_) {
    const std::size_t k = c.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      RaySet s;
      for (std::size_t b = 0; b < k; ++b)
        if (mask & (std::size_t{1} << b)) s.push_back(c[b]);
      all.insert(s);
    }
  }
  faces_.assign(all.begin(), all.end());
  std::sort(faces_.begin(), faces_.end(), face_order);
  for (std::size_t i = 0; i < faces_.size(); ++i) index_[faces_[i]] = static_cast<ConeId>(i);

  const std::size_t nf = faces_.size();
  star_.assign(nf, {});
  for (std::size_t i = 0; i < nf; ++i)
    for (std::size_t j = 0; j < nf; ++j)
      if (is_subset(faces_[i], faces_[j])) star_[i].push_back(static_cast<ConeId>(j));
  for (std::size_t i = 0; i < nf; ++i)
    if (star_[i].size() == 1) maximal_.push_back(static_cast<ConeId>(i));

  std::map<std::vector<RationalVector>, int> span_index;
  projection_.reserve(nf);
  for (std::size_t i = 0; i < nf; ++i) {
    auto gens = cone_rays(static_cast<ConeId>(i));
    projection_.push_back(complement_projection(gens, dim_));
    std::vector<RationalVector> rows;
    for (const auto& g : gens) rows.push_back(to_rational(g));
    auto key = rref(rows, dim_).rows;
    auto it = span_index.find(key);
    if (it == span_index.end()) it = span_index.emplace(key, static_cast<int>(span_index.size())).first;
    span_id_.push_back(it->second);
  }

  star_projection_.assign(nf, {});
  projected_star_ids_.assign(nf, {});
  for (std::size_t s = 0; s < nf; ++s) {
    for (ConeId t : star_[s]) {
      CanonicalCone cc;
      for (int r : faces_[static_cast<std::size_t>(t)]) {
        if (std::binary_search(faces_[s].begin(), faces_[s].end(), r)) continue;
        cc.push_back(primitive_ray(projection_[s].apply(to_rational(rays_[static_cast<std::size_t>(r)]))));
      }
      std::sort(cc.begin(), cc.end());
      auto it = intern_index_.find(cc);
      if (it == intern_index_.end()) {
        it = intern_index_.emplace(cc, static_cast<int>(interned_.size())).first;
        interned_.push_back(cc);
      }
      star_projection_[s].push_back(it->second);
    }
    projected_star_ids_[s] = star_projection_[s];
    std::sort(projected_star_ids_[s].begin(), projected_star_ids_[s].end());
  }
}

std::optional<ConeId> Fan::find(const RaySet& rays) const {
  RaySet s = rays;
  std::sort(s.begin(), s.end());
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ConeId Fan::id(const RaySet& rays) const {
  auto c = find(rays);
  if (!c) throw Error("UnknownCone", "ray set is not a cone of the fan", rays);
  return *c;
}

bool Fan::contains(ConeId outer, ConeId inner) const { return is_subset(cone(inner), cone(outer)); }

std::vector<IntVector> Fan::cone_rays(ConeId c) const {
  std::vector<IntVector> out;
  for (int r : cone(c)) out.push_back(rays_[static_cast<std::size_t>(r)]);
  return out;
}

CanonicalCone Fan::canonical(ConeId c) const {
  auto r = cone_rays(c);
  std::sort(r.begin(), r.end());
  return r;
}

std::vector<ConeId> Fan::cones_of_dim(std::size_t d) const {
  std::vector<ConeId> out;
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (faces_[i].size() == d) out.push_back(static_cast<ConeId>(i));
  return out;
}

std::vector<ConeId> Fan::maximal_in_star(ConeId c) const {
  std::vector<ConeId> out;
  for (ConeId t : star(c))
    if (star(t).size() == 1) out.push_back(t);
  return out;
}

int Fan::projected_id(ConeId sigma, ConeId tau) const {
  const auto& st = star(sigma);
  auto it = std::lower_bound(st.begin(), st.end(), tau);
  if (it == st.end() || *it != tau)
    throw Error("UnknownCone", "tau does not contain sigma", {sigma, tau});
  return star_projection_[static_cast<std::size_t>(sigma)][static_cast<std::size_t>(it - st.begin())];
}

std::optional<int> Fan::intern_lookup(const CanonicalCone& c) const {
  auto it = intern_index_.find(c);
  if (it == intern_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ConeId> Fan::star_member_with(ConeId sigma, int projected) const {
  const auto& st = star(sigma);
  const auto& pr = star_projection_[static_cast<std::size_t>(sigma)];
  for (std::size_t i = 0; i < st.size(); ++i)
    if (pr[i] == projected) return st[i];
  return std::nullopt;
}

Fan build_fan(std::size_t dim, const std::vector<IntVector>& rays, const std::vector<RaySet>& max_cones) {
  return Fan(dim, rays, max_cones);
}

ValidationReport validate_fan(const Fan& fan) {
  ValidationReport report;
  const auto& mx = fan.maximal();
  const std::size_t n = fan.dim();
  for (std::size_t i = 0; i < mx.size(); ++i)
    for (std::size_t j = i + 1; j < mx.size(); ++j) {
      HRep h = intersect(simplicial_hrep(n, fan.cone_rays(mx[i])), simplicial_hrep(n, fan.cone_rays(mx[j])));
      ConeGenerators g = double_description(n, h);
      RaySet common;
      std::set_intersection(fan.cone(mx[i]).begin(), fan.cone(mx[i]).end(), fan.cone(mx[j]).begin(),
                            fan.cone(mx[j]).end(), std::back_inserter(common));
      CanonicalCone expected = fan.canonical(fan.id(common));
      if (!g.lineality.empty() || g.rays != expected) report.violations.push_back({mx[i], mx[j], g.rays});
    }
  return report;
}

std::vector<Wall> walls(const Fan& fan) {
  std::vector<Wall> out;
  if (fan.dim() == 0) return out;
  for (ConeId w : fan.cones_of_dim(fan.dim() - 1)) {
    auto ch = fan.maximal_in_star(w);
    std::vector<ConeId> full;
    for (ConeId c : ch)
      if (fan.cone_dim(c) == fan.dim()) full.push_back(c);
    if (full.size() == 2) out.push_back({w, full[0], full[1]});
  }
  return out;
}

bool is_finite_complete(const Fan& fan) {
  const std::size_t n = fan.dim();
  if (n == 0) return true;
  for (ConeId m : fan.maximal())
    if (fan.cone_dim(m) != n) return false;
  for (ConeId w : fan.cones_of_dim(n - 1))
    if (fan.maximal_in_star(w).size() != 2) return false;
  const auto& mx = fan.maximal();
  if (mx.empty()) return false;
  std::map<ConeId, std::vector<ConeId>> adj;
  for (const auto& w : walls(fan)) {
    adj[w.first].push_back(w.second);
    adj[w.second].push_back(w.first);
  }
  std::set<ConeId> seen{mx.front()};
  std::deque<ConeId> queue{mx.front()};
  while (!queue.empty()) {
    ConeId c = queue.front();
    queue.pop_front();
    for (ConeId d : adj[c])
      if (seen.insert(d).second) queue.push_back(d);
  }
  return seen.size() == mx.size();
}

std::vector<ConeId> star(const Fan& fan, ConeId sigma) {
  if (sigma < 0 || static_cast<std::size_t>(sigma) >= fan.num_cones())
    throw Error("UnknownCone", "cone id out of range", sigma);
  return fan.star(sigma);
}

ProjectedFan project_star(const Fan& fan, ConeId sigma) {
  if (sigma < 0 || static_cast<std::size_t>(sigma) >= fan.num_cones())
    throw Error("UnknownCone", "cone id out of range", sigma);
  ProjectedFan p;
  for (int id : fan.projected_star_ids(sigma)) p.cones.push_back(fan.interned(id));
  std::sort(p.cones.begin(), p.cones.end());
  return p;
}

std::size_t LinkComplex::dimension() const {
  std::size_t d = 0;
  for (const auto& s : simplices) d = std::max(d, s.size() - 1);
  return d;
}

bool LinkComplex::is_sphere_like(std::size_t expected_dim) const {
  if (expected_dim == 0) return vertices.size() == 2 && simplices.size() == 2;
  std::vector<std::vector<int>> facets, ridges;
  for (const auto& s : simplices) {
    if (s.size() == expected_dim + 1) facets.push_back(s);
    else if (s.size() == expected_dim) ridges.push_back(s);
    else if (s.size() > expected_dim + 1) return false;
  }
  for (const auto& s : simplices) {
    bool in_facet = false;
    for (const auto& f : facets)
      if (std::includes(f.begin(), f.end(), s.begin(), s.end())) {
        in_facet = true;
        break;
      }
    if (!in_facet) return false;
  }
  for (const auto& r : ridges) {
    int count = 0;
    for (const auto& f : facets)
      if (std::includes(f.begin(), f.end(), r.begin(), r.end())) ++count;
    if (count != 2) return false;
  }
  return true;
}

LinkComplex link_complex(const Fan& fan, const std::vector<ConeId>& block) {
  if (block.empty()) throw Error("MixedBlock", "empty block");
  if (!is_finite_complete(fan)) throw Error("NotComplete", "link complex requires a finite complete fan");
  const ConeId rep = *std::min_element(block.begin(), block.end());
  for (ConeId c : block)
    if (fan.projected_star_ids(c) != fan.projected_star_ids(rep) || fan.span_id(c) != fan.span_id(rep))
      throw Error("MixedBlock", "block members have different projected stars", {rep, c});
  LinkComplex link;
  link.representative = rep;
  const std::size_t k = fan.cone_dim(rep);
  for (ConeId t : fan.star(rep))
    if (fan.cone_dim(t) == k + 1) link.vertices.push_back(t);
  const auto& proj = fan.projected_star_ids(rep);
  const std::size_t nv = link.vertices.size();
  // A vertex set spans a simplex iff the cone on its projected rays is in the projected star.
  std::vector<IntVector> vray;
  for (ConeId v : link.vertices) {
    const auto& c = fan.interned(fan.projected_id(rep, v));
    vray.push_back(c.front());
  }
  std::vector<std::vector<int>> frontier;
  for (std::size_t i = 0; i < nv; ++i) frontier.push_back({static_cast<int>(i)});
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& s : frontier) {
      CanonicalCone cc;
      for (int i : s) cc.push_back(vray[static_cast<std::size_t>(i)]);
      std::sort(cc.begin(), cc.end());
      auto id = fan.intern_lookup(cc);
      if (!id || !std::binary_search(proj.begin(), proj.end(), *id)) continue;
      link.simplices.push_back(s);
      for (std::size_t j = static_cast<std::size_t>(s.back()) + 1; j < nv; ++j) {
        auto t = s;
        t.push_back(static_cast<int>(j));
        next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }
  std::sort(link.simplices.begin(), link.simplices.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return link;
}

ConeId least_member(const Fan& fan, const std::vector<ConeId>& cones) {
  if (cones.empty()) throw Error("UnknownCone", "empty cone list");
  ConeId best = cones.front();
  CanonicalCone best_rays = fan.canonical(best);
  for (ConeId c : cones) {
    CanonicalCone r = fan.canonical(c);
    if (r < best_rays) {
      best = c;
      best_rays = std::move(r);
    }
  }
  return best;
}

std::string cone_label(const Fan& fan, ConeId c) {
  CanonicalCone r = fan.canonical(c);
  if (r.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "|" : "") + to_string(r[i]);
  return s;
}

}  // namespace pfan
