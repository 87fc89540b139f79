#include "pfan/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "pfan/error.hpp"
#include "pfan/polyhedral.hpp"

namespace pfan {

namespace {

int sgn(const Integer& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

std::vector<IntVector> select(const std::vector<IntVector>& v, const std::vector<int>& idx) {
  std::vector<IntVector> out;
  for (int i : idx) out.push_back(v.at(static_cast<std::size_t>(i)));
  return out;
}

void require_chamber(const Fan& fan, ConeId c) {
  if (c < 0 || static_cast<std::size_t>(c) >= fan.num_cones() || fan.cone_dim(c) != fan.dim())
    throw Error("NotAChamber", "cone is not a chamber", c);
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
  return x;
}

}  // namespace

Arrangement make_arrangement(std::size_t dim, std::vector<IntVector> normals) {
  Arrangement arr{dim, {}};
  for (auto& n : normals) {
    if (n.size() != dim) throw Error("DimensionMismatch", "normal has the wrong length", to_string(n));
    if (is_zero(n)) throw Error("ZeroVector", "normal is zero");
    arr.normals.push_back(primitive_ray(n));
  }
  for (std::size_t i = 0; i < arr.normals.size(); ++i)
    for (std::size_t j = i + 1; j < arr.normals.size(); ++j)
      if (rank(std::vector<IntVector>{arr.normals[i], arr.normals[j]}, dim) < 2)
        throw Error("ParallelNormals", "two normals define the same hyperplane", {i, j});
  return arr;
}

SignVector face_signs(const Arrangement& arr, const Fan& fan, ConeId c) {
  IntVector p(arr.dim, 0);
  for (const auto& r : fan.cone_rays(c))
    for (std::size_t k = 0; k < arr.dim; ++k) p[k] += r[k];
  SignVector s;
  for (const auto& n : arr.normals) s.push_back(sgn(dot(n, p)));
  return s;
}

Fan arrangement_fan(const Arrangement& arr) {
  const std::size_t m = arr.normals.size();
  const std::size_t n = arr.dim;
  if (m > 12) throw Error("EnumerationLimit", "sign-vector enumeration is limited to 12 hyperplanes", m);
  if (rank(arr.normals, n) < n) throw Error("NotSimplicialArrangement", "normals do not span; cones have lineality");
  struct Face {
    SignVector signs;
    std::size_t dim;
  };
  std::vector<Face> faces;
  SignVector s(m, -1);
  while (true) {
    if (sign_vector_feasible(n, arr.normals, s)) {
      std::vector<int> zeros;
      for (std::size_t i = 0; i < m; ++i)
        if (s[i] == 0) zeros.push_back(static_cast<int>(i));
      faces.push_back({s, n - rank(select(arr.normals, zeros), n)});
    }
    std::size_t i = 0;
    while (i < m && s[i] == 1) s[i++] = -1;
    if (i == m) break;
    ++s[i];
  }
  std::vector<std::pair<IntVector, SignVector>> rays;
  for (const auto& f : faces) {
    if (f.dim != 1) continue;
    std::vector<int> zeros;
    for (std::size_t i = 0; i < m; ++i)
      if (f.signs[i] == 0) zeros.push_back(static_cast<int>(i));
    IntVector v = null_space(select(arr.normals, zeros), n).front();
    for (std::size_t i = 0; i < m; ++i)
      if (f.signs[i] != 0) {
        if (sgn(dot(arr.normals[i], v)) != f.signs[i])
          for (auto& x : v) x = -x;
        break;
      }
    rays.emplace_back(v, f.signs);
  }
  std::sort(rays.begin(), rays.end());
  std::vector<RaySet> chambers;
  for (const auto& f : faces) {
    RaySet rs;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      bool conforms = true;
      for (std::size_t i = 0; i < m && conforms; ++i)
        conforms = rays[r].second[i] == 0 || rays[r].second[i] == f.signs[i];
      if (conforms) rs.push_back(static_cast<int>(r));
    }
    if (rs.size() != f.dim) throw Error("NotSimplicialArrangement", "a face has more rays than its dimension", f.signs);
    if (f.dim == n) chambers.push_back(rs);
  }
  std::sort(chambers.begin(), chambers.end());
  std::vector<IntVector> ray_vectors;
  for (auto& r : rays) ray_vectors.push_back(r.first);
  return Fan(n, ray_vectors, chambers);
}

std::vector<Flat> flats(const Arrangement& arr) {
  const std::size_t m = arr.normals.size();
  if (m > 12) throw Error("EnumerationLimit", "flat enumeration is limited to 12 hyperplanes", m);
  std::set<std::vector<int>> seen;
  std::vector<Flat> out;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> sub;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (1u << i)) sub.push_back(static_cast<int>(i));
    const auto basis = sub.empty() ? std::vector<IntVector>{} : null_space(select(arr.normals, sub), arr.dim);
    std::vector<int> closed;
    for (std::size_t i = 0; i < m; ++i) {
      bool contains = true;
      for (const auto& v : basis)
        if (dot(arr.normals[i], v) != 0) contains = false;
      if (sub.empty()) contains = false;
      if (contains) closed.push_back(static_cast<int>(i));
    }
    if (seen.insert(closed).second) out.push_back({closed, rank(select(arr.normals, closed), arr.dim)});
  }
  std::sort(out.begin(), out.end(),
            [](const Flat& a, const Flat& b) { return std::tie(a.rank, a.hyperplanes) < std::tie(b.rank, b.hyperplanes); });
  return out;
}

Flat support(const Arrangement& arr, const Fan& fan, ConeId c) {
  if (c < 0 || static_cast<std::size_t>(c) >= fan.num_cones()) throw Error("UnknownFace", "no such face", c);
  Flat f;
  const auto rays = fan.cone_rays(c);
  for (std::size_t i = 0; i < arr.normals.size(); ++i) {
    bool contains = true;
    for (const auto& r : rays)
      if (dot(arr.normals[i], r) != 0) contains = false;
    if (contains) f.hyperplanes.push_back(static_cast<int>(i));
  }
  f.rank = rank(select(arr.normals, f.hyperplanes), arr.dim);
  return f;
}

Partition flat_partition(const Arrangement& arr, const Fan& fan) {
  std::map<std::vector<int>, int> ids;
  std::vector<int> labels;
  for (std::size_t c = 0; c < fan.num_cones(); ++c) {
    auto key = support(arr, fan, static_cast<ConeId>(c)).hyperplanes;
    labels.push_back(ids.emplace(key, static_cast<int>(ids.size())).first->second);
  }
  return Partition::from_labels(labels);
}

ConeId default_base(const Arrangement& arr, const Fan& fan) {
  for (ConeId t : fan.maximal()) {
    auto s = face_signs(arr, fan, t);
    if (std::all_of(s.begin(), s.end(), [](int x) { return x == 1; })) return t;
  }
  throw Error("NotAChamber", "no chamber lies on the positive side of every hyperplane");
}

ConeId chamber_containing(const Arrangement& arr, const Fan& fan, const IntVector& point) {
  if (point.size() != arr.dim) throw Error("DimensionMismatch", "point has the wrong length", to_string(point));
  SignVector s;
  for (const auto& n : arr.normals) s.push_back(sgn(dot(n, point)));
  if (std::find(s.begin(), s.end(), 0) != s.end()) throw Error("NotAChamber", "point lies on a hyperplane", to_string(point));
  for (ConeId t : fan.maximal())
    if (face_signs(arr, fan, t) == s) return t;
  throw Error("NotAChamber", "no chamber has the point's sign vector", to_string(point));
}

std::vector<int> separating_set(const Arrangement& arr, const Fan& fan, ConeId base, ConeId region) {
  require_chamber(fan, base);
  require_chamber(fan, region);
  const auto a = face_signs(arr, fan, base);
  const auto b = face_signs(arr, fan, region);
  std::vector<int> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) out.push_back(static_cast<int>(i));
  return out;
}

FanPoset poset_of_regions(const Arrangement& arr, const Fan& fan, ConeId base) {
  require_chamber(fan, base);
  std::vector<std::pair<ConeId, ConeId>> covers;
  for (const auto& w : walls(fan)) {
    const auto a = separating_set(arr, fan, base, w.first).size();
    const auto b = separating_set(arr, fan, base, w.second).size();
    covers.push_back(a < b ? std::pair{w.first, w.second} : std::pair{w.second, w.first});
  }
  return FanPoset(fan, covers);
}

std::vector<int> basic_hyperplanes(const Arrangement& arr, const Flat& flat, const SignVector& base_signs) {
  const auto normals = select(arr.normals, flat.hyperplanes);
  SignVector s;
  for (int h : flat.hyperplanes) s.push_back(base_signs.at(static_cast<std::size_t>(h)));
  std::vector<int> out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    SignVector t = s;
    t[k] = -t[k];
    if (sign_vector_feasible(arr.dim, normals, t)) out.push_back(flat.hyperplanes[k]);
  }
  return out;
}

std::vector<Shard> shards(const Arrangement& arr, const Fan& fan, ConeId base) {
  require_chamber(fan, base);
  const std::size_t n = fan.dim();
  const auto base_signs = face_signs(arr, fan, base);
  std::map<std::vector<int>, std::set<int>> cut;
  std::vector<std::pair<ConeId, std::vector<int>>> ridges;
  if (n >= 2)
    for (ConeId r : fan.cones_of_dim(n - 2)) {
      Flat f = support(arr, fan, r);
      if (f.rank != 2) throw Error("NotSimplicialArrangement", "codimension-2 face does not span a rank-2 flat", r);
      if (!cut.count(f.hyperplanes)) {
        auto basic = basic_hyperplanes(arr, f, base_signs);
        auto& c = cut[f.hyperplanes];
        for (int h : f.hyperplanes)
          if (std::find(basic.begin(), basic.end(), h) == basic.end()) c.insert(h);
      }
      ridges.emplace_back(r, f.hyperplanes);
    }
  std::vector<int> wall_plane(fan.num_cones(), -1);
  for (ConeId w : fan.cones_of_dim(n - 1)) {
    Flat f = support(arr, fan, w);
    if (f.hyperplanes.size() != 1) throw Error("NotSimplicialArrangement", "wall lies in several hyperplanes", w);
    wall_plane[static_cast<std::size_t>(w)] = f.hyperplanes.front();
  }
  std::vector<int> parent(fan.num_cones());
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& [r, planes] : ridges)
    for (int h : planes) {
      if (cut.at(planes).count(h)) continue;
      std::vector<ConeId> ws;
      for (ConeId c : fan.star(r))
        if (wall_plane[static_cast<std::size_t>(c)] == h) ws.push_back(c);
      for (std::size_t i = 1; i < ws.size(); ++i) {
        int a = find_root(parent, ws[0]), b = find_root(parent, ws[i]);
        parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
  std::map<std::pair<int, int>, std::vector<ConeId>> comps;
  for (ConeId w : fan.cones_of_dim(n - 1))
    comps[{wall_plane[static_cast<std::size_t>(w)], find_root(parent, w)}].push_back(w);
  std::vector<Shard> out;
  for (auto& [key, ws] : comps) out.push_back({key.first, ws});
  std::sort(out.begin(), out.end(),
            [](const Shard& a, const Shard& b) { return std::tie(a.hyperplane, a.walls) < std::tie(b.hyperplane, b.walls); });
  return out;
}

Partition shard_partition(const Arrangement& arr, const Fan& fan, ConeId base) {
  std::vector<std::set<ConeId>> face_sets;
  for (const auto& s : shards(arr, fan, base)) {
    std::set<ConeId> faces;
    for (ConeId w : s.walls)
      for (std::size_t c = 0; c < fan.num_cones(); ++c)
        if (fan.contains(w, static_cast<ConeId>(c))) faces.insert(static_cast<ConeId>(c));
    face_sets.push_back(std::move(faces));
  }
  std::map<std::vector<ConeId>, int> ids;
  std::vector<int> labels;
  for (std::size_t c = 0; c < fan.num_cones(); ++c) {
    std::optional<std::set<ConeId>> key;
    for (const auto& fs : face_sets) {
      if (!fs.count(static_cast<ConeId>(c))) continue;
      if (!key) {
        key = fs;
        continue;
      }
      std::set<ConeId> inter;
      std::set_intersection(key->begin(), key->end(), fs.begin(), fs.end(), std::inserter(inter, inter.end()));
      key = std::move(inter);
    }
    std::vector<ConeId> k = key ? std::vector<ConeId>(key->begin(), key->end()) : std::vector<ConeId>{};
    labels.push_back(ids.emplace(k, static_cast<int>(ids.size())).first->second);
  }
  return Partition::from_labels(labels);
}

}  // namespace pfan
