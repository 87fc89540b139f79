#include "pfan/polyhedral.hpp"

#include <algorithm>

#include "pfan/error.hpp"

namespace pfan {

namespace {

IntVector scaled_difference(const Integer& a, const IntVector& x, const Integer& b, const IntVector& y) {
  IntVector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = a * x[i] - b * y[i];
  return r;
}

IntVector normalize(const IntVector& v) { return primitive_ray(v); }

struct Generator {
  IntVector v;
  std::vector<bool> zeros;  // processed constraints vanishing on v
};

bool subset(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

}  // namespace

std::size_t ConeGenerators::dimension(std::size_t n) const {
  std::vector<IntVector> all = lineality;
  all.insert(all.end(), rays.begin(), rays.end());
  return rank(all, n);
}

ConeGenerators double_description(std::size_t n, const HRep& h) {
  std::vector<IntVector> constraints;
  for (const auto& e : h.equalities) {
    if (e.size() != n) throw Error("DimensionMismatch", "constraint length");
    constraints.push_back(e);
    IntVector neg(e);
    for (auto& x : neg) x = -x;
    constraints.push_back(neg);
  }
  for (const auto& a : h.inequalities) {
    if (a.size() != n) throw Error("DimensionMismatch", "constraint length");
    constraints.push_back(a);
  }
  const std::size_t m = constraints.size();

  std::vector<IntVector> lin;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    lin.push_back(e);
  }
  std::vector<Generator> rays;

  for (std::size_t c = 0; c < m; ++c) {
    const IntVector& a = constraints[c];
    if (is_zero(a)) {
      for (auto& r : rays) r.zeros[c] = true;
      continue;
    }
    std::size_t pivot = lin.size();
    for (std::size_t i = 0; i < lin.size(); ++i)
      if (dot(a, lin[i]) != 0) {
        pivot = i;
        break;
      }
    if (pivot < lin.size()) {
      IntVector l0 = lin[pivot];
      Integer al0 = dot(a, l0);
      if (al0 < 0) {
        for (auto& x : l0) x = -x;
        al0 = -al0;
      }
      std::vector<IntVector> new_lin;
      for (std::size_t i = 0; i < lin.size(); ++i) {
        if (i == pivot) continue;
        Integer al = dot(a, lin[i]);
        IntVector l = al == 0 ? lin[i] : scaled_difference(al0, lin[i], al, l0);
        new_lin.push_back(normalize(l));
      }
      for (auto& r : rays) {
        Integer ar = dot(a, r.v);
        if (ar != 0) r.v = normalize(scaled_difference(al0, r.v, ar, l0));
        r.zeros[c] = true;
      }
      Generator g{normalize(l0), std::vector<bool>(m, false)};
      for (std::size_t j = 0; j < c; ++j) g.zeros[j] = true;
      rays.push_back(std::move(g));
      lin = std::move(new_lin);
      continue;
    }

    std::vector<std::size_t> pos, neg;
    std::vector<Integer> val(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i].v);
      if (val[i] > 0) pos.push_back(i);
      else if (val[i] < 0) neg.push_back(i);
    }
    std::vector<Generator> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (val[i] < 0) continue;
      Generator g = rays[i];
      if (val[i] == 0) g.zeros[c] = true;
      next.push_back(std::move(g));
    }
    for (std::size_t p : pos)
      for (std::size_t q : neg) {
        std::vector<bool> common(m, false);
        for (std::size_t j = 0; j < m; ++j) common[j] = rays[p].zeros[j] && rays[q].zeros[j];
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (subset(common, rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        // val[p] > 0 > val[q]: val[p]*q - val[q]*p lies on a.x = 0
        Generator g{normalize(scaled_difference(val[p], rays[q].v, val[q], rays[p].v)), common};
        g.zeros[c] = true;
        next.push_back(std::move(g));
      }
    rays = std::move(next);
  }

  ConeGenerators out;
  out.lineality = std::move(lin);
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  std::sort(out.rays.begin(), out.rays.end());
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
  return out;
}

HRep simplicial_hrep(std::size_t n, const std::vector<IntVector>& rays) {
  HRep h;
  if (rays.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      IntVector e(n, 0);
      e[i] = 1;
      h.equalities.push_back(e);
    }
    return h;
  }
  std::vector<RationalVector> rows;
  for (const auto& r : rays) rows.push_back(to_rational(r));
  RationalMatrix r(rows);
  RationalMatrix dual = inverse(r * r.transpose()) * r;
  for (std::size_t i = 0; i < dual.rows(); ++i) h.inequalities.push_back(primitive_ray(dual.row(i)));
  h.equalities = null_space(rays, n);
  return h;
}

HRep hrep_of_generated(std::size_t n, const std::vector<IntVector>& generators) {
  HRep polar;
  polar.inequalities = generators;
  ConeGenerators p = double_description(n, polar);
  HRep h;
  h.inequalities = p.rays;
  h.equalities = p.lineality;
  return h;
}

HRep intersect(const HRep& a, const HRep& b) {
  HRep h = a;
  h.inequalities.insert(h.inequalities.end(), b.inequalities.begin(), b.inequalities.end());
  h.equalities.insert(h.equalities.end(), b.equalities.begin(), b.equalities.end());
  return h;
}

bool sign_vector_feasible(std::size_t n, const std::vector<IntVector>& normals, const std::vector<int>& signs) {
  HRep h;
  std::vector<IntVector> strict;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    if (signs[i] == 0) {
      h.equalities.push_back(normals[i]);
    } else {
      IntVector a = normals[i];
      if (signs[i] < 0)
        for (auto& x : a) x = -x;
      h.inequalities.push_back(a);
      strict.push_back(std::move(a));
    }
  }
  ConeGenerators g = double_description(n, h);
  // Lineality is orthogonal to every constraint, so strictness needs a ray.
  for (const auto& a : strict) {
    bool ok = false;
    for (const auto& r : g.rays)
      if (dot(a, r) > 0) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

}  // namespace pfan
