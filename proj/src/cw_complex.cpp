#include "pfan/cw_complex.hpp"

#include <algorithm>
#include <deque>

#include "pfan/category.hpp"
#include "pfan/error.hpp"

namespace pfan {

namespace {

int half_plane(const Rational& x, const Rational& y) { return (y > 0 || (y == 0 && x > 0)) ? 0 : 1; }

}  // namespace

std::vector<std::size_t> CWComplex::counts() const {
  std::vector<std::size_t> out;
  for (const auto& c : cells) out.push_back(c.size());
  return out;
}

CWComplex build_cw(const Fan& fan, const Partition& partition) {
  if (!is_finite_complete(fan)) throw Error("NotComplete", "the fan does not cover the ambient space");
  if (partition.size() != fan.num_cones()) throw Error("FanMismatch", "partition size differs from the cone count");
  auto adm = is_admissible(fan, partition);
  if (!adm.admissible) {
    const auto& w = *adm.witness;
    throw Error("NotAdmissible", "partition is not admissible", {w.sigma1, w.sigma2, w.tau1, w.tau2});
  }
  const std::size_t n = fan.dim();
  CWComplex cw;
  cw.fan = &fan;
  cw.partition = partition;
  cw.cells.assign(n + 1, {});
  for (std::size_t b = 0; b < partition.num_blocks(); ++b)
    cw.cells[n - fan.cone_dim(partition.block(static_cast<BlockId>(b)).front())].push_back(static_cast<BlockId>(b));
  cw.zero_cells = cw.cells[0];

  if (n >= 1)
    for (BlockId b : cw.cells[1]) {
      const ConeId w = partition.block(b).front();
      const auto ch = fan.maximal_in_star(w);
      OneCell e{b, partition.block_of(ch[0]), partition.block_of(ch[1]), fan.projected_id(w, ch[0]),
                fan.projected_id(w, ch[1])};
      const bool swap = e.tail != e.head ? e.head < e.tail : fan.interned(e.head_signature) < fan.interned(e.tail_signature);
      if (swap) {
        std::swap(e.tail, e.head);
        std::swap(e.tail_signature, e.head_signature);
      }
      cw.one_cells.push_back(e);
    }

  if (n >= 2)
    for (BlockId b : cw.cells[2]) {
      const ConeId sigma = partition.block(b).front();
      std::vector<IntVector> sigma_rays = fan.cone_rays(sigma);
      std::vector<RationalVector> frame;
      for (const auto& v : null_space(sigma_rays, n)) frame.push_back(to_rational(v));
      frame = gram_schmidt(frame);
      struct Item {
        Rational x, y;
        ConeId chamber;
      };
      std::vector<Item> items;
      for (ConeId c : fan.maximal_in_star(sigma)) {
        RationalVector p(n, 0);
        for (const auto& r : fan.cone_rays(c))
          for (std::size_t k = 0; k < n; ++k) p[k] += Rational(r[k]);
        items.push_back({dot(p, frame[0]), dot(p, frame[1]), c});
      }
      std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        const int ha = half_plane(a.x, a.y), hb = half_plane(b.x, b.y);
        if (ha != hb) return ha < hb;
        return a.x * b.y - a.y * b.x > 0;
      });
      auto start = std::min_element(items.begin(), items.end(),
                                    [](const Item& a, const Item& b) { return a.chamber < b.chamber; });
      std::rotate(items.begin(), start, items.end());
      TwoCell cell{b, sigma, {}, {}};
      for (const auto& it : items) cell.chambers.push_back(it.chamber);
      const std::size_t k = cell.chambers.size();
      for (std::size_t i = 0; i < k; ++i) {
        const ConeId a = cell.chambers[i], c = cell.chambers[(i + 1) % k];
        RaySet common;
        std::set_intersection(fan.cone(a).begin(), fan.cone(a).end(), fan.cone(c).begin(), fan.cone(c).end(),
                              std::back_inserter(common));
        const ConeId wall = fan.id(common);
        const BlockId wb = partition.block_of(wall);
        auto e = std::find_if(cw.one_cells.begin(), cw.one_cells.end(), [&](const OneCell& x) { return x.block == wb; });
        const int idx = static_cast<int>(e - cw.one_cells.begin());
        cell.boundary.push_back({idx, fan.projected_id(wall, a) == e->tail_signature ? 1 : -1});
      }
      cw.two_cells.push_back(std::move(cell));
    }
  return cw;
}

long euler_characteristic(const CWComplex& cw) {
  long chi = 0;
  for (std::size_t d = 0; d < cw.cells.size(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(cw.cells[d].size());
  return chi;
}

Presentation pi1_presentation(const CWComplex& cw) {
  const Fan& fan = *cw.fan;
  Presentation p;
  if (cw.zero_cells.empty()) return p;
  auto vertex = [&](BlockId b) {
    return static_cast<std::size_t>(std::find(cw.zero_cells.begin(), cw.zero_cells.end(), b) - cw.zero_cells.begin());
  };
  std::vector<bool> seen(cw.zero_cells.size(), false), tree(cw.one_cells.size(), false);
  std::deque<std::size_t> q{0};
  seen[0] = true;
  while (!q.empty()) {
    const std::size_t v = q.front();
    q.pop_front();
    for (std::size_t e = 0; e < cw.one_cells.size(); ++e) {
      const std::size_t t = vertex(cw.one_cells[e].tail), h = vertex(cw.one_cells[e].head);
      if (t != v && h != v) continue;
      const std::size_t other = t == v ? h : t;
      if (seen[other]) continue;
      seen[other] = true;
      tree[e] = true;
      q.push_back(other);
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw Error("Disconnected", "the 1-skeleton is not connected");
  std::vector<int> gen(cw.one_cells.size(), -1);
  for (std::size_t e = 0; e < cw.one_cells.size(); ++e) {
    if (tree[e]) continue;
    gen[e] = static_cast<int>(p.generators.size());
    const BlockId b = cw.one_cells[e].block;
    p.generators.push_back({"X" + block_label(fan, cw.partition, b), fan.canonical(least_member(fan, cw.partition.block(b)))});
  }
  for (const auto& cell : cw.two_cells) {
    Word w;
    for (const auto& l : cell.boundary)
      if (gen[static_cast<std::size_t>(l.gen)] >= 0) w.push_back({gen[static_cast<std::size_t>(l.gen)], l.exp});
    p.relators.push_back(free_reduce(w));
  }
  return p;
}

Pi1Comparison compare_pi1_picture(const CWComplex& cw, const Presentation& picture) {
  if (cw.zero_cells.size() != 1)
    throw Error("PreconditionUnmet", "maximal cones are not all identified", cw.zero_cells.size());
  const Presentation pi1 = pi1_presentation(cw);
  Pi1Comparison c;
  c.pi1_generators = pi1.generators.size();
  c.picture_generators = picture.generators.size();
  c.pi1_abelianization = abelianization(pi1);
  c.picture_abelianization = abelianization(picture);
  return c;
}

}  // namespace pfan
