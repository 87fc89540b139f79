#include "pfan/partition.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "pfan/error.hpp"

namespace pfan {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    return true;
  }
  std::vector<int> labels() {
    std::vector<int> l(parent_.size());
    for (std::size_t i = 0; i < l.size(); ++i) l[i] = find(static_cast<int>(i));
    return l;
  }

 private:
  std::vector<int> parent_;
};

void require_same_fan(const Fan& fan, const Partition& p) {
  if (p.size() != fan.num_cones())
    throw Error("FanMismatch", "partition size differs from the number of cones",
                {{"cones", fan.num_cones()}, {"partition", p.size()}});
}

// Restricted growth strings of length m.
void set_partitions(std::size_t m, std::vector<int>& cur, int high, std::vector<std::vector<int>>& out) {
  if (cur.size() == m) {
    out.push_back(cur);
    return;
  }
  for (int v = 0; v <= high + 1; ++v) {
    cur.push_back(v);
    set_partitions(m, cur, std::max(high, v), out);
    cur.pop_back();
  }
}

}  // namespace

Partition Partition::from_labels(const std::vector<int>& labels) {
  Partition p;
  p.block_of_.assign(labels.size(), -1);
  std::map<int, BlockId> seen;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto it = seen.find(labels[i]);
    if (it == seen.end()) {
      it = seen.emplace(labels[i], static_cast<BlockId>(p.blocks_.size())).first;
      p.blocks_.emplace_back();
    }
    p.block_of_[i] = it->second;
    p.blocks_[static_cast<std::size_t>(it->second)].push_back(static_cast<ConeId>(i));
  }
  return p;
}

Partition Partition::from_blocks(std::size_t n, const std::vector<std::vector<ConeId>>& blocks) {
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  std::vector<bool> listed(n, false);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (ConeId c : blocks[b]) {
      if (c < 0 || static_cast<std::size_t>(c) >= n) throw Error("UnknownCone", "cone id out of range", c);
      if (listed[static_cast<std::size_t>(c)]) throw Error("OverlappingBlocks", "cone listed twice", c);
      listed[static_cast<std::size_t>(c)] = true;
      labels[static_cast<std::size_t>(c)] = static_cast<int>(n + b);
    }
  return from_labels(labels);
}

Partition Partition::finest(std::size_t n) {
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  return from_labels(labels);
}

IdentTable potential_identifications(const Fan& fan) {
  std::map<std::pair<int, std::vector<int>>, int> keys;
  std::vector<int> labels;
  for (std::size_t c = 0; c < fan.num_cones(); ++c) {
    auto key = std::make_pair(fan.span_id(static_cast<ConeId>(c)), fan.projected_star_ids(static_cast<ConeId>(c)));
    auto it = keys.emplace(key, static_cast<int>(keys.size())).first;
    labels.push_back(it->second);
  }
  return {Partition::from_labels(labels)};
}

AdmissibilityResult is_admissible(const Fan& fan, const Partition& p) {
  require_same_fan(fan, p);
  const IdentTable e = potential_identifications(fan);
  for (const auto& block : p.blocks())
    for (ConeId c : block)
      if (!e.classes.same(block.front(), c))
        throw Error("PossibleIdentViolation", "a block crosses potential-identification classes",
                    {block.front(), c});
  for (const auto& block : p.blocks())
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = i + 1; j < block.size(); ++j) {
        const ConeId s1 = block[i], s2 = block[j];
        for (ConeId t1 : fan.star(s1)) {
          auto t2 = fan.star_member_with(s2, fan.projected_id(s1, t1));
          if (t2 && !p.same(t1, *t2)) return {false, AdmissibilityWitness{s1, s2, t1, *t2}};
        }
      }
  return {true, std::nullopt};
}

Partition admissible_closure(const Fan& fan, const std::vector<std::pair<ConeId, ConeId>>& seeds) {
  const IdentTable e = potential_identifications(fan);
  const std::size_t n = fan.num_cones();
  UnionFind uf(n);
  std::deque<std::pair<ConeId, ConeId>> work;
  for (auto [a, b] : seeds) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n)
      throw Error("UnknownCone", "seed cone out of range", {a, b});
    if (!e.classes.same(a, b)) throw Error("SeedNotPossible", "seed pair crosses potential-identification classes", {a, b});
    if (uf.unite(a, b)) work.emplace_back(a, b);
  }
  // Each recorded merge (a,b) forces the matching star members together.
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    for (ConeId t1 : fan.star(a)) {
      auto t2 = fan.star_member_with(b, fan.projected_id(a, t1));
      if (t2 && uf.unite(t1, *t2)) work.emplace_back(t1, *t2);
    }
  }
  return Partition::from_labels(uf.labels());
}

Partition meet(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw Error("FanMismatch", "partitions of different fans");
  std::map<std::pair<int, int>, int> keys;
  std::vector<int> labels;
  for (std::size_t c = 0; c < a.size(); ++c) {
    auto key = std::make_pair(a.block_of(static_cast<ConeId>(c)), b.block_of(static_cast<ConeId>(c)));
    labels.push_back(keys.emplace(key, static_cast<int>(keys.size())).first->second);
  }
  return Partition::from_labels(labels);
}

Partition join(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw Error("FanMismatch", "partitions of different fans");
  UnionFind uf(a.size());
  for (const auto* p : {&a, &b})
    for (const auto& block : p->blocks())
      for (ConeId c : block) uf.unite(block.front(), c);
  return Partition::from_labels(uf.labels());
}

bool refines(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw Error("FanMismatch", "partitions of different fans");
  for (const auto& block : a.blocks())
    for (ConeId c : block)
      if (!b.same(block.front(), c)) return false;
  return true;
}

std::vector<Partition> enumerate_admissible(const Fan& fan, std::size_t cone_limit) {
  if (fan.num_cones() > cone_limit)
    throw Error("EnumerationLimit", "fan has more cones than the enumeration limit",
                {{"cones", fan.num_cones()}, {"limit", cone_limit}});
  const IdentTable e = potential_identifications(fan);
  const auto& classes = e.classes.blocks();

  std::vector<std::vector<std::vector<int>>> options(classes.size());
  for (std::size_t k = 0; k < classes.size(); ++k) {
    std::vector<int> cur;
    set_partitions(classes[k].size(), cur, -1, options[k]);
  }

  std::vector<Partition> out;
  std::vector<std::size_t> choice(classes.size(), 0);
  std::vector<int> labels(fan.num_cones());
  while (true) {
    for (std::size_t k = 0; k < classes.size(); ++k) {
      const auto& rgs = options[k][choice[k]];
      for (std::size_t j = 0; j < classes[k].size(); ++j)
        labels[static_cast<std::size_t>(classes[k][j])] = static_cast<int>(k * fan.num_cones()) + rgs[j];
    }
    Partition p = Partition::from_labels(labels);
    if (is_admissible(fan, p).admissible) out.push_back(std::move(p));
    std::size_t k = 0;
    while (k < classes.size() && ++choice[k] == options[k].size()) choice[k++] = 0;
    if (k == classes.size()) break;
  }
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) { return a.blocks() < b.blocks(); });
  return out;
}

}  // namespace pfan
