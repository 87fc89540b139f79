#include "pfan/picture_group.hpp"

#include <algorithm>
#include <map>

#include "pfan/error.hpp"
#include "pfan/wall_algebra.hpp"

namespace pfan {

namespace {

std::map<BlockId, int> generator_index(const Fan& fan, const Partition& p) {
  std::map<BlockId, int> idx;
  for (BlockId b : picture_generator_blocks(fan, p)) idx.emplace(b, static_cast<int>(idx.size()));
  return idx;
}

Word label_word(const Fan& fan, const Partition& p, const FanPoset& poset, const std::vector<ConeId>& chain,
                const std::map<BlockId, int>& gens) {
  (void)fan;
  Word w;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    auto c = poset.cover_between(chain[i], chain[i + 1]);
    if (!c) throw Error("IntervalBroken", "consecutive chain elements are not a cover", {chain[i], chain[i + 1]});
    w.push_back({gens.at(p.block_of(c->wall)), 1});
  }
  return w;
}

std::vector<ConeId> chain_between(const FanPoset& poset, ConeId from, ConeId to) {
  if (!poset.leq(from, to)) throw Error("IntervalBroken", "target chamber is not above the source chamber", {from, to});
  std::vector<ConeId> chain{from};
  while (chain.back() != to) {
    bool stepped = false;
    for (const auto& c : poset.covers())
      if (c.lower == chain.back() && poset.leq(c.upper, to)) {
        chain.push_back(c.upper);
        stepped = true;
        break;
      }
    if (!stepped) throw Error("IntervalBroken", "no cover leads toward the target", {from, to});
  }
  return chain;
}

ConeId interval_min(const FanPoset& poset, ConeId c) {
  try {
    return facial_interval(poset, c).minimum;
  } catch (const Error& e) {
    throw Error("IntervalBroken", e.what(), c);
  }
}

}  // namespace

std::vector<BlockId> picture_generator_blocks(const Fan& fan, const Partition& p) {
  std::vector<BlockId> out;
  for (std::size_t b = 0; b < p.num_blocks(); ++b)
    if (fan.cone_dim(p.block(static_cast<BlockId>(b)).front()) + 1 == fan.dim()) out.push_back(static_cast<BlockId>(b));
  return out;
}

std::string generator_name(const Fan& fan, const Partition& p, BlockId b) {
  return "X" + block_label(fan, p, b);
}

Word chain_word(const Fan& fan, const Partition& p, const FanPoset& poset, ConeId from, ConeId to) {
  return label_word(fan, p, poset, chain_between(poset, from, to), generator_index(fan, p));
}

std::vector<std::vector<ConeId>> maximal_chains(const FanPoset& poset, ConeId sigma, std::size_t limit) {
  const FacialInterval fi = facial_interval(poset, sigma);
  std::vector<std::vector<ConeId>> chains;
  std::vector<ConeId> path{fi.minimum};
  auto in_interval = [&](ConeId x) { return std::binary_search(fi.members.begin(), fi.members.end(), x); };
  auto extend = [&](auto&& self) -> void {
    if (path.back() == fi.maximum) {
      if (chains.size() >= limit) throw Error("ChainLimit", "too many maximal chains", sigma);
      chains.push_back(path);
      return;
    }
    for (const auto& c : poset.covers())
      if (c.lower == path.back() && in_interval(c.upper)) {
        path.push_back(c.upper);
        self(self);
        path.pop_back();
      }
  };
  extend(extend);
  return chains;
}

Presentation picture_group(const Fan& fan, const Partition& p, const FanPoset& poset, PictureMode mode,
                           std::size_t chain_limit) {
  Presentation pres;
  const auto gens = generator_index(fan, p);
  for (const auto& [b, i] : gens) {
    (void)i;
    pres.generators.push_back({generator_name(fan, p, b), fan.canonical(least_member(fan, p.block(b)))});
  }
  std::vector<ConeId> cones;
  if (mode == PictureMode::Codim2) {
    if (fan.dim() >= 2) cones = fan.cones_of_dim(fan.dim() - 2);
  } else {
    for (std::size_t c = 0; c < fan.num_cones(); ++c) cones.push_back(static_cast<ConeId>(c));
  }
  for (ConeId c : cones) {
    std::vector<std::vector<ConeId>> chains;
    try {
      chains = maximal_chains(poset, c, chain_limit);
    } catch (const Error& e) {
      if (e.code() == "ChainLimit") throw;
      throw Error("PosetInvalid", e.what(), c);
    }
    if (chains.empty()) continue;
    const Word reference = label_word(fan, p, poset, chains.front(), gens);
    for (std::size_t i = 1; i < chains.size(); ++i) {
      Word r = concat(label_word(fan, p, poset, chains[i], gens), inverse(reference));
      if (!r.empty()) pres.relators.push_back(std::move(r));
    }
  }
  if (!check_nondegenerate(p, poset).nondegenerate)
    for (auto& r : identification_relators(fan, p, poset)) pres.relators.push_back(std::move(r));
  return pres;
}

std::vector<Word> identification_relators(const Fan& fan, const Partition& p, const FanPoset& poset) {
  const auto gens = generator_index(fan, p);
  std::vector<Word> out;
  for (const auto& block : p.blocks()) {
    const ConeId s1 = block.front();
    for (std::size_t j = 1; j < block.size(); ++j) {
      const ConeId s2 = block[j];
      for (ConeId k1 : fan.star(s1)) {
        auto k2 = fan.star_member_with(s2, fan.projected_id(s1, k1));
        if (!k2) continue;
        Word w1 = label_word(fan, p, poset, chain_between(poset, interval_min(poset, s1), interval_min(poset, k1)), gens);
        Word w2 =
            label_word(fan, p, poset, chain_between(poset, interval_min(poset, s2), interval_min(poset, *k2)), gens);
        Word r = concat(w1, inverse(w2));
        if (!r.empty()) out.push_back(std::move(r));
      }
    }
  }
  return out;
}

Presentation alt_presentation(const Fan& fan, const Partition& p, const FanPoset& poset) {
  auto nd = check_nondegenerate(p, poset);
  if (!nd.nondegenerate) throw Error("Degenerate", "poset is degenerate for the partition", {nd.block, nd.sigma1, nd.sigma2});
  Presentation pres;
  const auto gens = generator_index(fan, p);
  for (const auto& [b, i] : gens) {
    (void)i;
    pres.generators.push_back({generator_name(fan, p, b), fan.canonical(least_member(fan, p.block(b)))});
  }
  std::map<ConeId, int> g;
  for (ConeId t : fan.maximal()) {
    g[t] = static_cast<int>(pres.generators.size());
    pres.generators.push_back({"g[" + cone_label(fan, t) + "]", fan.canonical(t)});
  }
  for (const auto& c : poset.covers())
    pres.relators.push_back({{g.at(c.lower), 1}, {g.at(c.upper), -1}, {gens.at(p.block_of(c.wall)), -1}});
  auto lo = poset.minimum();
  if (!lo) throw Error("PosetInvalid", "poset has no minimum");
  pres.relators.push_back({{g.at(*lo), 1}});
  return pres;
}

Word psi(const Category& cat, const FanPoset& poset, MorphId f) {
  const auto& m = cat.morphism(f);
  const auto [sigma, kappa] = m.representatives.front();
  return chain_word(cat.fan(), cat.partition(), poset, interval_min(poset, sigma), interval_min(poset, kappa));
}

FunctorCheckReport functor_check(const Category& cat, const FanPoset& poset, const Presentation& relations) {
  FunctorCheckReport report;
  std::vector<Word> words;
  for (std::size_t m = 0; m < cat.num_morphisms(); ++m) words.push_back(psi(cat, poset, static_cast<MorphId>(m)));
  for (const auto& [fg, h] : cat.composition_table()) {
    ++report.pairs_checked;
    const Word d = concat(words[static_cast<std::size_t>(h)],
                          inverse(concat(words[static_cast<std::size_t>(fg.first)], words[static_cast<std::size_t>(fg.second)])));
    if (d.empty() || trivial_by_rewriting(relations, d)) continue;
    report.passed = false;
    report.failures.push_back(fg);
  }
  return report;
}

FunctorCheckReport functor_check(const Category& cat, const FanPoset& poset) {
  Presentation rel = picture_group(cat.fan(), cat.partition(), poset, PictureMode::Full);
  for (auto& r : identification_relators(cat.fan(), cat.partition(), poset)) rel.relators.push_back(std::move(r));
  return functor_check(cat, poset, rel);
}

Presentation quotient_presentation(const Presentation& fine_presentation, const Fan& fan, const Partition& fine,
                                   const Partition& coarse) {
  if (fine.size() != fan.num_cones() || coarse.size() != fan.num_cones() || !refines(fine, coarse))
    throw Error("NotComparable", "the first partition does not refine the second");
  Presentation q = fine_presentation;
  auto gen = [&](BlockId fb) {
    const std::string name = generator_name(fan, fine, fb);
    auto i = q.find(name);
    if (!i) throw Error("UnknownGenerator", "presentation lacks a generator for a codimension-1 block", name);
    return *i;
  };
  for (std::size_t cb = 0; cb < coarse.num_blocks(); ++cb) {
    const auto& members = coarse.block(static_cast<BlockId>(cb));
    if (fan.cone_dim(members.front()) + 1 != fan.dim()) continue;
    const BlockId ref = fine.block_of(least_member(fan, members));
    std::vector<BlockId> others;
    for (ConeId c : members)
      if (fine.block_of(c) != ref) others.push_back(fine.block_of(c));
    std::sort(others.begin(), others.end());
    others.erase(std::unique(others.begin(), others.end()), others.end());
    for (BlockId o : others) q.relators.push_back({{gen(ref), 1}, {gen(o), -1}});
  }
  return q;
}

FaithfulnessCertificate rank2_faithfulness_certificate(const Category& cat, const FanPoset& poset) {
  const Fan& fan = cat.fan();
  if (fan.dim() != 2) throw Error("NotRank2", "fan is not two-dimensional", fan.dim());
  const Presentation pres = picture_group(fan, cat.partition(), poset, PictureMode::Codim2);
  FaithfulnessCertificate cert;
  for (std::size_t s = 0; s < cat.num_objects(); ++s)
    for (std::size_t t = 0; t < cat.num_objects(); ++t) {
      const auto hom = cat.hom(static_cast<BlockId>(s), static_cast<BlockId>(t));
      for (std::size_t i = 0; i < hom.size(); ++i)
        for (std::size_t j = i + 1; j < hom.size(); ++j) {
          ++cert.pairs_checked;
          const Word d = concat(psi(cat, poset, hom[i]), inverse(psi(cat, poset, hom[j])));
          if (!d.empty() && (nontrivial_by_freiheitssatz(pres, d) || nontrivial_in_abelianization(pres, d))) continue;
          cert.certified = false;
          cert.witness = {{"source", s}, {"target", t}, {"morphisms", {hom[i], hom[j]}}, {"difference", word_to_text(pres, d)}};
          return cert;
        }
    }
  return cert;
}

FaithfulnessCertificate hom_distinctness_certificate(const Category& cat, const FanPoset& poset,
                                                     const WallAlgebraCertificate* certificate) {
  if (!certificate || !certificate->valid())
    throw Error("MissingWallAlgebraCertificate", "a passing wall-algebra certificate is required");
  FaithfulnessCertificate cert;
  for (std::size_t s = 0; s < cat.num_objects(); ++s) {
    const ConeId sigma = cat.partition().block(static_cast<BlockId>(s)).front();
    for (std::size_t t = 0; t < cat.num_objects(); ++t) {
      const auto hom = cat.hom(static_cast<BlockId>(s), static_cast<BlockId>(t));
      std::map<ConeId, MorphId> seen;
      for (MorphId m : hom) {
        const auto targets = cat.targets_from(m, sigma);
        if (targets.empty()) throw Error("IntervalBroken", "morphism has no representative from the source", m);
        ++cert.pairs_checked;
        auto [it, fresh] = seen.emplace(interval_min(poset, targets.front()), m);
        if (!fresh) {
          cert.certified = false;
          cert.witness = {{"source", sigma}, {"morphisms", {it->second, m}}, {"minimum", it->first}};
          return cert;
        }
      }
    }
  }
  return cert;
}

}  // namespace pfan
