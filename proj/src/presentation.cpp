#include "pfan/presentation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "pfan/error.hpp"

namespace pfan {

Word free_reduce(const Word& w) {
  Word out;
  for (const auto& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp) out.pop_back();
    else out.push_back(l);
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t i = 0, j = r.size();
  while (j - i >= 2 && r[i].gen == r[j - 1].gen && r[i].exp == -r[j - 1].exp) {
    ++i;
    --j;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(i), r.begin() + static_cast<std::ptrdiff_t>(j));
}

Word inverse(const Word& w) {
  Word r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({it->gen, -it->exp});
  return r;
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return free_reduce(r);
}

std::optional<int> Presentation::find(const std::string& name) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i].name == name) return static_cast<int>(i);
  return std::nullopt;
}

std::vector<Word> Presentation::normalized_relators() const {
  std::vector<Word> out;
  for (const auto& r : relators) {
    Word w = free_reduce(r);
    if (!w.empty()) out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Presentation::same_up_to_relator_multiset(const Presentation& other) const {
  if (generators.size() != other.generators.size()) return false;
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i].name != other.generators[i].name) return false;
  return normalized_relators() == other.normalized_relators();
}

std::string word_to_text(const Presentation& p, const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    if (w[i].exp < 0) s += '-';
    s += p.generators.at(static_cast<std::size_t>(w[i].gen)).name;
  }
  return s;
}

std::string to_text(const Presentation& p) {
  std::string s = "gens:";
  for (const auto& g : p.generators) s += " " + g.name;
  s += " ; rels:";
  for (std::size_t i = 0; i < p.relators.size(); ++i) s += (i ? "; " : " ") + word_to_text(p, p.relators[i]);
  return s;
}

Presentation parse_text(const std::string& text) {
  const auto g = text.find("gens:");
  const auto r = text.find("rels:");
  if (g == std::string::npos || r == std::string::npos || r < g)
    throw Error("ParseError", "expected 'gens: ... ; rels: ...'");
  std::string gens = text.substr(g + 5, r - g - 5);
  auto semi = gens.rfind(';');
  if (semi == std::string::npos) throw Error("ParseError", "missing ';' before rels");
  gens = gens.substr(0, semi);
  Presentation p;
  std::istringstream gs(gens);
  std::string tok;
  while (gs >> tok) p.generators.push_back({tok, {}});
  std::string rels = text.substr(r + 5);
  std::istringstream rs(rels);
  std::string part;
  while (std::getline(rs, part, ';')) {
    std::istringstream ws(part);
    Word w;
    bool any = false;
    while (ws >> tok) {
      any = true;
      int exp = 1;
      if (tok.size() > 1 && tok[0] == '-') {
        exp = -1;
        tok = tok.substr(1);
      }
      auto id = p.find(tok);
      if (!id) throw Error("ParseError", "relator uses an undeclared generator", tok);
      w.push_back({*id, exp});
    }
    if (any) p.relators.push_back(std::move(w));
  }
  return p;
}

std::string to_gap(const Presentation& p) {
  std::ostringstream os;
  os << "F := FreeGroup(";
  for (std::size_t i = 0; i < p.generators.size(); ++i) os << (i ? ", " : "") << "\"x" << i + 1 << "\"";
  os << ");;\n";
  for (std::size_t i = 0; i < p.generators.size(); ++i) os << "# x" << i + 1 << " = " << p.generators[i].name << "\n";
  os << "G := F / [";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    os << (i ? ", " : " ");
    if (p.relators[i].empty()) os << "One(F)";
    for (std::size_t j = 0; j < p.relators[i].size(); ++j)
      os << (j ? "*" : "") << "F." << p.relators[i][j].gen + 1 << (p.relators[i][j].exp < 0 ? "^-1" : "");
  }
  os << " ];;\n";
  return os.str();
}

std::vector<Integer> smith_diagonal(std::vector<std::vector<Integer>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<Integer> diag;
  auto absv = [](const Integer& x) { return x < 0 ? Integer(-x) : x; };
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 && (pi == rows || absv(m[i][j]) < absv(m[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) {
        std::sort(diag.begin(), diag.end());
        return diag;
      }
      std::swap(m[t], m[pi]);
      for (auto& row : m) std::swap(row[t], row[pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        Integer q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        Integer q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) m[t][j] += m[bad][j];
    }
    diag.push_back(absv(m[t][t]));
  }
  std::sort(diag.begin(), diag.end());
  return diag;
}

std::vector<Integer> exponent_sums(const Word& w, std::size_t num_generators) {
  std::vector<Integer> v(num_generators, 0);
  for (const auto& l : w) v.at(static_cast<std::size_t>(l.gen)) += l.exp;
  return v;
}

Abelianization abelianization(const Presentation& p) {
  std::vector<std::vector<Integer>> m;
  for (const auto& r : p.relators) m.push_back(exponent_sums(r, p.generators.size()));
  auto d = smith_diagonal(m);
  Abelianization a;
  a.free_rank = p.generators.size() - d.size();
  for (const auto& x : d)
    if (x > 1) a.torsion.push_back(x);
  return a;
}

bool nontrivial_in_abelianization(const Presentation& p, const Word& w) {
  // w is zero in the abelianization iff adding it as a relator leaves the group unchanged
  Presentation q = p;
  q.relators.push_back(w);
  return !(abelianization(q) == abelianization(p));
}

namespace {

Word rotate(const Word& w, std::size_t k) {
  Word r(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
  r.insert(r.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
  return r;
}

Word canonical_rotation(const Word& w) {
  Word best = w;
  for (std::size_t k = 1; k < w.size(); ++k) best = std::min(best, rotate(w, k));
  return best;
}

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = w.size();
    for (const auto& l : w) h = h * 1000003u + static_cast<std::size_t>(l.gen * 2 + (l.exp > 0));
    return h;
  }
};

}  // namespace

bool trivial_by_rewriting(const Presentation& p, const Word& w, int depth, std::size_t state_cap) {
  std::vector<Word> pieces;
  for (const auto& r : p.relators) {
    Word c = cyclic_reduce(r);
    if (c.empty()) continue;
    for (const Word& x : {c, inverse(c)})
      for (std::size_t k = 0; k < x.size(); ++k) pieces.push_back(rotate(x, k));
  }
  std::vector<Word> frontier{canonical_rotation(cyclic_reduce(w))};
  if (frontier.front().empty()) return true;
  std::unordered_set<Word, WordHash> seen(frontier.begin(), frontier.end());
  for (int step = 0; step < depth && !frontier.empty(); ++step) {
    std::vector<Word> next;
    for (const Word& cur : frontier)
      for (std::size_t k = 0; k < cur.size(); ++k) {
        const Word rot = rotate(cur, k);
        for (const Word& r : pieces)
          for (std::size_t l = (r.size() + 1) / 2; l <= r.size() && l <= rot.size(); ++l) {
            if (!std::equal(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(l), rot.begin())) continue;
            Word rest(r.begin() + static_cast<std::ptrdiff_t>(l), r.end());
            Word cand = inverse(rest);
            cand.insert(cand.end(), rot.begin() + static_cast<std::ptrdiff_t>(l), rot.end());
            cand = canonical_rotation(cyclic_reduce(cand));
            if (cand.empty()) return true;
            if (seen.size() < state_cap && seen.insert(cand).second) next.push_back(std::move(cand));
          }
      }
    frontier = std::move(next);
  }
  return false;
}

bool nontrivial_by_freiheitssatz(const Presentation& p, const Word& w) {
  std::set<Word> rels;
  for (const auto& r : p.relators) {
    Word c = cyclic_reduce(r);
    if (c.empty()) continue;
    rels.insert(std::min(canonical_rotation(c), canonical_rotation(inverse(c))));
  }
  const Word cw = cyclic_reduce(w);
  if (cw.empty()) return false;
  if (rels.empty()) return true;
  if (rels.size() != 1) return false;
  std::set<int> in_rel, in_word;
  for (const auto& l : *rels.begin()) in_rel.insert(l.gen);
  for (const auto& l : cw) in_word.insert(l.gen);
  for (int g : in_rel)
    if (!in_word.count(g)) return true;
  return false;
}

Presentation eliminate_single_occurrences(const Presentation& input) {
  Presentation p = input;
  for (auto& r : p.relators) r = cyclic_reduce(r);
  while (true) {
    bool changed = false;
    for (std::size_t ri = 0; ri < p.relators.size() && !changed; ++ri) {
      const Word& r = p.relators[ri];
      std::map<int, int> count;
      for (const auto& l : r) ++count[l.gen];
      for (std::size_t k = 0; k < r.size(); ++k) {
        if (count[r[k].gen] != 1) continue;
        const int x = r[k].gen;
        Word rot = rotate(r, k);
        // rot = x^e s, so x = s^{-1} when e = 1 and x = s when e = -1
        Word s(rot.begin() + 1, rot.end());
        Word value = rot.front().exp > 0 ? inverse(s) : s;
        std::vector<Word> rels;
        for (std::size_t rj = 0; rj < p.relators.size(); ++rj) {
          if (rj == ri) continue;
          Word out;
          for (const auto& l : p.relators[rj]) {
            if (l.gen != x) {
              out.push_back(l);
              continue;
            }
            Word sub = l.exp > 0 ? value : inverse(value);
            out.insert(out.end(), sub.begin(), sub.end());
          }
          rels.push_back(cyclic_reduce(out));
        }
        for (auto& w : rels)
          for (auto& l : w)
            if (l.gen > x) --l.gen;
        p.generators.erase(p.generators.begin() + x);
        p.relators.clear();
        for (auto& w : rels)
          if (!w.empty()) p.relators.push_back(std::move(w));
        changed = true;
        break;
      }
    }
    if (!changed) break;
  }
  return p;
}

}  // namespace pfan
