#pragma once

// Finitely presented groups: words, free reduction, abelianization.

#include <optional>
#include <string>
#include <vector>

#include "pfan/linalg.hpp"

namespace pfan {

struct Letter {
  int gen;
  int exp;  ///< +1 or -1
  bool operator==(const Letter&) const = default;
  auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

Word free_reduce(const Word& w);
/// Free reduction followed by removal of inverse letters at the two ends.
Word cyclic_reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);

struct Generator {
  std::string name;
  std::vector<IntVector> rays;  ///< rays of the cone that names the generator, if any
};

struct Presentation {
  std::vector<Generator> generators;
  std::vector<Word> relators;

  std::optional<int> find(const std::string& name) const;
  /// Sorted, freely reduced, empty words dropped.
  std::vector<Word> normalized_relators() const;
  bool same_up_to_relator_multiset(const Presentation& other) const;
};

/// `gens: a b ; rels: a b -a -b; ...` with `-x` for an inverse letter.
std::string to_text(const Presentation& p);
Presentation parse_text(const std::string& text);
std::string to_gap(const Presentation& p);
std::string word_to_text(const Presentation& p, const Word& w);

struct Abelianization {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  ///< invariant factors greater than one, ascending by divisibility
  bool operator==(const Abelianization&) const = default;
};

/// Diagonal of the Smith normal form (nonzero entries, ascending by divisibility).
std::vector<Integer> smith_diagonal(std::vector<std::vector<Integer>> m);
Abelianization abelianization(const Presentation& p);

/// Exponent-sum vector of a word.
std::vector<Integer> exponent_sums(const Word& w, std::size_t num_generators);

/// True iff w maps to a nonzero element of the abelianization of p.
bool nontrivial_in_abelianization(const Presentation& p, const Word& w);

/// True iff w is shown trivial by free reduction and at most `depth` relator substitutions.
bool trivial_by_rewriting(const Presentation& p, const Word& w, int depth = 4, std::size_t state_cap = 200000);

/// For a one-relator presentation: true iff w is certified nontrivial because its cyclic reduction
/// omits a generator occurring in the cyclically reduced relator (free subgroup by the Freiheitssatz).
bool nontrivial_by_freiheitssatz(const Presentation& p, const Word& w);

/// Repeatedly removes a generator occurring exactly once in some relator.
Presentation eliminate_single_occurrences(const Presentation& p);

}  // namespace pfan
