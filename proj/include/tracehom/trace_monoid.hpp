#pragma once

// Independence alphabets (E, I) of free partially commutative monoids and
// their cliques of pairwise commuting generators.

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tracehom {

using GeneratorIndex = std::size_t;

/// Strictly increasing list of pairwise independent generators.
struct Clique {
  std::vector<GeneratorIndex> members;

  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
  /// The clique with the member at `position` removed.
  Clique without(std::size_t position) const;

  friend auto operator<=>(const Clique&, const Clique&) = default;
};

/// Unvalidated alphabet as read from input.
struct AlphabetDescription {
  std::vector<std::string> generators;
  std::vector<std::array<std::string, 2>> independence;
};

/// Generators in declaration order (which fixes e1 < e2 < ...) plus an
/// irreflexive symmetric independence relation.
class IndependenceAlphabet {
 public:
  IndependenceAlphabet() = default;

  std::size_t size() const { return generators_.size(); }
  bool empty() const { return generators_.empty(); }
  const std::vector<std::string>& generators() const { return generators_; }
  const std::string& name(GeneratorIndex g) const { return generators_.at(g); }
  std::optional<GeneratorIndex> find(std::string_view name) const;

  bool independent(GeneratorIndex a, GeneratorIndex b) const { return adjacency_.at(a).at(b); }
  /// Independent pairs (i, j) with i < j, in lexicographic order.
  std::vector<std::pair<GeneratorIndex, GeneratorIndex>> pairs() const;

  /// Same generator names and the same relation, ignoring declaration order.
  bool same_relation(const IndependenceAlphabet& other) const;

  AlphabetDescription describe() const;

 private:
  friend IndependenceAlphabet validate_alphabet(const AlphabetDescription& raw);

  std::vector<std::string> generators_;
  std::vector<std::vector<bool>> adjacency_;
};

/// Throws ValidationError on duplicate generators, reflexive pairs or pairs
/// naming undeclared generators. Repeated or reversed pairs collapse.
IndependenceAlphabet validate_alphabet(const AlphabetDescription& raw);

/// All size-k cliques, each sorted, in lexicographic order of member indices.
/// k = 0 yields the single empty clique.
std::vector<Clique> enumerate_cliques(const IndependenceAlphabet& alpha, std::size_t k);

/// p_0, p_1, ..., p_omega where p_s counts s-cliques; p_0 = 1.
std::vector<std::size_t> clique_counts(const IndependenceAlphabet& alpha);

std::size_t max_clique_size(const IndependenceAlphabet& alpha);

}  // namespace tracehom
