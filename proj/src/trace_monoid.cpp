#include "tracehom/trace_monoid.hpp"

#include <algorithm>
#include <set>

#include "tracehom/error.hpp"

namespace tracehom {

Clique Clique::without(std::size_t position) const {
  Clique out;
  out.members.reserve(members.size() - 1);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i != position) out.members.push_back(members[i]);
  }
  return out;
}

std::optional<GeneratorIndex> IndependenceAlphabet::find(std::string_view name) const {
  auto it = std::find(generators_.begin(), generators_.end(), name);
  if (it == generators_.end()) return std::nullopt;
  return static_cast<GeneratorIndex>(it - generators_.begin());
}

std::vector<std::pair<GeneratorIndex, GeneratorIndex>> IndependenceAlphabet::pairs() const {
  std::vector<std::pair<GeneratorIndex, GeneratorIndex>> out;
  for (GeneratorIndex i = 0; i < size(); ++i) {
    for (GeneratorIndex j = i + 1; j < size(); ++j) {
      if (adjacency_[i][j]) out.emplace_back(i, j);
    }
  }
  return out;
}

bool IndependenceAlphabet::same_relation(const IndependenceAlphabet& other) const {
  if (size() != other.size()) return false;
  std::vector<GeneratorIndex> to_other(size());
  for (GeneratorIndex g = 0; g < size(); ++g) {
    auto match = other.find(generators_[g]);
    if (!match) return false;
    to_other[g] = *match;
  }
  for (GeneratorIndex i = 0; i < size(); ++i) {
    for (GeneratorIndex j = 0; j < size(); ++j) {
      if (adjacency_[i][j] != other.adjacency_[to_other[i]][to_other[j]]) return false;
    }
  }
  return true;
}

AlphabetDescription IndependenceAlphabet::describe() const {
  AlphabetDescription out{generators_, {}};
  for (auto [i, j] : pairs()) out.independence.push_back({generators_[i], generators_[j]});
  return out;
}

IndependenceAlphabet validate_alphabet(const AlphabetDescription& raw) {
  std::vector<std::string> problems;
  std::set<std::string> seen;
  for (const auto& g : raw.generators) {
    if (g.empty()) problems.push_back("generator names must be nonempty");
    if (!seen.insert(g).second) problems.push_back("duplicate generator '" + g + "'");
  }

  IndependenceAlphabet alpha;
  alpha.generators_ = raw.generators;
  alpha.adjacency_.assign(raw.generators.size(), std::vector<bool>(raw.generators.size(), false));

  for (const auto& [a, b] : raw.independence) {
    auto ia = alpha.find(a);
    auto ib = alpha.find(b);
    if (!ia) problems.push_back("independence pair (" + a + ", " + b + ") names unknown generator '" + a + "'");
    if (!ib && b != a) {
      problems.push_back("independence pair (" + a + ", " + b + ") names unknown generator '" + b + "'");
    }
    if (a == b) {
      problems.push_back("reflexive independence pair (" + a + ", " + a + ")");
      continue;
    }
    if (ia && ib) {
      alpha.adjacency_[*ia][*ib] = true;
      alpha.adjacency_[*ib][*ia] = true;
    }
  }
  if (!problems.empty()) throw ValidationError(std::move(problems));
  return alpha;
}

namespace {

// Ordered backtracking: extend only with larger generators independent of
// every member so far. Visits cliques in lexicographic order.
template <typename Visit>
void extend_cliques(const IndependenceAlphabet& alpha, std::vector<GeneratorIndex>& current,
                    GeneratorIndex next, std::size_t max_size, Visit&& visit) {
  visit(current);
  if (current.size() == max_size) return;
  for (GeneratorIndex g = next; g < alpha.size(); ++g) {
    bool compatible = std::all_of(current.begin(), current.end(),
                                  [&](GeneratorIndex m) { return alpha.independent(m, g); });
    if (!compatible) continue;
    current.push_back(g);
    extend_cliques(alpha, current, g + 1, max_size, visit);
    current.pop_back();
  }
}

}  // namespace

std::vector<Clique> enumerate_cliques(const IndependenceAlphabet& alpha, std::size_t k) {
  std::vector<Clique> out;
  std::vector<GeneratorIndex> current;
  extend_cliques(alpha, current, 0, k, [&](const std::vector<GeneratorIndex>& c) {
    if (c.size() == k) out.push_back(Clique{c});
  });
  return out;
}

std::vector<std::size_t> clique_counts(const IndependenceAlphabet& alpha) {
  std::vector<std::size_t> counts;
  std::vector<GeneratorIndex> current;
  extend_cliques(alpha, current, 0, alpha.size(), [&](const std::vector<GeneratorIndex>& c) {
    if (counts.size() <= c.size()) counts.resize(c.size() + 1, 0);
    ++counts[c.size()];
  });
  return counts;
}

std::size_t max_clique_size(const IndependenceAlphabet& alpha) {
  return clique_counts(alpha).size() - 1;
}

}  // namespace tracehom
