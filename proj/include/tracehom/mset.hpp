#pragma once

// Finite pointed sets with a right action of M(E, I).

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tracehom/trace_monoid.hpp"

namespace tracehom {

/// Reserved name of the basepoint.
inline constexpr std::string_view kBasepoint = "*";

/// Index of an element of X u {*}. Elements are 0..n-1 in declaration
/// order, the basepoint is n.
using Point = std::size_t;

/// Unvalidated action table: action[element][generator] = target. A missing
/// "*" row means the basepoint is fixed by every generator.
struct MSetDescription {
  std::vector<std::string> elements;
  std::map<std::string, std::map<std::string, std::string>> action;
};

class PointedMSet {
 public:
  const IndependenceAlphabet& alphabet() const { return alphabet_; }

  std::size_t element_count() const { return elements_.size(); }
  std::size_t point_count() const { return elements_.size() + 1; }
  Point basepoint() const { return elements_.size(); }
  bool is_basepoint(Point p) const { return p == basepoint(); }

  const std::vector<std::string>& elements() const { return elements_; }
  std::string name(Point p) const;
  std::optional<Point> find(std::string_view name) const;

  Point act(Point p, GeneratorIndex g) const { return table_.at(p).at(g); }

  MSetDescription describe() const;

 private:
  friend PointedMSet validate_mset(const MSetDescription& raw, const IndependenceAlphabet& alpha);

  IndependenceAlphabet alphabet_;
  std::vector<std::string> elements_;
  std::vector<std::vector<Point>> table_;  // [point][generator]
};

/// Checks totality, basepoint fixity and (x.a).b = (x.b).a for every
/// independent pair. Throws ValidationError listing every violation.
PointedMSet validate_mset(const MSetDescription& raw, const IndependenceAlphabet& alpha);

/// Full action where every generator sends elements[i] to successors[i]
/// ("*" allowed). Always commutation-compatible.
PointedMSet full_action_mset(const IndependenceAlphabet& alpha, std::vector<std::string> elements,
                             const std::vector<std::string>& successors);

/// X_0 = {x0, *} with x0.e = * for every generator.
PointedMSet point_to_basepoint(const IndependenceAlphabet& alpha);

/// The one-point set {*}.
PointedMSet one_point_set(const IndependenceAlphabet& alpha);

/// Left-to-right action of a word; the empty word is the identity.
Point apply_word(const PointedMSet& m, Point x, std::span<const GeneratorIndex> word);
/// Name-based variant; throws ValidationError on unknown names.
std::string apply_word(const PointedMSet& m, std::string_view x, const std::vector<std::string>& word);

/// x.e = x.e' for every point x and all generators e, e'.
bool is_full_action(const PointedMSet& m);

struct TransitionGraph {
  std::size_t node_count = 0;  // X u {*}
  Point basepoint = 0;
  bool reduced = true;
  /// (p, q) present iff p.e = q for every generator e. Sorted.
  std::vector<std::pair<Point, Point>> edges;
};

/// reduced = true drops the basepoint self-loop.
TransitionGraph transition_graph(const PointedMSet& m, bool reduced);

/// Every element has exactly one outgoing edge, * has none, and following
/// successors from any element reaches *.
bool is_rooted_tree_at_basepoint(const TransitionGraph& g);

struct ConditionsReport {
  bool full = false;
  bool tree = false;
  std::vector<std::string> violations;

  bool satisfied() const { return full && tree; }
};

/// The full-action condition and the rooted-tree condition with witnesses.
ConditionsReport check_conditions(const PointedMSet& m);

/// bijection[p] is the image in the second set of point p of the first.
using Bijection = std::vector<Point>;

/// Exhaustive search for a basepoint-preserving equivariant bijection.
/// Generators are matched by name; throws ValidationError if the alphabets
/// differ. Returns nullopt when no bijection exists.
std::optional<Bijection> iso_check(const PointedMSet& m1, const PointedMSet& m2);

}  // namespace tracehom
