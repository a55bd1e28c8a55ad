#include "tracehom/mset.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <tuple>

#include "tracehom/error.hpp"

namespace tracehom {

namespace {

constexpr Point kUnassigned = std::numeric_limits<Point>::max();

std::string cell(std::string_view x, std::string_view e) {
  return "(" + std::string(x) + ", " + std::string(e) + ")";
}

}  // namespace

std::string PointedMSet::name(Point p) const {
  if (is_basepoint(p)) return std::string(kBasepoint);
  return elements_.at(p);
}

std::optional<Point> PointedMSet::find(std::string_view name) const {
  if (name == kBasepoint) return basepoint();
  auto it = std::find(elements_.begin(), elements_.end(), name);
  if (it == elements_.end()) return std::nullopt;
  return static_cast<Point>(it - elements_.begin());
}

MSetDescription PointedMSet::describe() const {
  MSetDescription out;
  out.elements = elements_;
  for (Point p = 0; p < point_count(); ++p) {
    auto& row = out.action[name(p)];
    for (GeneratorIndex g = 0; g < alphabet_.size(); ++g) row[alphabet_.name(g)] = name(act(p, g));
  }
  return out;
}

PointedMSet validate_mset(const MSetDescription& raw, const IndependenceAlphabet& alpha) {
  std::vector<std::string> problems;

  PointedMSet m;
  m.alphabet_ = alpha;
  m.elements_ = raw.elements;

  std::set<std::string> seen;
  for (const auto& x : raw.elements) {
    if (x.empty()) problems.push_back("element names must be nonempty");
    if (x == kBasepoint) problems.push_back("'*' is reserved for the basepoint and cannot be listed as an element");
    if (!seen.insert(x).second) problems.push_back("duplicate element '" + x + "'");
  }
  if (!problems.empty()) throw ValidationError(std::move(problems));

  for (const auto& [x, row] : raw.action) {
    if (!m.find(x)) problems.push_back("action row for unknown element '" + x + "'");
    for (const auto& [e, target] : row) {
      if (!alpha.find(e)) problems.push_back("action " + cell(x, e) + " names unknown generator '" + e + "'");
      if (!m.find(target)) problems.push_back("action " + cell(x, e) + " targets unknown element '" + target + "'");
    }
  }

  const std::size_t n = m.point_count();
  m.table_.assign(n, std::vector<Point>(alpha.size(), kUnassigned));
  for (Point p = 0; p < n; ++p) {
    const std::string x = m.name(p);
    auto row = raw.action.find(x);
    if (row == raw.action.end() && m.is_basepoint(p)) {
      std::fill(m.table_[p].begin(), m.table_[p].end(), m.basepoint());
      continue;
    }
    for (GeneratorIndex g = 0; g < alpha.size(); ++g) {
      const std::string& e = alpha.name(g);
      if (row == raw.action.end() || !row->second.contains(e)) {
        problems.push_back("missing action entry " + cell(x, e));
        continue;
      }
      if (auto target = m.find(row->second.at(e))) m.table_[p][g] = *target;
    }
  }

  for (GeneratorIndex g = 0; g < alpha.size(); ++g) {
    Point image = m.table_[m.basepoint()][g];
    if (image != kUnassigned && image != m.basepoint()) {
      problems.push_back("basepoint moved: * . " + alpha.name(g) + " = " + m.name(image));
    }
  }
  if (!problems.empty()) throw ValidationError(std::move(problems));

  for (auto [a, b] : alpha.pairs()) {
    for (Point p = 0; p < n; ++p) {
      Point ab = m.table_[m.table_[p][a]][b];
      Point ba = m.table_[m.table_[p][b]][a];
      if (ab != ba) {
        problems.push_back("commutation violation at " + m.name(p) + " for independent pair (" + alpha.name(a) +
                           ", " + alpha.name(b) + "): (x." + alpha.name(a) + ")." + alpha.name(b) + " = " +
                           m.name(ab) + " but (x." + alpha.name(b) + ")." + alpha.name(a) + " = " + m.name(ba));
      }
    }
  }
  if (!problems.empty()) throw ValidationError(std::move(problems));
  return m;
}

PointedMSet full_action_mset(const IndependenceAlphabet& alpha, std::vector<std::string> elements,
                             const std::vector<std::string>& successors) {
  if (successors.size() != elements.size()) {
    throw ValidationError("full action needs one successor per element");
  }
  MSetDescription raw;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    auto& row = raw.action[elements[i]];
    for (const auto& e : alpha.generators()) row[e] = successors[i];
  }
  raw.elements = std::move(elements);
  return validate_mset(raw, alpha);
}

PointedMSet point_to_basepoint(const IndependenceAlphabet& alpha) {
  return full_action_mset(alpha, {"x0"}, {std::string(kBasepoint)});
}

PointedMSet one_point_set(const IndependenceAlphabet& alpha) { return validate_mset({}, alpha); }

Point apply_word(const PointedMSet& m, Point x, std::span<const GeneratorIndex> word) {
  for (GeneratorIndex g : word) x = m.act(x, g);
  return x;
}

std::string apply_word(const PointedMSet& m, std::string_view x, const std::vector<std::string>& word) {
  auto start = m.find(x);
  if (!start) throw ValidationError("unknown element '" + std::string(x) + "'");
  std::vector<GeneratorIndex> letters;
  for (const auto& e : word) {
    auto g = m.alphabet().find(e);
    if (!g) throw ValidationError("unknown generator '" + e + "'");
    letters.push_back(*g);
  }
  return m.name(apply_word(m, *start, letters));
}

bool is_full_action(const PointedMSet& m) {
  for (Point p = 0; p < m.point_count(); ++p) {
    for (GeneratorIndex g = 1; g < m.alphabet().size(); ++g) {
      if (m.act(p, g) != m.act(p, 0)) return false;
    }
  }
  return true;
}

TransitionGraph transition_graph(const PointedMSet& m, bool reduced) {
  TransitionGraph graph;
  graph.node_count = m.point_count();
  graph.basepoint = m.basepoint();
  graph.reduced = reduced;
  for (Point p = 0; p < m.point_count(); ++p) {
    for (Point q = 0; q < m.point_count(); ++q) {
      if (reduced && p == m.basepoint() && q == m.basepoint()) continue;
      bool all_agree = true;
      for (GeneratorIndex g = 0; g < m.alphabet().size() && all_agree; ++g) all_agree = m.act(p, g) == q;
      if (all_agree) graph.edges.emplace_back(p, q);
    }
  }
  return graph;
}

bool is_rooted_tree_at_basepoint(const TransitionGraph& g) {
  std::vector<Point> successor(g.node_count, kUnassigned);
  std::vector<std::size_t> out_degree(g.node_count, 0);
  for (auto [p, q] : g.edges) {
    ++out_degree[p];
    successor[p] = q;
  }
  if (out_degree[g.basepoint] != 0) return false;
  for (Point p = 0; p < g.node_count; ++p) {
    if (p != g.basepoint && out_degree[p] != 1) return false;
  }
  for (Point p = 0; p < g.node_count; ++p) {
    Point at = p;
    for (std::size_t steps = 0; at != g.basepoint; ++steps) {
      if (steps >= g.node_count) return false;
      at = successor[at];
    }
  }
  return true;
}

ConditionsReport check_conditions(const PointedMSet& m) {
  ConditionsReport report;
  const auto& alpha = m.alphabet();

  report.full = true;
  for (Point p = 0; p < m.point_count(); ++p) {
    for (GeneratorIndex g = 1; g < alpha.size(); ++g) {
      if (m.act(p, g) != m.act(p, 0)) {
        report.full = false;
        report.violations.push_back("not full: " + m.name(p) + "." + alpha.name(0) + " = " + m.name(m.act(p, 0)) +
                                    " but " + m.name(p) + "." + alpha.name(g) + " = " + m.name(m.act(p, g)));
        break;
      }
    }
  }

  const TransitionGraph graph = transition_graph(m, true);
  report.tree = is_rooted_tree_at_basepoint(graph);
  if (!report.tree) {
    std::vector<std::size_t> out_degree(graph.node_count, 0);
    for (auto [p, q] : graph.edges) ++out_degree[p];
    bool degrees_ok = true;
    for (Point p = 0; p < graph.node_count; ++p) {
      const std::size_t expected = m.is_basepoint(p) ? 0 : 1;
      if (out_degree[p] != expected) {
        degrees_ok = false;
        report.violations.push_back("not a rooted tree: " + m.name(p) + " has " + std::to_string(out_degree[p]) +
                                    " outgoing edges");
      }
    }
    if (degrees_ok) report.violations.push_back("not a rooted tree: successors do not all reach *");
  }
  return report;
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const PointedMSet& m1, const PointedMSet& m2) : m1_(m1), m2_(m2) {
    const auto& a1 = m1.alphabet();
    for (GeneratorIndex g = 0; g < a1.size(); ++g) generator_map_.push_back(*m2.alphabet().find(a1.name(g)));
    signature1_ = signatures(m1, [](GeneratorIndex g) { return g; });
    signature2_ = signatures(m2, [&](GeneratorIndex g) { return generator_map_[g]; });
    phi_.assign(m1.point_count(), kUnassigned);
    used_.assign(m2.point_count(), false);
  }

  std::optional<Bijection> run() {
    std::vector<Point> trail;
    if (!assign(m1_.basepoint(), m2_.basepoint(), trail)) return std::nullopt;
    if (!search()) return std::nullopt;
    return phi_;
  }

 private:
  // Per generator: (image is *, image is self, number of preimages).
  using Signature = std::vector<std::tuple<bool, bool, std::size_t>>;

  template <typename GenOf>
  static std::vector<Signature> signatures(const PointedMSet& m, GenOf gen_of) {
    const std::size_t gens = m.alphabet().size();
    std::vector<Signature> out(m.point_count(), Signature(gens));
    for (GeneratorIndex i = 0; i < gens; ++i) {
      GeneratorIndex g = gen_of(i);
      for (Point p = 0; p < m.point_count(); ++p) {
        Point q = m.act(p, g);
        std::get<0>(out[p][i]) = m.is_basepoint(q);
        std::get<1>(out[p][i]) = q == p;
        ++std::get<2>(out[q][i]);
      }
    }
    return out;
  }

  // Sets phi(p) = q and everything forced by equivariance.
  bool assign(Point p, Point q, std::vector<Point>& trail) {
    std::vector<std::pair<Point, Point>> pending{{p, q}};
    while (!pending.empty()) {
      auto [x, y] = pending.back();
      pending.pop_back();
      if (phi_[x] != kUnassigned) {
        if (phi_[x] != y) return false;
        continue;
      }
      if (used_[y] || signature1_[x] != signature2_[y]) return false;
      phi_[x] = y;
      used_[y] = true;
      trail.push_back(x);
      for (GeneratorIndex g = 0; g < generator_map_.size(); ++g) {
        pending.emplace_back(m1_.act(x, g), m2_.act(y, generator_map_[g]));
      }
    }
    return true;
  }

  void undo(std::vector<Point>& trail) {
    for (Point x : trail) {
      used_[phi_[x]] = false;
      phi_[x] = kUnassigned;
    }
    trail.clear();
  }

  bool search() {
    auto next = std::find(phi_.begin(), phi_.end(), kUnassigned);
    if (next == phi_.end()) return true;
    const Point p = static_cast<Point>(next - phi_.begin());
    for (Point q = 0; q < m2_.point_count(); ++q) {
      if (used_[q]) continue;
      std::vector<Point> trail;
      if (assign(p, q, trail) && search()) return true;
      undo(trail);
    }
    return false;
  }

  const PointedMSet& m1_;
  const PointedMSet& m2_;
  std::vector<GeneratorIndex> generator_map_;
  std::vector<Signature> signature1_;
  std::vector<Signature> signature2_;
  std::vector<Point> phi_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<Bijection> iso_check(const PointedMSet& m1, const PointedMSet& m2) {
  if (!m1.alphabet().same_relation(m2.alphabet())) {
    throw ValidationError("iso_check needs both sets over the same independence alphabet");
  }
  if (m1.point_count() != m2.point_count()) return std::nullopt;
  return IsoSearch(m1, m2).run();
}

}  // namespace tracehom
