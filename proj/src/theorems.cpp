#include "tracehom/theorems.hpp"

#include <algorithm>

#include "tracehom/schema.hpp"

namespace tracehom {

bool groups_isomorphic(const AbelianGroup& a, const AbelianGroup& b) {
  return a.free_rank() == b.free_rank() && a.primary_parts() == b.primary_parts();
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<Integer> torsion = a.torsion();
  torsion.insert(torsion.end(), b.torsion().begin(), b.torsion().end());
  return AbelianGroup(a.free_rank() + b.free_rank(), std::move(torsion));
}

AbelianGroup power(const AbelianGroup& a, std::size_t copies) {
  AbelianGroup out;
  for (std::size_t i = 0; i < copies; ++i) out = direct_sum(out, a);
  return out;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "PASS";
    case Verdict::Fails:
      return "FAIL";
    case Verdict::NotApplicable:
      return "N-A";
  }
  return "?";
}

namespace {

const AbelianGroup& in_degree(const std::vector<AbelianGroup>& groups, std::size_t n) {
  static const AbelianGroup zero;
  return n < groups.size() ? groups[n] : zero;
}

std::size_t clique_count(const std::vector<std::size_t>& counts, std::size_t s) {
  return s < counts.size() ? counts[s] : 0;
}

std::size_t resolve_max(const IndependenceAlphabet& alpha, std::optional<std::size_t> max_degree) {
  return max_degree.value_or(max_clique_size(alpha));
}

// Fills verdict and witness from the per-degree comparisons.
template <typename Lhs, typename Rhs>
VerificationReport compare_degrees(std::string claim, std::size_t first, std::size_t last, Lhs lhs, Rhs rhs) {
  VerificationReport report;
  report.claim = std::move(claim);
  report.verdict = Verdict::Holds;
  for (std::size_t s = first; s <= last; ++s) {
    DegreeComparison row{s, lhs(s), rhs(s), false};
    row.equal = groups_isomorphic(row.lhs, row.rhs);
    if (!row.equal && report.verdict == Verdict::Holds) {
      report.verdict = Verdict::Fails;
      report.witness = "degree " + std::to_string(s) + ": " + row.lhs.to_string() + " vs " + row.rhs.to_string();
    }
    report.degrees.push_back(std::move(row));
  }
  return report;
}

VerificationReport not_applicable(std::string claim, const ConditionsReport& conditions) {
  VerificationReport report;
  report.claim = std::move(claim);
  report.verdict = Verdict::NotApplicable;
  std::string why;
  for (const auto& v : conditions.violations) {
    if (!why.empty()) why += "; ";
    why += v;
  }
  report.witness = why;
  return report;
}

}  // namespace

VerificationReport check_lemma_split(const PointedMSet& m, std::optional<std::size_t> max_degree) {
  const auto delta = homology(m, Coefficients::Delta);
  const auto punctured = homology(m, Coefficients::Punctured);
  const auto p = clique_counts(m.alphabet());
  return compare_degrees(
      "split", 1, resolve_max(m.alphabet(), max_degree), [&](std::size_t s) { return in_degree(delta, s); },
      [&](std::size_t s) { return direct_sum(in_degree(punctured, s), AbelianGroup::free(clique_count(p, s))); });
}

VerificationReport check_prop_power(const PointedMSet& m, std::optional<std::size_t> max_degree) {
  const auto conditions = check_conditions(m);
  if (!conditions.satisfied()) return not_applicable("power", conditions);

  const auto punctured = homology(m, Coefficients::Punctured);
  const auto reference = homology(point_to_basepoint(m.alphabet()), Coefficients::Punctured);
  const std::size_t copies = m.element_count();
  return compare_degrees(
      "power", 1, resolve_max(m.alphabet(), max_degree), [&](std::size_t s) { return in_degree(punctured, s); },
      [&](std::size_t s) { return power(in_degree(reference, s), copies); });
}

VerificationReport check_theorem_main(const PointedMSet& m, std::optional<std::size_t> max_degree) {
  const auto conditions = check_conditions(m);
  if (!conditions.satisfied()) return not_applicable("main", conditions);

  const auto delta = homology(m, Coefficients::Delta);
  const auto reduced = reduced_homology(clique_complex(m.alphabet()));
  const auto p = clique_counts(m.alphabet());
  const std::size_t copies = m.element_count();
  return compare_degrees(
      "main", 1, resolve_max(m.alphabet(), max_degree), [&](std::size_t s) { return in_degree(delta, s); },
      [&](std::size_t s) {
        return direct_sum(power(in_degree(reduced, s - 1), copies), AbelianGroup::free(clique_count(p, s)));
      });
}

VerificationReport check_theorem_aug(const IndependenceAlphabet& alpha, std::optional<std::size_t> max_degree) {
  const auto punctured = homology(point_to_basepoint(alpha), Coefficients::Punctured);
  const auto reduced = reduced_homology(clique_complex(alpha));
  return compare_degrees(
      "aug", 1, resolve_max(alpha, max_degree), [&](std::size_t n) { return in_degree(punctured, n); },
      [&](std::size_t n) { return in_degree(reduced, n - 1); });
}

CounterexampleReport counterexample_report(const IndependenceAlphabet& alpha, std::optional<std::size_t> max_degree) {
  const std::string base(kBasepoint);
  CounterexampleReport report;
  report.chain = full_action_mset(alpha, {"x0", "x1"}, {"x1", base});
  report.fan = full_action_mset(alpha, {"x0", "x1"}, {base, base});
  report.isomorphism = iso_check(report.chain, report.fan);

  const std::size_t top = resolve_max(alpha, max_degree);
  auto truncated = [top](std::vector<AbelianGroup> groups) {
    groups.resize(top + 1);
    return groups;
  };
  report.chain_delta = truncated(homology(report.chain, Coefficients::Delta));
  report.fan_delta = truncated(homology(report.fan, Coefficients::Delta));
  report.chain_punctured = truncated(homology(report.chain, Coefficients::Punctured));
  report.fan_punctured = truncated(homology(report.fan, Coefficients::Punctured));

  auto same = [](const std::vector<AbelianGroup>& a, const std::vector<AbelianGroup>& b) {
    return std::equal(a.begin(), a.end(), b.begin(), b.end(), groups_isomorphic);
  };
  report.homology_equal =
      same(report.chain_delta, report.fan_delta) && same(report.chain_punctured, report.fan_punctured);
  return report;
}

}  // namespace tracehom
