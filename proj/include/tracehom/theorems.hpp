#pragma once

// Degree-by-degree verification of the decomposition results for pointed
// M(E, I)-sets: splitting off the basepoint, the (n+1)-fold power for
// rooted-tree full actions, the reduced-homology identification for X_0,
// and the chain/fan pair with equal homology.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tracehom/chains.hpp"
#include "tracehom/intlinalg.hpp"
#include "tracehom/mset.hpp"
#include "tracehom/trace_monoid.hpp"

namespace tracehom {

/// Equal free ranks and equal multisets of prime-power torsion orders.
bool groups_isomorphic(const AbelianGroup& a, const AbelianGroup& b);

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

/// a + a + ... (copies times); copies = 0 gives the zero group.
AbelianGroup power(const AbelianGroup& a, std::size_t copies);

enum class Verdict { Holds, Fails, NotApplicable };

std::string_view to_string(Verdict v);

struct DegreeComparison {
  std::size_t degree = 0;
  AbelianGroup lhs;
  AbelianGroup rhs;
  bool equal = false;
};

struct VerificationReport {
  std::string claim;
  Verdict verdict = Verdict::NotApplicable;
  std::vector<DegreeComparison> degrees;
  /// First mismatch, or why the claim does not apply.
  std::optional<std::string> witness;

  bool holds() const { return verdict == Verdict::Holds; }
};

/// H_s(delta) = H_s(punctured) + Z^{p_s} for s = 1..max_degree. Applies to
/// every pointed set. max_degree defaults to the maximal clique size.
VerificationReport check_lemma_split(const PointedMSet& m, std::optional<std::size_t> max_degree = {});

/// H_s(punctured) = H_s(X_0; punctured)^{n+1} when the action is full and the
/// reduced transition graph is a tree rooted at *.
VerificationReport check_prop_power(const PointedMSet& m, std::optional<std::size_t> max_degree = {});

/// H_s(delta) = (reduced H_{s-1} of the clique complex)^{n+1} + Z^{p_s}
/// under the same conditions; the right side comes from schema.hpp.
VerificationReport check_theorem_main(const PointedMSet& m, std::optional<std::size_t> max_degree = {});

/// H_n(X_0; punctured) = reduced H_{n-1} of the clique complex, n >= 1.
VerificationReport check_theorem_aug(const IndependenceAlphabet& alpha, std::optional<std::size_t> max_degree = {});

struct CounterexampleReport {
  PointedMSet chain;  // x0 -> x1 -> *
  PointedMSet fan;    // x0 -> *, x1 -> *
  std::optional<Bijection> isomorphism;
  std::vector<AbelianGroup> chain_delta, fan_delta;
  std::vector<AbelianGroup> chain_punctured, fan_punctured;
  bool homology_equal = false;

  bool non_isomorphic() const { return !isomorphism.has_value(); }
  /// Two non-isomorphic sets with isomorphic homology.
  bool confirmed() const { return non_isomorphic() && homology_equal; }
};

/// Builds the chain and fan full actions over `alpha` and compares them.
/// With an empty alphabet both are three fixed points and the report shows
/// them isomorphic.
CounterexampleReport counterexample_report(const IndependenceAlphabet& alpha,
                                           std::optional<std::size_t> max_degree = {});

}  // namespace tracehom
