#pragma once

// The chain complex computing the homology of a pointed M(E, I)-set with
// coefficients in a rank-0/1 system: C_n has one Z summand per pair
// (x, e1 < ... < en) of a point with nonzero coefficient group and an
// n-clique of commuting generators, and
//
//   d(x, K) = sum_s (-1)^s [ F(x -e_s-> x.e_s) (x.e_s, K - e_s) - (x, K - e_s) ].

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tracehom/intlinalg.hpp"
#include "tracehom/mset.hpp"
#include "tracehom/trace_monoid.hpp"

namespace tracehom {

enum class Coefficients {
  Delta,      // Z everywhere, identities on morphisms
  Punctured,  // Z off the basepoint, 0 at *
  Basepoint,  // Z at * only
};

std::string_view to_string(Coefficients c);
std::optional<Coefficients> parse_coefficients(std::string_view name);

/// Rank (0 or 1) of the coefficient group at x.
int coefficient_rank(const PointedMSet& m, Coefficients c, Point x);

/// The integer by which the coefficient system acts along x -e-> x.e
/// (0 or 1). Zero whenever either end has rank 0.
int morphism_unit(const PointedMSet& m, Coefficients c, Point x, GeneratorIndex e);

struct ChainBasisElement {
  Point element;
  Clique clique;

  friend auto operator<=>(const ChainBasisElement&, const ChainBasisElement&) = default;
};

/// Basis of C_n ordered by element, then clique.
std::vector<ChainBasisElement> enumerate_basis(const PointedMSet& m, Coefficients c, std::size_t n);

/// d_n : C_n -> C_{n-1} for n >= 1.
IntegerMatrix boundary_matrix(const PointedMSet& m, Coefficients c, std::size_t n);

struct ChainComplex {
  /// bases[n] for n = 0..omega.
  std::vector<std::vector<ChainBasisElement>> bases;
  /// boundaries[n] : C_n -> C_{n-1}; boundaries[0] is the 0 x dim C_0 map.
  std::vector<IntegerMatrix> boundaries;

  std::size_t top_degree() const { return bases.empty() ? 0 : bases.size() - 1; }
  std::size_t dimension(std::size_t n) const { return n < bases.size() ? bases[n].size() : 0; }
  /// Zero map above the top degree.
  IntegerMatrix boundary(std::size_t n) const;
};

/// Bases and boundaries for degrees 0..max_clique_size. Throws NotAComplex if
/// some composite d_n d_{n+1} is nonzero.
ChainComplex build_complex(const PointedMSet& m, Coefficients c);

/// H_n for n = 0..top_degree().
std::vector<AbelianGroup> homology(const ChainComplex& complex);

/// H_n for n = 0..max_clique_size(alphabet).
std::vector<AbelianGroup> homology(const PointedMSet& m, Coefficients c);

}  // namespace tracehom
