#include "tracehom/chains.hpp"

#include <map>
#include <sstream>

#include "tracehom/error.hpp"

namespace tracehom {

std::string_view to_string(Coefficients c) {
  switch (c) {
    case Coefficients::Delta:
      return "delta";
    case Coefficients::Punctured:
      return "punctured";
    case Coefficients::Basepoint:
      return "basepoint";
  }
  return "?";
}

std::optional<Coefficients> parse_coefficients(std::string_view name) {
  if (name == "delta") return Coefficients::Delta;
  if (name == "punctured") return Coefficients::Punctured;
  if (name == "basepoint") return Coefficients::Basepoint;
  return std::nullopt;
}

int coefficient_rank(const PointedMSet& m, Coefficients c, Point x) {
  switch (c) {
    case Coefficients::Delta:
      return 1;
    case Coefficients::Punctured:
      return m.is_basepoint(x) ? 0 : 1;
    case Coefficients::Basepoint:
      return m.is_basepoint(x) ? 1 : 0;
  }
  return 0;
}

int morphism_unit(const PointedMSet& m, Coefficients c, Point x, GeneratorIndex e) {
  // A map into or out of a zero group is zero; between two copies of Z every
  // system used here acts by the identity.
  return coefficient_rank(m, c, x) * coefficient_rank(m, c, m.act(x, e));
}

std::vector<ChainBasisElement> enumerate_basis(const PointedMSet& m, Coefficients c, std::size_t n) {
  const std::vector<Clique> cliques = enumerate_cliques(m.alphabet(), n);
  std::vector<ChainBasisElement> basis;
  for (Point x = 0; x < m.point_count(); ++x) {
    if (coefficient_rank(m, c, x) == 0) continue;
    for (const auto& k : cliques) basis.push_back({x, k});
  }
  return basis;
}

namespace {

IntegerMatrix boundary_between(const PointedMSet& m, Coefficients c, const std::vector<ChainBasisElement>& source,
                               const std::vector<ChainBasisElement>& target) {
  std::map<ChainBasisElement, std::size_t> row_of;
  for (std::size_t i = 0; i < target.size(); ++i) row_of.emplace(target[i], i);

  IntegerMatrix d(target.size(), source.size());
  for (std::size_t col = 0; col < source.size(); ++col) {
    const auto& [x, clique] = source[col];
    for (std::size_t pos = 0; pos < clique.size(); ++pos) {
      // s = pos + 1 in the alternating sum
      const long sign = (pos % 2 == 0) ? -1 : 1;
      const GeneratorIndex e = clique.members[pos];
      Clique face = clique.without(pos);
      if (morphism_unit(m, c, x, e) != 0) {
        d.add(row_of.at({m.act(x, e), face}), col, sign);
      }
      d.add(row_of.at({x, std::move(face)}), col, -sign);
    }
  }
  return d;
}

}  // namespace

IntegerMatrix boundary_matrix(const PointedMSet& m, Coefficients c, std::size_t n) {
  if (n == 0) return IntegerMatrix(0, enumerate_basis(m, c, 0).size());
  return boundary_between(m, c, enumerate_basis(m, c, n), enumerate_basis(m, c, n - 1));
}

IntegerMatrix ChainComplex::boundary(std::size_t n) const {
  if (n < boundaries.size()) return boundaries[n];
  return IntegerMatrix(dimension(n - 1), dimension(n));
}

ChainComplex build_complex(const PointedMSet& m, Coefficients c) {
  ChainComplex complex;
  const std::size_t omega = max_clique_size(m.alphabet());
  for (std::size_t n = 0; n <= omega; ++n) complex.bases.push_back(enumerate_basis(m, c, n));

  complex.boundaries.emplace_back(0, complex.bases[0].size());
  for (std::size_t n = 1; n <= omega; ++n) {
    complex.boundaries.push_back(boundary_between(m, c, complex.bases[n], complex.bases[n - 1]));
  }
  for (std::size_t n = 1; n < omega; ++n) {
    if (!(complex.boundaries[n] * complex.boundaries[n + 1]).is_zero()) {
      std::ostringstream msg;
      msg << "d_" << n << " d_" << n + 1 << " != 0";
      throw NotAComplex(msg.str());
    }
  }
  return complex;
}

std::vector<AbelianGroup> homology(const ChainComplex& complex) {
  std::vector<AbelianGroup> groups;
  for (std::size_t n = 0; n <= complex.top_degree(); ++n) {
    groups.push_back(homology_of_pair(complex.boundary(n), complex.boundary(n + 1)));
  }
  return groups;
}

std::vector<AbelianGroup> homology(const PointedMSet& m, Coefficients c) { return homology(build_complex(m, c)); }

}  // namespace tracehom
