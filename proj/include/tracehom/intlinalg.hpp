#pragma once

// Exact integer linear algebra: sparse integer matrices, Smith normal form,
// finitely generated abelian groups and the homology of a pair of
// consecutive boundary maps.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tracehom {

using Integer = mpz_class;

/// Sparse integer matrix. Only nonzero entries are stored.
class IntegerMatrix {
 public:
  using Index = std::size_t;
  using Entries = std::map<std::pair<Index, Index>, Integer>;

  IntegerMatrix() = default;
  IntegerMatrix(Index rows, Index cols) : rows_(rows), cols_(cols) {}

  /// Dense construction, mostly for tests: rows of equal length.
  static IntegerMatrix from_rows(const std::vector<std::vector<long>>& rows);
  static IntegerMatrix identity(Index n);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }

  Integer at(Index r, Index c) const;
  void set(Index r, Index c, const Integer& value);
  void add(Index r, Index c, const Integer& value);

  const Entries& entries() const { return entries_; }
  std::size_t nonzero_count() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  std::vector<std::vector<Integer>> to_dense() const;

  /// Matrix product; throws DimensionMismatch when cols() != rhs.rows().
  IntegerMatrix operator*(const IntegerMatrix& rhs) const;

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  void check_bounds(Index r, Index c) const;

  Index rows_ = 0;
  Index cols_ = 0;
  Entries entries_;
};

struct SNFResult {
  /// Positive diagonal entries d1 | d2 | ... of the Smith normal form.
  std::vector<Integer> invariant_factors;
  std::size_t rank = 0;
};

/// Invariant factors by unimodular row/column reduction. The pivot is the
/// nonzero entry of least absolute value, ties broken by lowest (row, col).
SNFResult smith_normal_form(const IntegerMatrix& m);

/// Finitely generated abelian group Z^r + Z/d1 + ... + Z/dk, kept in
/// invariant-factor form (every di >= 2 and di | di+1).
class AbelianGroup {
 public:
  AbelianGroup() = default;
  /// Accepts any list of positive torsion orders; entries equal to 1 are
  /// dropped and the rest recombined into invariant-factor form.
  explicit AbelianGroup(std::size_t free_rank, std::vector<Integer> torsion = {});

  static AbelianGroup zero() { return {}; }
  static AbelianGroup free(std::size_t rank) { return AbelianGroup(rank); }

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  bool is_zero() const { return free_rank_ == 0 && torsion_.empty(); }
  bool is_free() const { return torsion_.empty(); }

  /// Prime-power orders of the cyclic summands, sorted ascending.
  std::vector<Integer> primary_parts() const;

  /// "0", "Z", "Z^3", "Z/2", "Z^2 + Z/2 + Z/4".
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

/// H = ker(d_in) / im(d_out) for d_in: C_n -> C_{n-1}, d_out: C_{n+1} -> C_n.
/// Throws DimensionMismatch when d_out.rows() != d_in.cols() and NotAComplex
/// when d_in * d_out != 0.
AbelianGroup homology_of_pair(const IntegerMatrix& d_in, const IntegerMatrix& d_out);

}  // namespace tracehom
