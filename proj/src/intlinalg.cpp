#include "tracehom/intlinalg.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "tracehom/error.hpp"

namespace tracehom {

// ---------------------------------------------------------------------------
// IntegerMatrix

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const Index cols = rows.empty() ? 0 : rows.front().size();
  IntegerMatrix m(rows.size(), cols);
  for (Index r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged rows in IntegerMatrix::from_rows");
    for (Index c = 0; c < cols; ++c) m.set(r, c, Integer(rows[r][c]));
  }
  return m;
}

IntegerMatrix IntegerMatrix::identity(Index n) {
  IntegerMatrix m(n, n);
  for (Index i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void IntegerMatrix::check_bounds(Index r, Index c) const {
  if (r >= rows_ || c >= cols_) {
    std::ostringstream msg;
    msg << "index (" << r << ", " << c << ") outside " << rows_ << "x" << cols_ << " matrix";
    throw std::out_of_range(msg.str());
  }
}

Integer IntegerMatrix::at(Index r, Index c) const {
  check_bounds(r, c);
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Integer(0) : it->second;
}

void IntegerMatrix::set(Index r, Index c, const Integer& value) {
  check_bounds(r, c);
  if (value == 0) {
    entries_.erase({r, c});
  } else {
    entries_[{r, c}] = value;
  }
}

void IntegerMatrix::add(Index r, Index c, const Integer& value) {
  check_bounds(r, c);
  if (value == 0) return;
  auto [it, inserted] = entries_.try_emplace({r, c}, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) entries_.erase(it);
  }
}

std::vector<std::vector<Integer>> IntegerMatrix::to_dense() const {
  std::vector<std::vector<Integer>> dense(rows_, std::vector<Integer>(cols_, 0));
  for (const auto& [pos, value] : entries_) dense[pos.first][pos.second] = value;
  return dense;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
  if (cols_ != rhs.rows_) {
    std::ostringstream msg;
    msg << "cannot multiply " << rows_ << "x" << cols_ << " by " << rhs.rows_ << "x" << rhs.cols_;
    throw DimensionMismatch(msg.str());
  }
  std::vector<std::vector<std::pair<Index, const Integer*>>> rhs_rows(rhs.rows_);
  for (const auto& [pos, value] : rhs.entries_) rhs_rows[pos.first].emplace_back(pos.second, &value);

  IntegerMatrix out(rows_, rhs.cols_);
  for (const auto& [pos, value] : entries_) {
    for (const auto& [col, w] : rhs_rows[pos.second]) out.add(pos.first, col, value * *w);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

using Dense = std::vector<std::vector<Integer>>;
using Cell = std::pair<std::size_t, std::size_t>;

bool smaller_pivot(const Integer& candidate, const std::optional<Integer>& best) {
  return !best || mpz_cmpabs(candidate.get_mpz_t(), best->get_mpz_t()) < 0;
}

// Least |a[i][j]| over the trailing block starting at (t, t); row-major scan
// keeps the lowest (row, col) on ties.
std::optional<Cell> block_pivot(const Dense& a, std::size_t t, std::size_t rows, std::size_t cols) {
  std::optional<Cell> pos;
  std::optional<Integer> best;
  for (std::size_t i = t; i < rows; ++i) {
    for (std::size_t j = t; j < cols; ++j) {
      if (a[i][j] != 0 && smaller_pivot(a[i][j], best)) {
        best = abs(a[i][j]);
        pos = Cell{i, j};
      }
    }
  }
  return pos;
}

// Same, restricted to row t and column t.
Cell cross_pivot(const Dense& a, std::size_t t, std::size_t rows, std::size_t cols) {
  Cell pos{t, t};
  std::optional<Integer> best;
  if (a[t][t] != 0) best = abs(a[t][t]);
  for (std::size_t j = t + 1; j < cols; ++j) {
    if (a[t][j] != 0 && smaller_pivot(a[t][j], best)) {
      best = abs(a[t][j]);
      pos = {t, j};
    }
  }
  for (std::size_t i = t + 1; i < rows; ++i) {
    if (a[i][t] != 0 && smaller_pivot(a[i][t], best)) {
      best = abs(a[i][t]);
      pos = {i, t};
    }
  }
  return pos;
}

void move_to_diagonal(Dense& a, std::size_t t, Cell pos) {
  if (pos.first != t) std::swap(a[t], a[pos.first]);
  if (pos.second != t) {
    for (auto& row : a) std::swap(row[t], row[pos.second]);
  }
}

// Clears row t and column t below/right of the pivot by division with
// remainder. Returns true if some remainder survived.
bool reduce_cross(Dense& a, std::size_t t, std::size_t rows, std::size_t cols) {
  bool remainder = false;
  Integer q;
  const Integer& pivot = a[t][t];
  for (std::size_t i = t + 1; i < rows; ++i) {
    if (a[i][t] == 0) continue;
    mpz_tdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), pivot.get_mpz_t());
    if (q != 0) {
      for (std::size_t j = t; j < cols; ++j) {
        if (a[t][j] != 0) mpz_submul(a[i][j].get_mpz_t(), q.get_mpz_t(), a[t][j].get_mpz_t());
      }
    }
    if (a[i][t] != 0) remainder = true;
  }
  for (std::size_t j = t + 1; j < cols; ++j) {
    if (a[t][j] == 0) continue;
    mpz_tdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), pivot.get_mpz_t());
    if (q != 0) {
      for (std::size_t i = t; i < rows; ++i) {
        if (a[i][t] != 0) mpz_submul(a[i][j].get_mpz_t(), q.get_mpz_t(), a[i][t].get_mpz_t());
      }
    }
    if (a[t][j] != 0) remainder = true;
  }
  return remainder;
}

std::optional<std::size_t> row_not_divisible(const Dense& a, std::size_t t, std::size_t rows,
                                             std::size_t cols) {
  for (std::size_t i = t + 1; i < rows; ++i) {
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (a[i][j] != 0 && !mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) return i;
    }
  }
  return std::nullopt;
}

}  // namespace

SNFResult smith_normal_form(const IntegerMatrix& m) {
  SNFResult result;
  if (m.is_zero()) return result;

  Dense a = m.to_dense();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    auto pos = block_pivot(a, t, rows, cols);
    if (!pos) break;
    move_to_diagonal(a, t, *pos);
    for (;;) {
      if (reduce_cross(a, t, rows, cols)) {
        move_to_diagonal(a, t, cross_pivot(a, t, rows, cols));
        continue;
      }
      // The pivot must divide the whole trailing block; otherwise fold the
      // offending row into row t and reduce again with a smaller remainder.
      if (auto bad = row_not_divisible(a, t, rows, cols)) {
        for (std::size_t j = t; j < cols; ++j) a[t][j] += a[*bad][j];
        continue;
      }
      break;
    }
    result.invariant_factors.push_back(abs(a[t][t]));
  }
  result.rank = result.invariant_factors.size();
  return result;
}

// ---------------------------------------------------------------------------
// AbelianGroup

AbelianGroup::AbelianGroup(std::size_t free_rank, std::vector<Integer> torsion)
    : free_rank_(free_rank) {
  for (const auto& d : torsion) {
    if (d <= 0) throw std::invalid_argument("torsion orders must be positive");
  }
  std::erase_if(torsion, [](const Integer& d) { return d == 1; });
  // Pairwise (gcd, lcm) exchange preserves the group and leaves each entry
  // dividing every later one.
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    for (std::size_t j = i + 1; j < torsion.size(); ++j) {
      Integer g = gcd(torsion[i], torsion[j]);
      Integer l = lcm(torsion[i], torsion[j]);
      torsion[i] = std::move(g);
      torsion[j] = std::move(l);
    }
  }
  std::erase_if(torsion, [](const Integer& d) { return d == 1; });
  torsion_ = std::move(torsion);
}

std::vector<Integer> AbelianGroup::primary_parts() const {
  std::vector<Integer> parts;
  for (const auto& factor : torsion_) {
    Integer n = factor;
    for (Integer p = 2; p * p <= n; mpz_nextprime(p.get_mpz_t(), p.get_mpz_t())) {
      Integer power = 1;
      while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        n /= p;
        power *= p;
      }
      if (power > 1) parts.push_back(power);
    }
    if (n > 1) parts.push_back(n);
  }
  std::sort(parts.begin(), parts.end());
  return parts;
}

std::string AbelianGroup::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  if (free_rank_ == 1) {
    out = "Z";
  } else if (free_rank_ > 1) {
    out = "Z^" + std::to_string(free_rank_);
  }
  for (const auto& d : torsion_) {
    if (!out.empty()) out += " + ";
    out += "Z/" + d.get_str();
  }
  return out;
}

// ---------------------------------------------------------------------------

AbelianGroup homology_of_pair(const IntegerMatrix& d_in, const IntegerMatrix& d_out) {
  if (d_out.rows() != d_in.cols()) {
    std::ostringstream msg;
    msg << "boundary shapes do not chain: d_in is " << d_in.rows() << "x" << d_in.cols()
        << ", d_out is " << d_out.rows() << "x" << d_out.cols();
    throw DimensionMismatch(msg.str());
  }
  if (!(d_in * d_out).is_zero()) throw NotAComplex("composite of consecutive boundaries is nonzero");

  const std::size_t dim = d_in.cols();
  const std::size_t rank_in = smith_normal_form(d_in).rank;
  const SNFResult out = smith_normal_form(d_out);
  return AbelianGroup(dim - rank_in - out.rank, out.invariant_factors);
}

}  // namespace tracehom
