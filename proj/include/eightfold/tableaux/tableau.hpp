#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eightfold/exactcore/rational.hpp"

namespace eightfold {

/// Rectangular tableau with m rows and entries in 1..n, stored column by
/// column. Instances are always canonical: columns strictly increasing and
/// sorted lexicographically.
class Tableau {
 public:
  Tableau() = default;

  int rows() const { return m_; }
  int points() const { return n_; }
  int columns() const { return m_ == 0 ? 0 : static_cast<int>(entries_.size()) / m_; }
  int degree() const { return n_ == 0 ? 0 : columns() * m_ / n_; }
  int entry(int row, int col) const { return entries_[static_cast<std::size_t>(col * m_ + row)]; }
  std::span<const std::uint8_t> column(int col) const {
    return {entries_.data() + static_cast<std::size_t>(col * m_), static_cast<std::size_t>(m_)};
  }
  const std::vector<std::uint8_t>& entries() const { return entries_; }

  bool is_semistandard() const;
  /// Rows joined by '/', entries separated by spaces.
  std::string to_string() const;
  std::vector<std::string> row_strings() const;

  auto operator<=>(const Tableau&) const = default;

 private:
  friend struct TableauFactory;
  int m_ = 0;
  int n_ = 0;
  std::vector<std::uint8_t> entries_;
};

struct SignedTableau {
  int sign;
  Tableau tableau;
};

/// Canonicalizes a raw column-major filling. Returns nullopt when some column
/// repeats an entry, i.e. the invariant vanishes identically. Throws
/// std::invalid_argument on a bad shape or unequal entry multiplicities.
std::optional<SignedTableau> normalize_raw(int m, int n, std::span<const std::uint8_t> raw_columns);
std::optional<SignedTableau> normalize(int m, int n, const std::vector<std::vector<int>>& columns);

/// Columns of a and b together; both must share m and n.
Tableau multiply(const Tableau& a, const Tableau& b);

/// Applies a permutation of the labels (perm[i - 1] is the image of i).
std::optional<SignedTableau> relabel(const Tableau& t, std::span<const int> perm);

/// Finite linear combination of canonical tableaux of a common shape.
class TableauSum {
 public:
  using TermMap = std::map<Tableau, Rational>;

  TableauSum() = default;
  explicit TableauSum(const Tableau& t, const Rational& c = 1) { add(t, c); }

  void add(const Tableau& t, const Rational& c);
  void add(const std::optional<SignedTableau>& t, const Rational& c);
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Tableau& t) const;

  TableauSum& operator+=(const TableauSum& rhs);
  TableauSum& operator-=(const TableauSum& rhs);
  TableauSum& operator*=(const Rational& c);
  friend TableauSum operator+(TableauSum a, const TableauSum& b) { return a += b; }
  friend TableauSum operator-(TableauSum a, const TableauSum& b) { return a -= b; }
  friend TableauSum operator*(TableauSum a, const Rational& c) { return a *= c; }
  friend TableauSum operator*(const TableauSum& a, const TableauSum& b);
  bool operator==(const TableauSum& rhs) const { return terms_ == rhs.terms_; }

  bool is_semistandard() const;

 private:
  TermMap terms_;
};

/// Rewrites tableau sums in the semistandard basis via Garnir exchanges.
/// Results are memoized per tableau, so one instance should be reused for
/// related work.
class Straightener {
 public:
  explicit Straightener(std::size_t step_limit = 50'000'000) : step_limit_(step_limit) {}

  const TableauSum& straighten(const Tableau& t);
  TableauSum straighten(const TableauSum& s);
  std::size_t steps() const { return steps_; }

 private:
  std::map<Tableau, TableauSum> memo_;
  std::map<Tableau, bool> active_;
  std::size_t step_limit_;
  std::size_t steps_ = 0;
};

TableauSum straighten(const TableauSum& s);

/// Number of semistandard m-row tableaux with every label 1..n used d times.
/// Throws std::invalid_argument unless m divides d * n.
std::uint64_t count_ssyt(int m, int n, int d);
/// Visits the same tableaux in a fixed order.
void enumerate_ssyt(int m, int n, int d, const std::function<void(const Tableau&)>& visit);
std::vector<Tableau> list_ssyt(int m, int n, int d);

}  // namespace eightfold
