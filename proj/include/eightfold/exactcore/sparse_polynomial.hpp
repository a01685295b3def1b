#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eightfold/exactcore/rational.hpp"

namespace eightfold {

using Exponent = std::vector<std::uint16_t>;

/// Strict weak order placing the larger monomial first under graded reverse
/// lexicographic order on the declared variable order.
struct GrevlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Ordered, immutable list of variable names shared between polynomials.
using VariableSet = std::shared_ptr<const std::vector<std::string>>;

VariableSet make_variables(std::vector<std::string> names);

/// Exact multivariate polynomial with rational coefficients. Terms iterate
/// leading-term first; zero coefficients are never stored.
class SparsePolynomial {
 public:
  using TermMap = std::map<Exponent, Rational, GrevlexGreater>;

  SparsePolynomial() = default;
  explicit SparsePolynomial(VariableSet variables);

  static SparsePolynomial constant(VariableSet variables, const Rational& c);
  static SparsePolynomial variable(VariableSet variables, std::size_t index);
  static SparsePolynomial variable(VariableSet variables, std::string_view name);

  const VariableSet& variable_set() const { return vars_; }
  const std::vector<std::string>& variables() const;
  std::size_t num_variables() const { return vars_ ? vars_->size() : 0; }
  /// Throws std::out_of_range for an unknown name.
  std::size_t index_of(std::string_view name) const;
  bool same_variables(const SparsePolynomial& other) const;

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Rational coefficient(const Exponent& e) const;

  /// Adds c * x^e in place.
  void add_term(const Exponent& e, const Rational& c);

  SparsePolynomial& operator+=(const SparsePolynomial& rhs);
  SparsePolynomial& operator-=(const SparsePolynomial& rhs);
  SparsePolynomial& operator*=(const Rational& c);
  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
  friend SparsePolynomial operator*(SparsePolynomial a, const Rational& c) { return a *= c; }
  friend SparsePolynomial operator*(const Rational& c, SparsePolynomial a) { return a *= c; }
  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
  SparsePolynomial operator-() const;

  bool operator==(const SparsePolynomial& rhs) const;

  SparsePolynomial derivative(std::size_t index) const;
  SparsePolynomial derivative(std::string_view name) const { return derivative(index_of(name)); }

  /// Exact value at a point given in variable order.
  Rational evaluate(std::span<const Rational> point) const;
  /// Throws std::invalid_argument if a variable has no assigned value.
  Rational evaluate(const std::map<std::string, Rational>& assignment) const;

  /// Replaces variable i by images[i]; all images must share one variable set.
  SparsePolynomial substitute(std::span<const SparsePolynomial> images) const;

  /// Human-readable form, e.g. "X1^2*X2 - 3*Y1".
  std::string to_string() const;

 private:
  void require_same_variables(const SparsePolynomial& other) const;

  VariableSet vars_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const SparsePolynomial& p);

/// Canonical text form: a header line `vars<TAB>v1,v2,...`, then one line per
/// term `coefficient<TAB>e1,e2,...,ek` in canonical (leading-first) order.
std::string write_canonical(const SparsePolynomial& p);
/// Inverse of write_canonical; throws std::invalid_argument on malformed input.
SparsePolynomial read_canonical(std::string_view text);

}  // namespace eightfold
