#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eightfold/exactcore/rational.hpp"

namespace eightfold {

/// Dense univariate polynomial over Q, lowest degree first. The leading
/// coefficient is nonzero unless the polynomial is zero (empty storage).
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<Rational> coefficients);

  static UnivariatePolynomial monomial(const Rational& c, int degree);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational leading_coefficient() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
  Rational coefficient(int k) const;

  Rational evaluate(const Rational& x) const;
  UnivariatePolynomial derivative() const;
  UnivariatePolynomial monic() const;

  UnivariatePolynomial& operator+=(const UnivariatePolynomial& rhs);
  UnivariatePolynomial& operator-=(const UnivariatePolynomial& rhs);
  friend UnivariatePolynomial operator+(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a += b; }
  friend UnivariatePolynomial operator-(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a -= b; }
  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  friend UnivariatePolynomial operator*(UnivariatePolynomial a, const Rational& c);
  bool operator==(const UnivariatePolynomial& rhs) const = default;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws std::domain_error for a zero divisor.
std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(const UnivariatePolynomial& a,
                                                             const UnivariatePolynomial& b);

/// Monic gcd (zero if both inputs are zero).
UnivariatePolynomial gcd(UnivariatePolynomial a, UnivariatePolynomial b);

/// Determinant of the Sylvester matrix with f's coefficient rows on top.
/// Throws std::invalid_argument if either input is zero.
Rational resultant(const UnivariatePolynomial& f, const UnivariatePolynomial& g);

/// f / gcd(f, f'), normalized to be monic. Throws for zero input.
UnivariatePolynomial squarefree_part(const UnivariatePolynomial& f);

/// Unique polynomial of degree < samples.size() through (node, value) pairs.
/// Throws std::invalid_argument on repeated nodes.
UnivariatePolynomial interpolate(std::span<const std::pair<Rational, Rational>> samples);

/// Interpolation at the nodes 0, 1, ..., values.size()-1.
UnivariatePolynomial interpolate_consecutive(std::span<const Rational> values);

/// Dense polynomial over Z/p, lowest degree first, used for degree-pattern
/// factorization checks.
class ModularPolynomial {
 public:
  ModularPolynomial(std::uint32_t prime, std::vector<std::uint32_t> coefficients);
  std::uint32_t prime() const { return p_; }
  const std::vector<std::uint32_t>& coefficients() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

 private:
  friend class ModularPolyOps;
  std::uint32_t p_;
  std::vector<std::uint32_t> c_;
};

/// Reduces an integer-coefficient polynomial (given over Q with unit
/// denominators after clearing) modulo p.
ModularPolynomial reduce_mod(const UnivariatePolynomial& f, std::uint32_t prime);

/// Distinct-degree factorization of a squarefree polynomial over Z/p:
/// returns the degrees of all irreducible factors, ascending.
/// Throws std::invalid_argument if f is not squarefree modulo p.
std::vector<int> factor_degree_pattern(const ModularPolynomial& f);

/// Integer multiple of f with coprime integer coefficients and positive
/// leading coefficient.
UnivariatePolynomial primitive_integer_part(const UnivariatePolynomial& f);

}  // namespace eightfold
