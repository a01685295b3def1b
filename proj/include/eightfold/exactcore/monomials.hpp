#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "eightfold/exactcore/sparse_polynomial.hpp"

namespace eightfold {

/// Dense indexing of the monomials of a fixed total degree, listed in
/// canonical (graded reverse lexicographic, leading-first) order.
class MonomialIndex {
 public:
  MonomialIndex(int num_variables, int degree);

  int num_variables() const { return nvars_; }
  int degree() const { return degree_; }
  std::size_t size() const { return monos_.size(); }
  const Exponent& exponent(std::size_t i) const { return monos_[i]; }
  const std::vector<Exponent>& exponents() const { return monos_; }
  /// Throws std::out_of_range if e is not a monomial of this degree.
  std::size_t index(const Exponent& e) const;

  /// table[i * nvars + v] = index (in `next`) of monomial i times variable v.
  std::vector<std::size_t> times_variable_table(const MonomialIndex& next) const;

 private:
  int nvars_;
  int degree_;
  std::vector<Exponent> monos_;
  std::map<Exponent, std::size_t> lookup_;
};

/// Number of monomials of degree d in n variables, C(n + d - 1, d).
std::size_t monomial_count(int n, int d);

}  // namespace eightfold
