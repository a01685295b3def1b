#pragma once

#include <string>
#include <vector>

#include "eightfold/exactcore/matrix.hpp"
#include "eightfold/exactcore/sparse_polynomial.hpp"
#include "eightfold/symrep/permutations.hpp"
#include "eightfold/tableaux/configuration.hpp"
#include "eightfold/tableaux/matching.hpp"

namespace eightfold {

/// X1, X2, Y1..Y4, Z1..Z8.
const std::vector<std::string>& kempe_names();
VariableSet kempe_variables();

/// The 14 non-crossing matchings on 8 points bound to the Kempe names.
struct KempeBasis {
  std::vector<Matching> matchings;
  /// +1 if the index shift follows i -> i + 1 on labels, -1 for i -> i - 1.
  int direction = 1;
  std::size_t candidates = 0;
  std::size_t consistent = 0;

  std::size_t index_of(const std::string& name) const;
  const Matching& operator[](const std::string& name) const { return matchings[index_of(name)]; }
};

/// Searches all bindings compatible with rotation orbits of sizes 2, 4, 8 and
/// keeps the first (in a fixed order) for which the explicit cubic is skew
/// under the rotation and the transposition (1 2), and X2*Y1 - Z4*Z8
/// straightens to zero. Throws std::logic_error if none qualifies.
KempeBasis bind_kempe_labels();
/// Rebuilds a basis from stored edge lists, checking the same conditions.
KempeBasis kempe_basis_from(const std::vector<Matching>& matchings, int direction);

SparsePolynomial build_cubic_explicit();

/// Matrix of g on degree-1 invariants in the Kempe basis; column k is the
/// image of the k-th basis element.
ExactMatrix s8_action(const KempeBasis& basis, const Permutation& g);
/// g acting on a polynomial in the basis variables by linear substitution.
SparsePolynomial act(const SparsePolynomial& p, const ExactMatrix& action);
bool is_skew(const SparsePolynomial& p, const std::vector<ExactMatrix>& generators, const std::vector<int>& signs);

struct SkewAverageCubic {
  SparsePolynomial cubic;
  /// cubic = scalar * explicit cubic, when proportional.
  Rational scalar;
  bool proportional = false;
};

/// Signed sum of the cubes of the 105 matchings, each expanded in the Kempe
/// basis, equal to the skew average over S8 of one matching's cube.
SkewAverageCubic build_cubic_skew_average(const KempeBasis& basis, const SparsePolynomial& explicit_cubic);

/// Values of the 14 Kempe invariants at a configuration of 8 points on a line.
std::vector<Rational> kempe_coordinates(const KempeBasis& basis, const Configuration& c);

/// Edge lists of the binding as "X1" -> "1-2 3-4 5-6 7-8" pairs.
std::vector<std::pair<std::string, std::string>> describe(const KempeBasis& basis);

}  // namespace eightfold
