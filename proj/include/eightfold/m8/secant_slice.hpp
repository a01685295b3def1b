#pragma once

#include <cstdint>
#include <vector>

#include "eightfold/exactcore/sparse_polynomial.hpp"
#include "eightfold/exactcore/univariate.hpp"

namespace eightfold {

struct PlaneSlice {
  int resamples = 0;
  int resultant_degree = -1;
  int squarefree_degree = -1;
  /// R equals a nonzero constant times S^2.
  bool constant_times_square = false;
  std::vector<std::uint32_t> primes;
  std::vector<std::vector<int>> degree_patterns;
  /// Proper factor degrees achievable at every prime tried; empty means a
  /// factorization over Q is impossible.
  std::vector<int> common_degrees;
  UnivariatePolynomial squarefree;
};

struct SecantSliceResult {
  std::vector<PlaneSlice> planes;
  bool identical_conclusions = false;
};

/// Restricts the cubic and its Hessian determinant to random planes
/// u*A + v*B + w*C, eliminates u, and factors the square structure of the
/// resulting degree-42 polynomial.
SecantSliceResult secant_slice_analysis(const SparsePolynomial& cubic, int planes, std::uint64_t seed,
                                        int max_primes = 25);

/// Proper subset sums of a factor-degree multiset.
std::vector<int> achievable_degrees(const std::vector<int>& pattern);

}  // namespace eightfold
