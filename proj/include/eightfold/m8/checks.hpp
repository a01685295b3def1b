#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "eightfold/exactcore/matrix.hpp"
#include "eightfold/exactcore/sparse_polynomial.hpp"
#include "eightfold/m8/kempe.hpp"

namespace eightfold {

struct SingularLocusResult {
  int trials = 0;
  std::size_t values_checked = 0;
  std::size_t nonzero_partials = 0;
  std::size_t nonzero_cubic = 0;
  /// Index of the first configuration with a nonzero partial, or -1.
  int first_failure = -1;
  bool negative_control = false;
  int negative_control_attempts = 0;
};

/// All partials of `form` vanish at the coordinates of sampled configurations
/// of 8 points on the line, and fail to vanish at some random point of P^13.
SingularLocusResult verify_m8_in_singular_locus(const KempeBasis& basis, const SparsePolynomial& form, int trials,
                                                std::uint64_t seed);

struct SyzygyResult {
  std::size_t sym3_dimension = 0;
  std::uint64_t r3_dimension = 0;
  std::size_t expected_rank = 0;
  RankCertificate products;
  RankCertificate partials;
};

/// Rank of the cubics x_i * dC/dx_j inside Sym^3 of the 14 coordinates.
SyzygyResult verify_no_linear_syzygies(const SparsePolynomial& cubic, std::span<const std::uint32_t> primes);

struct HilbertReport {
  std::vector<std::uint64_t> counts;
  std::vector<Integer> formula;
  /// Numerator of the series over (1 - t)^6.
  std::vector<Integer> numerator;
  Integer degree;
  int a_invariant = 0;
  bool palindromic = false;
};

/// Tableau counts for k = 0..max_k against the closed formula; max_k >= 5
/// so that the numerator is confirmed to stop in degree 4.
HilbertReport hilbert_report(int max_k = 8);
/// Value of (k^5 + 5k^4 + 11k^3 + 13k^2 + 9k + 3) / 3.
Integer line_hilbert_function(long k);

struct BettiTable {
  std::map<std::pair<int, int>, Integer> entries;
  bool symmetric = false;
  /// Highest k at which the alternating sum was confirmed against f(k).
  int checked_through = 0;
  bool consistent = false;

  Integer at(int i, int j) const;
};

/// Seeds the known corners, solves the triangular system for the middle row
/// from f(4..8), then checks symmetry and the identity up to degree `check_to`.
BettiTable derive_betti_table(int check_to = 24);

}  // namespace eightfold
