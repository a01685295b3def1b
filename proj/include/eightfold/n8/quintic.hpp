#pragma once

#include <cstdint>
#include <vector>

#include "eightfold/exactcore/sparse_polynomial.hpp"

namespace eightfold {

struct QuinticConstruction {
  /// Sign multiplicity in Sym^5 of the degree-1 character.
  std::size_t character_multiplicity = 0;
  std::size_t skew_dimension = 0;
  std::size_t seeds_tried = 0;
  std::size_t evaluation_points = 0;
  std::size_t kernel_dimension = 0;
  /// Integral, content 1, first canonical coefficient positive.
  SparsePolynomial quintic;
};

/// Skew-symmetrizes random degree-5 monomials in the 14 degree-1 invariants
/// until the span reaches the character multiplicity, then finds the
/// combinations vanishing on sampled configurations.
QuinticConstruction construct_skew_quintic(std::uint64_t seed, std::size_t evaluation_points = 16,
                                           std::size_t seed_budget = 400);

/// g.p for the relabeling g acting on the degree-1 invariants.
SparsePolynomial n8_act(const SparsePolynomial& p, const std::vector<int>& g);

struct QuinticSingularReport {
  int trials = 0;
  std::size_t values_checked = 0;
  std::size_t nonzero_partials = 0;
  std::size_t nonzero_values = 0;
  int first_failure = -1;
  bool negative_control = false;
  int negative_control_attempts = 0;
};

QuinticSingularReport verify_quintic_singular(const SparsePolynomial& quintic, int trials, std::uint64_t seed);

}  // namespace eightfold
