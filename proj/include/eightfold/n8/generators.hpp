#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eightfold/exactcore/matrix.hpp"
#include "eightfold/exactcore/sparse_polynomial.hpp"
#include "eightfold/symrep/permutations.hpp"
#include "eightfold/tableaux/tableau.hpp"

namespace eightfold {

/// The 14 semistandard 4 x 2 tableaux on 8 labels, in canonical order.
const std::vector<Tableau>& n8_degree1_basis();
/// "N" followed by the first column, e.g. N1234.
const std::vector<std::string>& n8_names();
VariableSet n8_variables();

/// Replaces every column by its complement in 1..8, with the sign of the
/// permutation column ++ complement, then renormalizes.
SignedTableau gale_dual(const Tableau& t);

struct GalePair {
  Tableau first;
  Tableau second;
  /// gale_dual(first) = sign * second.
  int sign = 0;
};

/// The 21 pairs of degree-2 semistandard tableaux swapped by gale_dual.
std::vector<GalePair> gale_pairs_degree2();

struct Degree2GaleReport {
  std::size_t degree1_fixed_positive = 0;
  std::size_t degree1_total = 0;
  std::size_t degree2_total = 0;
  std::size_t fixed = 0;
  std::size_t fixed_with_negative_sign = 0;
  std::size_t moved = 0;
  std::vector<GalePair> pairs;
  bool involution = false;
  std::size_t plus_eigenspace = 0;
  std::size_t minus_eigenspace = 0;
  std::size_t symmetric_square_dimension = 0;
  std::size_t quotient_dimension = 0;
  /// Rank of the 105 products of degree-1 invariants on sampled configurations.
  RankCertificate products;
  std::size_t configurations = 0;
};

Degree2GaleReport degree2_gale_analysis(std::span<const std::uint32_t> primes, std::uint64_t seed,
                                        std::size_t configurations = 130);

/// Invariant values at one sampled configuration of 8 points in P^3.
struct N8Sample {
  std::vector<Integer> degree1;
  std::vector<Integer> degree2;
};

/// Samples with integer coordinates; degree-2 values follow list_ssyt(4, 8, 2)
/// and are only filled when requested.
std::vector<N8Sample> sample_n8(std::size_t count, std::uint64_t seed, const std::string& stream, bool with_degree2);

/// Matrix of a relabeling on the degree-1 basis; column k is the image of
/// basis element k.
ExactMatrix n8_action(const Permutation& g, Straightener& st);

struct SeriesReport {
  std::vector<std::uint64_t> counts;
  std::vector<Integer> numerator;
  Integer degree;
  int a_invariant = 0;
  bool palindromic = false;
};

/// Tableau counts for (4, 8, k), k = 0..max_k, with the numerator over (1 - t)^10.
SeriesReport n8_series_report(int max_k = 8);

}  // namespace eightfold
