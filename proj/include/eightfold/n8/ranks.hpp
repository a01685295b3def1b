#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace eightfold {

/// Ranks of an evaluation matrix (rows = products of generators, columns =
/// sampled configurations) at several primes. Entries are exact integer
/// values reduced mod p, so every modular rank is a lower bound for the
/// rational rank.
struct EvaluationRank {
  int degree = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  /// Dimension of the graded piece the products live in.
  std::size_t target = 0;
  std::vector<std::uint32_t> primes;
  std::vector<std::size_t> ranks;
  bool primes_agree = false;
  std::size_t rank = 0;
};

/// Products of degree-k built from the 14 degree-1 invariants and one
/// tableau from each of the 21 Gale pairs in degree 2. `margin` extra
/// configurations beyond dim R_k are sampled.
EvaluationRank generation_rank(int k, std::span<const std::uint32_t> primes, std::uint64_t seed, std::size_t margin = 40);

/// Products of degree-1 invariants only: the rank of Sym^k R_1 in R_k.
EvaluationRank symmetric_power_rank(int k, std::span<const std::uint32_t> primes, std::uint64_t seed,
                                    std::size_t margin = 40);

struct NPrimeHilbertReport {
  std::vector<EvaluationRank> ranks;  // k = 1..max_k
  /// dim Sym^k minus rank, i.e. the degree-k part of the ideal.
  std::vector<std::size_t> ideal_dimensions;
  /// First coefficients of the numerator over (1 - t)^10 from the ranks.
  std::vector<long long> numerator;
  long long degree = 0;
};

NPrimeHilbertReport nprime_hilbert_report(std::span<const std::uint32_t> primes, std::uint64_t seed, int max_k = 4,
                                          std::size_t margin = 40);

}  // namespace eightfold
