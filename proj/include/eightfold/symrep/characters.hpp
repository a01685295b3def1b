#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eightfold/exactcore/rational.hpp"

namespace eightfold {

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;

/// All partitions of n in ascending lexicographic order, (1^n) first.
std::vector<Partition> partitions(int n);
/// "4+4", "2+2+2+2"; the empty partition renders as "0".
std::string partition_to_string(const Partition& p);
Partition parse_partition(const std::string& text);
/// Size of the centralizer of a permutation with cycle type p.
Integer centralizer_order(const Partition& p);
Integer class_size(const Partition& p);

/// Murnaghan-Nakayama value of the irreducible character lambda on the class
/// mu; any sizes up to the memo's patience.
Integer character_value(const Partition& lambda, const Partition& mu);

/// Class function on S_n, one value per partition in `partitions(n)` order.
class CharacterVector {
 public:
  CharacterVector() = default;
  CharacterVector(int n, std::vector<Rational> values);

  int order() const { return n_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& at(const Partition& cycle_type) const;
  Rational dimension() const;

  CharacterVector& operator+=(const CharacterVector& rhs);
  CharacterVector& operator*=(const Rational& c);
  friend CharacterVector operator+(CharacterVector a, const CharacterVector& b) { return a += b; }
  friend CharacterVector operator*(CharacterVector a, const Rational& c) { return a *= c; }
  /// Pointwise product, the character of the tensor product.
  friend CharacterVector operator*(const CharacterVector& a, const CharacterVector& b);
  bool operator==(const CharacterVector& rhs) const { return n_ == rhs.n_ && values_ == rhs.values_; }

 private:
  int n_ = 0;
  std::vector<Rational> values_;
};

CharacterVector irreducible_character(const Partition& lambda);
std::vector<CharacterVector> character_table(int n);
/// (1/n!) sum over the group of a(g) b(g); the characters here are real.
Rational inner_product(const CharacterVector& a, const CharacterVector& b);

/// Cycle type of g^k when g has cycle type mu.
Partition power_cycle_type(const Partition& mu, int k);
CharacterVector symmetric_power_character(const CharacterVector& chi, int d);
CharacterVector exterior_power_character(const CharacterVector& chi, int d);

using RepDecomposition = std::map<Partition, Integer>;

/// Throws std::domain_error if a multiplicity is negative or non-integral.
RepDecomposition decompose(const CharacterVector& chi);
CharacterVector recompose(int n, const RepDecomposition& d);
Integer multiplicity(const CharacterVector& chi, const Partition& lambda);

/// Character of the degree-d invariants of n points in projective (m-1)-space,
/// from the rectangular coefficient of the plethysm of h_d. Throws
/// std::invalid_argument unless m divides d * n.
CharacterVector invariant_ring_character(int m, int n, int d);

struct FinalCheck {
  Integer sign_in_w_sym3;
  Integer sign_in_sym2w_r1;
  Integer sign_in_sym5;
};
/// Sign multiplicities in W (x) Sym^3 V, Sym^2 W (x) V and Sym^5 V with
/// V = V(2,2,2,2) and W = V(3,1,1,1,1,1).
FinalCheck n8_final_check();

struct AnnihilatorResult {
  std::size_t unknowns = 0;
  std::size_t kernel_dimension = 0;
  std::vector<std::size_t> modular_ranks;
  /// Exact kernel basis over Q when it was small enough to confirm.
  std::vector<std::vector<Rational>> kernel;
};

/// Degree-d forms s in nvars variables with x_i ds/dx_j = x_j ds/dx_i for
/// every listed pair.
AnnihilatorResult rotation_annihilator(int nvars, int d, const std::vector<std::pair<int, int>>& pairs,
                                       std::span<const std::uint32_t> primes);
/// All pairs among 14 variables.
AnnihilatorResult so_annihilator(int d, std::span<const std::uint32_t> primes);

}  // namespace eightfold
