#include <gtest/gtest.h>

#include <set>

#include "eightfold/exactcore/modular.hpp"
#include "eightfold/exactcore/monomials.hpp"
#include "eightfold/symrep/characters.hpp"
#include "eightfold/tableaux/tableau.hpp"

using namespace eightfold;

namespace {

std::set<Partition> support(const RepDecomposition& d) {
  std::set<Partition> out;
  for (const auto& [p, m] : d) {
    EXPECT_EQ(m, 1) << partition_to_string(p);
    out.insert(p);
  }
  return out;
}

std::set<Partition> partitions_where(bool (*pred)(const Partition&)) {
  std::set<Partition> out;
  for (const auto& p : partitions(8)) {
    if (pred(p)) out.insert(p);
  }
  return out;
}

bool all_even(const Partition& p) {
  for (int x : p) {
    if (x % 2) return false;
  }
  return true;
}

bool all_odd(const Partition& p) {
  for (int x : p) {
    if (x % 2 == 0) return false;
  }
  return true;
}

Integer hook_dimension(const Partition& p) {
  Integer prod = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (int j = 0; j < p[i]; ++j) {
      int below = 0;
      for (std::size_t k = i + 1; k < p.size() && p[k] > j; ++k) ++below;
      prod *= p[i] - j + below;
    }
  }
  Integer f = 1;
  int n = 0;
  for (int x : p) n += x;
  for (int i = 2; i <= n; ++i) f *= i;
  return f / prod;
}

const CharacterVector& v44() {
  static const auto chi = irreducible_character({4, 4});
  return chi;
}

const CharacterVector& v2222() {
  static const auto chi = irreducible_character({2, 2, 2, 2});
  return chi;
}

}  // namespace

TEST(Partitions, CountsAndOrder) {
  EXPECT_EQ(partitions(8).size(), 22u);
  EXPECT_EQ(partitions(8).front(), Partition(8, 1));
  EXPECT_EQ(partitions(8).back(), Partition{8});
  EXPECT_EQ(partitions(40).size(), 37338u);
  EXPECT_EQ(partition_to_string({2, 2, 2, 2}), "2+2+2+2");
  EXPECT_EQ(parse_partition("4+4"), (Partition{4, 4}));
}

TEST(Characters, TrivialAndSign) {
  const auto triv = irreducible_character({8});
  const auto sgn = irreducible_character(Partition(8, 1));
  const auto classes = partitions(8);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    EXPECT_EQ(triv.values()[c], 1);
    const int parity = 8 - static_cast<int>(classes[c].size());
    EXPECT_EQ(sgn.values()[c], parity % 2 ? -1 : 1);
  }
}

TEST(Characters, Dimensions) {
  EXPECT_EQ(v44().dimension(), 14);
  EXPECT_EQ(v2222().dimension(), 14);
  EXPECT_EQ(irreducible_character({3, 1, 1, 1, 1, 1}).dimension(), 21);
  for (const auto& p : partitions(8)) EXPECT_EQ(irreducible_character(p).dimension(), Rational(hook_dimension(p)));
}

TEST(Characters, Orthonormality) {
  const auto table = character_table(8);
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (std::size_t j = 0; j < table.size(); ++j) EXPECT_EQ(inner_product(table[i], table[j]), i == j ? 1 : 0);
  }
}

TEST(Characters, ClassSizesSumToGroupOrder) {
  Integer total = 0;
  for (const auto& p : partitions(8)) total += class_size(p);
  EXPECT_EQ(total, 40320);
}

TEST(Characters, SignTwist) {
  const auto sgn = irreducible_character(Partition(8, 1));
  EXPECT_EQ(v44() * sgn, v2222());
}

TEST(SymmetricPowers, FirstPowerAndDimensions) {
  EXPECT_EQ(symmetric_power_character(v44(), 1), v44());
  EXPECT_EQ(symmetric_power_character(v44(), 2).dimension(), 105);
  EXPECT_EQ(exterior_power_character(v44(), 2).dimension(), 91);
  for (int d = 0; d <= 5; ++d) {
    Integer stars = 1;
    for (int i = 1; i <= d; ++i) stars = stars * (13 + i) / i;
    EXPECT_EQ(symmetric_power_character(v2222(), d).dimension(), Rational(stars));
  }
}

TEST(SymmetricPowers, ExteriorSquareFormula) {
  const auto classes = partitions(8);
  const auto ext = exterior_power_character(v44(), 2);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const Rational x = v44().values()[c];
    EXPECT_EQ(ext.values()[c], (x * x - v44().at(power_cycle_type(classes[c], 2))) / 2);
  }
}

TEST(SymmetricPowers, SignMultiplicities) {
  const Partition sign(8, 1);
  EXPECT_EQ(multiplicity(symmetric_power_character(v44(), 3), sign), 1);
  EXPECT_EQ(multiplicity(symmetric_power_character(v2222(), 5), sign), 4);
  EXPECT_EQ(multiplicity(symmetric_power_character(v2222(), 4), {4, 4}), 7);
}

TEST(Decompose, PrintedTable) {
  const auto sym2 = symmetric_power_character(v44(), 2);
  const auto ext2 = exterior_power_character(v44(), 2);
  const auto r2 = invariant_ring_character(2, 8, 2);
  const auto even_le4 = partitions_where([](const Partition& p) { return p.size() <= 4 && all_even(p); });
  const auto odd_eq4 = partitions_where([](const Partition& p) { return p.size() == 4 && all_odd(p); });
  const auto even_le3 = partitions_where([](const Partition& p) { return p.size() <= 3 && all_even(p); });
  const auto even_eq4 = partitions_where([](const Partition& p) { return p.size() == 4 && all_even(p); });
  EXPECT_EQ(support(decompose(sym2)), even_le4);
  EXPECT_EQ(support(decompose(ext2)), odd_eq4);
  auto both = even_le4;
  both.insert(odd_eq4.begin(), odd_eq4.end());
  EXPECT_EQ(support(decompose(v44() * v44())), both);
  EXPECT_EQ(support(decompose(r2)), even_le3);
  auto i2 = sym2 + r2 * Rational(-1);
  EXPECT_EQ(support(decompose(i2)), even_eq4);
}

TEST(Decompose, Reconstructs) {
  const auto chi = symmetric_power_character(v2222(), 3);
  EXPECT_EQ(recompose(8, decompose(chi)), chi);
}

TEST(Decompose, RejectsNonCharacters) {
  EXPECT_THROW(decompose(v44() * Rational(1, 2)), std::domain_error);
  EXPECT_THROW(decompose(v44() * Rational(-1)), std::domain_error);
}

TEST(InvariantRing, DegreeOneIsTheRectangle) {
  EXPECT_EQ(invariant_ring_character(2, 8, 1), v44());
  EXPECT_EQ(invariant_ring_character(4, 8, 1), v2222());
}

TEST(InvariantRing, DimensionsMatchTableauCounts) {
  for (int k = 0; k <= 3; ++k) {
    EXPECT_EQ(invariant_ring_character(2, 8, k).dimension(), Rational(count_ssyt(2, 8, k)));
  }
  EXPECT_EQ(invariant_ring_character(4, 8, 2).dimension(), 126);
}

TEST(InvariantRing, QuarticAndQuinticMultiplicities) {
  EXPECT_EQ(multiplicity(invariant_ring_character(4, 8, 5), Partition(8, 1)), 3);
  EXPECT_EQ(multiplicity(invariant_ring_character(4, 8, 4), {4, 4}), 6);
  EXPECT_EQ(multiplicity(invariant_ring_character(4, 8, 2), {3, 1, 1, 1, 1, 1}), 1);
}

TEST(FinalCheck, SignAbsentFromBothProducts) {
  const auto r = n8_final_check();
  EXPECT_EQ(r.sign_in_w_sym3, 0);
  EXPECT_EQ(r.sign_in_sym2w_r1, 0);
  EXPECT_EQ(r.sign_in_sym5, 4);
}

TEST(Annihilator, SinglePairInThreeVariables) {
  const auto primes = default_primes();
  const auto r = rotation_annihilator(3, 3, {{0, 1}}, primes);
  EXPECT_EQ(r.kernel_dimension, 2u);
}

TEST(Annihilator, TwoVariablesOddDegree) {
  const auto primes = default_primes();
  EXPECT_EQ(rotation_annihilator(2, 3, {{0, 1}}, primes).kernel_dimension, 0u);
  EXPECT_EQ(rotation_annihilator(2, 2, {{0, 1}}, primes).kernel_dimension, 1u);
}

TEST(Annihilator, FourteenVariables) {
  const auto primes = default_primes();
  const auto quad = so_annihilator(2, primes);
  ASSERT_EQ(quad.kernel_dimension, 1u);
  EXPECT_EQ(quad.modular_ranks, (std::vector<std::size_t>{104, 104}));
  // The kernel vector is proportional to the sum of squares.
  const auto& v = quad.kernel.front();
  const MonomialIndex mons(14, 2);
  Rational scale = 0;
  for (std::size_t i = 0; i < mons.size(); ++i) {
    const auto& e = mons.exponent(i);
    const bool square = *std::max_element(e.begin(), e.end()) == 2;
    if (!square) {
      EXPECT_EQ(v[i], 0);
    } else if (scale == 0) {
      scale = v[i];
    } else {
      EXPECT_EQ(v[i], scale);
    }
  }
  EXPECT_NE(scale, 0);
  EXPECT_EQ(so_annihilator(3, primes).kernel_dimension, 0u);
}
