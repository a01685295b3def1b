#include <gtest/gtest.h>

#include "eightfold/exactcore/modular.hpp"
#include "eightfold/n8/generators.hpp"
#include "eightfold/n8/quintic.hpp"
#include "eightfold/n8/ranks.hpp"
#include "eightfold/n8/secant_identity.hpp"
#include "eightfold/symrep/permutations.hpp"

using namespace eightfold;

namespace {

Tableau tableau(const std::vector<std::vector<int>>& columns) { return normalize(4, 8, columns)->tableau; }

const QuinticConstruction& quintic() {
  static const QuinticConstruction q = construct_skew_quintic(1);
  return q;
}

Permutation identity8() { return compose(rotation(8), inverse(rotation(8))); }

}  // namespace

TEST(Gale, Degree1TableauxAreFixed) {
  ASSERT_EQ(n8_degree1_basis().size(), 14u);
  EXPECT_EQ(n8_names().front(), "N1234");
  for (const auto& t : n8_degree1_basis()) {
    const auto g = gale_dual(t);
    EXPECT_EQ(g.tableau, t);
    EXPECT_EQ(g.sign, 1);
  }
}

TEST(Gale, FixesSelfComplementaryTableau) {
  // The complements of the four columns are the same four columns.
  const auto t = tableau({{1, 2, 3, 5}, {1, 2, 3, 4}, {4, 6, 7, 8}, {5, 6, 7, 8}});
  const auto g = gale_dual(t);
  EXPECT_EQ(g.tableau, tableau({{4, 6, 7, 8}, {5, 6, 7, 8}, {1, 2, 3, 5}, {1, 2, 3, 4}}));
  EXPECT_EQ(g.sign, 1);
  const auto u = tableau({{1, 2, 3, 5}, {4, 6, 7, 8}});
  EXPECT_EQ(gale_dual(u).sign, 1);
}

TEST(Gale, IsAnInvolution) {
  for (const auto& t : list_ssyt(4, 8, 2)) {
    const auto once = gale_dual(t);
    const auto twice = gale_dual(once.tableau);
    EXPECT_EQ(twice.tableau, t);
    EXPECT_EQ(once.sign * twice.sign, 1);
  }
}

TEST(Gale, Degree2Analysis) {
  const auto r = degree2_gale_analysis(default_primes(), 3);
  EXPECT_EQ(r.degree1_fixed_positive, 14u);
  EXPECT_EQ(r.degree2_total, 126u);
  EXPECT_EQ(r.moved, 42u);
  EXPECT_EQ(r.pairs.size(), 21u);
  EXPECT_EQ(r.fixed, 84u);
  EXPECT_EQ(r.fixed_with_negative_sign, 0u);
  EXPECT_TRUE(r.involution);
  EXPECT_EQ(r.plus_eigenspace, 105u);
  EXPECT_EQ(r.minus_eigenspace, 21u);
  EXPECT_EQ(r.quotient_dimension, 21u);
  EXPECT_EQ(r.configurations, 130u);
  EXPECT_EQ(r.products.rank, 105u);
  for (const auto& p : r.pairs) EXPECT_EQ(p.sign, 1);
}

TEST(Series, TableauCountsAndNumerator) {
  const auto s = n8_series_report(8);
  EXPECT_EQ(std::vector<std::uint64_t>(s.counts.begin(), s.counts.begin() + 5),
            (std::vector<std::uint64_t>{1, 14, 126, 790, 3731}));
  EXPECT_EQ(s.numerator, (std::vector<Integer>{1, 4, 31, 40, 31, 4, 1}));
  EXPECT_EQ(s.a_invariant, -4);
  EXPECT_TRUE(s.palindromic);
}

TEST(Action, MatchesGroupLaw) {
  Straightener st;
  RandomStream rng(2, "n8-action");
  const auto g = random_permutation(8, rng);
  const auto h = random_permutation(8, rng);
  EXPECT_EQ(n8_action(compose(g, h), st), n8_action(g, st) * n8_action(h, st));
  EXPECT_EQ(n8_action(identity8(), st), ExactMatrix::identity(14));
}

TEST(Generation, DegreeTwoNeedsTheGalePairs) {
  const auto primes = default_primes();
  const auto only1 = symmetric_power_rank(2, primes, 4);
  EXPECT_EQ(only1.rank, 105u);
  EXPECT_TRUE(only1.primes_agree);
  const auto both = generation_rank(2, primes, 4);
  EXPECT_EQ(both.rank, 126u);
}

TEST(Generation, DegreeThree) {
  const auto r = generation_rank(3, default_primes(), 4);
  EXPECT_EQ(r.rows, 854u);
  EXPECT_EQ(r.target, 790u);
  EXPECT_EQ(r.ranks, (std::vector<std::size_t>{790, 790}));
}

TEST(NPrime, LowDegreesHaveNoRelations) {
  const auto r = nprime_hilbert_report(default_primes(), 5, 3);
  ASSERT_EQ(r.ranks.size(), 3u);
  EXPECT_EQ(r.ranks[0].rank, 14u);
  EXPECT_EQ(r.ranks[1].rank, 105u);
  EXPECT_EQ(r.ranks[2].rank, 560u);
  EXPECT_EQ(r.ideal_dimensions, (std::vector<std::size_t>{0, 0, 0}));
  EXPECT_EQ(r.numerator, (std::vector<long long>{1, 4, 10, 20}));
}

TEST(Quintic, SpanKernelAndNormalization) {
  const auto& q = quintic();
  EXPECT_EQ(q.character_multiplicity, 4u);
  EXPECT_EQ(q.skew_dimension, 4u);
  EXPECT_EQ(q.kernel_dimension, 1u);
  ASSERT_FALSE(q.quintic.is_zero());
  EXPECT_TRUE(q.quintic.is_homogeneous());
  EXPECT_EQ(q.quintic.degree(), 5);
  EXPECT_GT(q.quintic.terms().begin()->second, 0);
  for (const auto& [e, c] : q.quintic.terms()) EXPECT_EQ(c.get_den(), 1);
}

TEST(Quintic, IsSkew) {
  const auto& q = quintic().quintic;
  EXPECT_EQ(n8_act(q, rotation(8)), Rational(-1) * q);
  EXPECT_EQ(n8_act(q, transposition(8, 1, 2)), Rational(-1) * q);
  EXPECT_EQ(n8_act(q, transposition(8, 3, 6)), Rational(-1) * q);
}

TEST(Quintic, IndependentOfSeed) {
  EXPECT_EQ(construct_skew_quintic(2).quintic, quintic().quintic);
  EXPECT_EQ(construct_skew_quintic(3).quintic, quintic().quintic);
}

TEST(Quintic, SingularAlongTheQuotient) {
  const auto r = verify_quintic_singular(quintic().quintic, 50, 9);
  EXPECT_EQ(r.values_checked, 700u);
  EXPECT_EQ(r.nonzero_partials, 0u);
  EXPECT_EQ(r.nonzero_values, 0u);
  EXPECT_TRUE(r.negative_control);
}

TEST(Quintic, PerturbedFormIsNotSingular) {
  const auto vars = n8_variables();
  const auto x = SparsePolynomial::variable(vars, 0);
  const auto bad = quintic().quintic + x * x * x * x * x;
  EXPECT_GT(verify_quintic_singular(bad, 3, 9).nonzero_partials, 0u);
}

TEST(Secant, IdentityHolds) {
  const auto r = verify_secant_identity(100, 6);
  EXPECT_EQ(r.mismatches, 0);
  EXPECT_EQ(r.nonzero_samples, 100);
  EXPECT_EQ(r.translate_mismatches, 0);
  EXPECT_TRUE(r.zero_at_origin);
  EXPECT_EQ(r.swap_mismatches, 0);
}

TEST(Secant, WorkedValues) {
  const std::vector<Rational> p{0, 1, 2, 3, 4, 5, 6, 7};
  const std::vector<Rational> q{0, 1, 4, 9, 16, 25, 36, 49};
  const auto id = identity8();
  EXPECT_EQ(secant_left(p, q, 0, id), 0);
  EXPECT_EQ(secant_left(p, q, 2, id), secant_right(p, q, 2, id));
  EXPECT_NE(secant_left(p, q, 2, id), -secant_right(p, q, 2, id));
}
