#include <gtest/gtest.h>

#include "eightfold/exactcore/matrix.hpp"
#include "eightfold/tableaux/configuration.hpp"
#include "eightfold/tableaux/matching.hpp"
#include "eightfold/tableaux/tableau.hpp"

using namespace eightfold;

namespace {

Tableau canonical(int m, int n, const std::vector<std::vector<int>>& cols) {
  auto t = normalize(m, n, cols);
  EXPECT_TRUE(t.has_value());
  EXPECT_EQ(t->sign, 1);
  return t->tableau;
}

std::vector<Configuration> configurations(int m, int n, int count, const char* stream) {
  RandomStream rng(2024, stream);
  std::vector<Configuration> out;
  for (int i = 0; i < count; ++i) out.push_back(sample_configuration(m, n, rng));
  return out;
}

Rational det2(const Configuration& c, int i, int j) {
  const auto& p = c.point(i - 1);
  const auto& q = c.point(j - 1);
  return p[0] * q[1] - q[0] * p[1];
}

}  // namespace

TEST(Normalize, CanonicalInputIsUnchanged) {
  auto t = normalize(2, 4, {{1, 2}, {3, 4}});
  ASSERT_TRUE(t);
  EXPECT_EQ(t->sign, 1);
  EXPECT_EQ(t->tableau.to_string(), "1 3 / 2 4");
}

TEST(Normalize, SwappingColumnEntriesFlipsSign) {
  auto t = normalize(2, 2, {{2, 1}});
  ASSERT_TRUE(t);
  EXPECT_EQ(t->sign, -1);
  EXPECT_EQ(t->tableau.column(0)[0], 1);
  EXPECT_EQ(t->tableau.column(0)[1], 2);
}

TEST(Normalize, ColumnOrderCarriesNoSign) {
  auto a = normalize(2, 4, {{3, 4}, {1, 2}});
  auto b = normalize(2, 4, {{1, 2}, {3, 4}});
  ASSERT_TRUE(a && b);
  EXPECT_EQ(a->sign, 1);
  EXPECT_EQ(a->tableau, b->tableau);
}

TEST(Normalize, RepeatedEntryIsZeroInvariant) {
  EXPECT_FALSE(normalize(2, 3, {{3, 3}, {1, 2}, {1, 2}}).has_value());
}

TEST(Normalize, RejectsBadMultiplicities) {
  EXPECT_THROW(normalize(2, 4, {{1, 2}, {1, 4}}), std::invalid_argument);
  EXPECT_THROW(normalize(2, 4, {{1, 2, 3}}), std::invalid_argument);
}

TEST(Evaluate, WorkedExampleAtIntegerPoints) {
  Configuration c({{1, 0}, {0, 1}, {1, 1}, {1, 2}});
  auto t = normalize(2, 4, {{1, 3}, {2, 3}, {1, 4}, {4, 2}});
  ASSERT_TRUE(t);
  const Rational oracle = det2(c, 1, 3) * det2(c, 2, 3) * det2(c, 1, 4) * (-det2(c, 2, 4));
  EXPECT_EQ(oracle, -2);
  EXPECT_EQ(t->sign * evaluate_invariant(t->tableau, c), oracle);
  EXPECT_EQ(t->sign * BracketTable(c).evaluate(t->tableau), oracle);
}

TEST(Evaluate, EqualPointsInOneColumnGiveZero) {
  Configuration c({{1, 2}, {1, 2}, {3, 1}, {0, 1}});
  EXPECT_EQ(evaluate_invariant(canonical(2, 4, {{1, 2}, {3, 4}}), c), 0);
}

TEST(Evaluate, ScalingOnePoint) {
  auto configs = configurations(4, 8, 3, "scaling");
  auto t = list_ssyt(4, 8, 2)[57];
  for (const auto& c : configs) {
    std::vector<std::vector<Rational>> pts;
    for (int i = 0; i < 8; ++i) pts.push_back(c.point(i));
    for (auto& x : pts[4]) x *= 3;
    EXPECT_EQ(evaluate_invariant(t, Configuration(pts)), 9 * evaluate_invariant(t, c));
  }
}

TEST(Evaluate, DimensionMismatchThrows) {
  auto c = sample_configuration(3, 6, 1);
  EXPECT_THROW(evaluate_invariant(canonical(2, 4, {{1, 2}, {3, 4}}), c), std::invalid_argument);
}

TEST(Straighten, SemistandardIsFixed) {
  auto t = canonical(2, 4, {{1, 2}, {3, 4}});
  EXPECT_EQ(straighten(TableauSum(t)), TableauSum(t));
}

TEST(Straighten, CrossingResolutionAgreesWithEvaluation) {
  auto crossing = canonical(2, 4, {{1, 3}, {2, 4}});
  TableauSum resolved(canonical(2, 4, {{1, 2}, {3, 4}}));
  resolved += TableauSum(canonical(2, 4, {{1, 4}, {2, 3}}));
  const auto s = straighten(TableauSum(crossing));
  EXPECT_TRUE(s.is_semistandard());
  EXPECT_EQ(s, straighten(resolved));
  for (const auto& c : configurations(2, 4, 20, "crossing")) {
    EXPECT_EQ(evaluate_invariant(crossing, c), evaluate_invariant(resolved, c));
    EXPECT_EQ(evaluate_invariant(crossing, c), evaluate_invariant(s, c));
  }
}

TEST(Straighten, FourRowDegreeTwoAgreesWithEvaluation) {
  RandomStream rng(5, "fourrow");
  const auto configs = configurations(4, 8, 20, "fourrow-configs");
  Straightener st;
  int checked = 0;
  while (checked < 15) {
    std::vector<int> labels{1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7, 8, 8};
    for (int i = 15; i > 0; --i) std::swap(labels[i], labels[rng.uniform(0, i)]);
    std::vector<std::vector<int>> cols(4);
    for (int i = 0; i < 16; ++i) cols[i / 4].push_back(labels[i]);
    auto t = normalize(4, 8, cols);
    if (!t || t->tableau.is_semistandard()) continue;
    ++checked;
    const auto& s = st.straighten(t->tableau);
    EXPECT_TRUE(s.is_semistandard());
    EXPECT_EQ(st.straighten(s), s);
    for (const auto& c : configs) EXPECT_EQ(evaluate_invariant(t->tableau, c), evaluate_invariant(s, c));
  }
}

TEST(Straighten, ThreeRowDegreeThreeAgreesWithEvaluation) {
  RandomStream rng(9, "threerow");
  const auto configs = configurations(3, 6, 10, "threerow-configs");
  Straightener st;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<int> labels;
    for (int v = 1; v <= 6; ++v) labels.insert(labels.end(), 3, v);
    for (int i = 17; i > 0; --i) std::swap(labels[i], labels[rng.uniform(0, i)]);
    std::vector<std::vector<int>> cols(6);
    for (int i = 0; i < 18; ++i) cols[i / 3].push_back(labels[i]);
    auto t = normalize(3, 6, cols);
    if (!t) continue;
    const auto& s = st.straighten(t->tableau);
    EXPECT_TRUE(s.is_semistandard());
    for (const auto& c : configs) EXPECT_EQ(evaluate_invariant(t->tableau, c), evaluate_invariant(s, c));
  }
}

TEST(Ssyt, CountsForEightPoints) {
  EXPECT_EQ(count_ssyt(2, 8, 1), 14u);
  EXPECT_EQ(count_ssyt(4, 8, 1), 14u);
  EXPECT_EQ(count_ssyt(2, 8, 2), 91u);
  EXPECT_EQ(count_ssyt(2, 8, 3), 364u);
  EXPECT_EQ(count_ssyt(4, 8, 2), 126u);
  EXPECT_EQ(count_ssyt(4, 8, 3), 790u);
  EXPECT_EQ(count_ssyt(4, 8, 4), 3731u);
  EXPECT_THROW(count_ssyt(3, 8, 1), std::invalid_argument);
}

TEST(Ssyt, LineHilbertPolynomial) {
  for (long k = 0; k <= 4; ++k) {
    const long f = (k * k * k * k * k + 5 * k * k * k * k + 11 * k * k * k + 13 * k * k + 9 * k + 3) / 3;
    EXPECT_EQ(count_ssyt(2, 8, static_cast<int>(k)), static_cast<std::uint64_t>(f));
  }
}

TEST(Ssyt, EnumerationMatchesCountAndIsSemistandard) {
  std::size_t seen = 0;
  enumerate_ssyt(4, 8, 2, [&](const Tableau& t) {
    ++seen;
    EXPECT_TRUE(t.is_semistandard());
    EXPECT_EQ(t.degree(), 2);
  });
  EXPECT_EQ(seen, 126u);
  const auto listed = list_ssyt(4, 8, 2);
  EXPECT_TRUE(std::adjacent_find(listed.begin(), listed.end()) == listed.end());
}

TEST(Matchings, Counts) {
  EXPECT_EQ(all_matchings(8).size(), 105u);
  EXPECT_EQ(noncrossing_matchings(8).size(), 14u);
}

TEST(Matchings, ParseAndPrint) {
  auto g = Matching::parse(8, "5-1 2-6 3-7 4-8");
  EXPECT_EQ(g.to_string(), "1-5 2-6 3-7 4-8");
  EXPECT_THROW(Matching::parse(8, "1-2 2-3 4-5 6-7"), std::invalid_argument);
}

TEST(Matchings, NoncrossingExpandsToItself) {
  const auto basis = noncrossing_matchings(8);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto t = matching_to_tableau(basis[i]);
    const auto v = expand_in_matching_basis(TableauSum(t.tableau, t.sign), basis);
    for (std::size_t j = 0; j < basis.size(); ++j) EXPECT_EQ(v[j], i == j ? 1 : 0);
  }
}

TEST(Matchings, FullyCrossingExpansionAgreesWithEvaluation) {
  const auto basis = noncrossing_matchings(8);
  auto g = Matching::parse(8, "1-5 2-6 3-7 4-8");
  auto t = matching_to_tableau(g);
  const auto v = expand_in_matching_basis(TableauSum(t.tableau, t.sign), basis);
  for (const auto& x : v) EXPECT_TRUE(x.get_den() == 1);
  for (const auto& c : configurations(2, 8, 20, "fullcross")) {
    Rational sum = 0;
    for (std::size_t j = 0; j < basis.size(); ++j) sum += v[j] * evaluate_invariant(matching_to_tableau(basis[j]).tableau, c);
    EXPECT_EQ(sum, t.sign * evaluate_invariant(t.tableau, c));
  }
}

TEST(Matchings, NoncrossingInvariantsAreIndependent) {
  const auto basis = noncrossing_matchings(8);
  const auto configs = configurations(2, 8, 20, "independence");
  ExactMatrix m(14, 20);
  for (std::size_t i = 0; i < 14; ++i) {
    for (std::size_t j = 0; j < 20; ++j) m(i, j) = evaluate_invariant(matching_to_tableau(basis[i]).tableau, configs[j]);
  }
  EXPECT_EQ(rank(m), 14u);
}

TEST(Matchings, RelabelReorientsEdges) {
  auto g = Matching::parse(4, "1-2 3-4");
  const std::vector<int> swap12{2, 1, 3, 4};
  auto [sign, h] = relabel(g, swap12);
  EXPECT_EQ(sign, -1);
  EXPECT_EQ(h, g);
}

TEST(Sampling, DeterministicAndSeedSensitive) {
  auto a = sample_configuration(2, 8, 42);
  auto b = sample_configuration(2, 8, 42);
  auto c = sample_configuration(2, 8, 43);
  bool same = true;
  bool differ = false;
  for (int i = 0; i < 8; ++i) {
    same = same && a.point(i) == b.point(i);
    differ = differ || a.point(i) != c.point(i);
  }
  EXPECT_TRUE(same);
  EXPECT_TRUE(differ);
}

TEST(Sampling, DegreeOneInvariantsNonzero) {
  auto c = sample_configuration(2, 8, 7);
  for (const auto& g : noncrossing_matchings(8)) EXPECT_NE(evaluate_invariant(matching_to_tableau(g).tableau, c), 0);
  auto d = sample_configuration(4, 8, 7);
  for (const auto& t : list_ssyt(4, 8, 1)) EXPECT_NE(evaluate_invariant(t, d), 0);
}
