#include <gtest/gtest.h>

#include <random>

#include "eightfold/exactcore/matrix.hpp"
#include "eightfold/exactcore/modular.hpp"
#include "eightfold/exactcore/monomials.hpp"
#include "eightfold/exactcore/random.hpp"
#include "eightfold/exactcore/sparse_polynomial.hpp"
#include "eightfold/exactcore/univariate.hpp"

using namespace eightfold;

namespace {

VariableSet xy() { return make_variables({"x", "y"}); }

SparsePolynomial random_poly(const VariableSet& vars, RandomStream& rng, int terms, int max_exp) {
  SparsePolynomial p(vars);
  for (int t = 0; t < terms; ++t) {
    Exponent e(vars->size());
    for (auto& x : e) x = static_cast<std::uint16_t>(rng.uniform(0, max_exp));
    Rational c(rng.uniform(-9, 9), rng.uniform(1, 4));
    c.canonicalize();
    p.add_term(e, c);
  }
  return p;
}

SparsePolynomial random_homogeneous(const VariableSet& vars, RandomStream& rng, int terms, int degree) {
  SparsePolynomial p(vars);
  for (int t = 0; t < terms; ++t) {
    Exponent e(vars->size(), 0);
    for (int k = 0; k < degree; ++k) ++e[rng.uniform(0, static_cast<std::int64_t>(vars->size()) - 1)];
    p.add_term(e, Rational(rng.uniform(-9, 9)));
  }
  return p;
}

// Cofactor expansion; independent of the elimination code under test.
Rational cofactor_det(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Rational det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<Rational>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(row);
    }
    det += (j % 2 ? -1 : 1) * m[0][j] * cofactor_det(minor);
  }
  return det;
}

}  // namespace

TEST(SparsePolynomial, DifferenceOfSquares) {
  auto vars = xy();
  auto x = SparsePolynomial::variable(vars, "x");
  auto y = SparsePolynomial::variable(vars, "y");
  EXPECT_EQ((x + y) * (x - y), x * x - y * y);
}

TEST(SparsePolynomial, ProductWithZero) {
  auto vars = xy();
  auto p = SparsePolynomial::variable(vars, "x") * SparsePolynomial::variable(vars, "y");
  EXPECT_TRUE((p * SparsePolynomial(vars)).is_zero());
}

TEST(SparsePolynomial, CubicSummandExpansion) {
  auto vars = make_variables({"X1", "X2"});
  auto x1 = SparsePolynomial::variable(vars, "X1");
  auto x2 = SparsePolynomial::variable(vars, "X2");
  EXPECT_EQ((x1 + x2) * (x1 * x2), x1 * x1 * x2 + x1 * x2 * x2);
}

TEST(SparsePolynomial, MismatchedVariablesThrow) {
  auto a = SparsePolynomial::variable(xy(), "x");
  auto b = SparsePolynomial::variable(make_variables({"u", "v"}), "u");
  EXPECT_THROW(a + b, std::invalid_argument);
  EXPECT_THROW(a * b, std::invalid_argument);
}

TEST(SparsePolynomial, Derivatives) {
  auto vars = xy();
  auto x = SparsePolynomial::variable(vars, "x");
  EXPECT_EQ((x * x * x).derivative("x"), Rational(3) * x * x);
  EXPECT_TRUE(SparsePolynomial::constant(vars, 7).derivative("x").is_zero());
  EXPECT_THROW(x.derivative("z"), std::out_of_range);
}

TEST(SparsePolynomial, Evaluate) {
  auto vars = xy();
  auto x = SparsePolynomial::variable(vars, "x");
  auto y = SparsePolynomial::variable(vars, "y");
  auto p = x * x + y * y;
  EXPECT_EQ(p.evaluate({{"x", Rational(3)}, {"y", Rational(4)}}), 25);
  EXPECT_THROW(p.evaluate({{"x", Rational(3)}}), std::invalid_argument);
}

TEST(SparsePolynomial, HomogeneousScaling) {
  RandomStream rng(7, "scaling");
  auto vars = make_variables({"a", "b", "c", "d"});
  for (int trial = 0; trial < 20; ++trial) {
    const int d = static_cast<int>(rng.uniform(1, 5));
    auto p = random_homogeneous(vars, rng, 6, d);
    std::vector<Rational> pt, scaled;
    for (int i = 0; i < 4; ++i) {
      pt.emplace_back(rng.uniform(-5, 5));
      scaled.push_back(2 * pt.back());
    }
    EXPECT_EQ(p.evaluate(scaled), pow(Rational(2), d) * p.evaluate(pt));
  }
}

TEST(SparsePolynomial, LeibnizRule) {
  RandomStream rng(11, "leibniz");
  auto vars = make_variables({"a", "b", "c"});
  for (int trial = 0; trial < 30; ++trial) {
    auto p = random_poly(vars, rng, 5, 3);
    auto q = random_poly(vars, rng, 5, 3);
    for (std::size_t v = 0; v < 3; ++v) {
      EXPECT_EQ((p * q).derivative(v), p * q.derivative(v) + q * p.derivative(v));
    }
  }
}

TEST(SparsePolynomial, EulerIdentity) {
  RandomStream rng(13, "euler");
  auto vars = make_variables({"a", "b", "c", "d", "e"});
  for (int trial = 0; trial < 20; ++trial) {
    const int d = static_cast<int>(rng.uniform(1, 4));
    auto p = random_homogeneous(vars, rng, 8, d);
    SparsePolynomial sum(vars);
    for (std::size_t v = 0; v < 5; ++v) sum += SparsePolynomial::variable(vars, v) * p.derivative(v);
    EXPECT_EQ(sum, Rational(d) * p);
  }
}

TEST(SparsePolynomial, CanonicalOrderIsGradedReverseLex) {
  auto vars = make_variables({"x", "y", "z"});
  auto x = SparsePolynomial::variable(vars, 0);
  auto y = SparsePolynomial::variable(vars, 1);
  auto z = SparsePolynomial::variable(vars, 2);
  auto p = z * z + x * z + y * y + x * y + x * x + x;
  std::vector<Exponent> order;
  for (const auto& [e, c] : p.terms()) order.push_back(e);
  const std::vector<Exponent> expected{{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {1, 0, 1}, {0, 0, 2}, {1, 0, 0}};
  EXPECT_EQ(order, expected);
}

TEST(SparsePolynomial, CanonicalFileRoundTrip) {
  RandomStream rng(17, "roundtrip");
  auto vars = make_variables({"X1", "X2", "Y1"});
  for (int trial = 0; trial < 10; ++trial) {
    auto p = random_poly(vars, rng, 7, 4);
    const std::string text = write_canonical(p);
    EXPECT_EQ(read_canonical(text), p);
    EXPECT_EQ(write_canonical(read_canonical(text)), text);
  }
  EXPECT_EQ(write_canonical(SparsePolynomial::variable(vars, 0) * Rational(-3, 2)), "vars\tX1,X2,Y1\n-3/2\t1,0,0\n");
}

TEST(SparsePolynomial, CanonicalFileRejectsMalformedInput) {
  EXPECT_THROW(read_canonical("1\t1,0\n"), std::invalid_argument);
  EXPECT_THROW(read_canonical("vars\tx,y\n1\t1\n"), std::invalid_argument);
  EXPECT_THROW(read_canonical("vars\tx,y\n0\t1,0\n"), std::invalid_argument);
  // y before x^2 violates the graded order
  EXPECT_THROW(read_canonical("vars\tx,y\n1\t0,1\n1\t2,0\n"), std::invalid_argument);
}

TEST(SparsePolynomial, SubstituteLinearForms) {
  auto vars = xy();
  auto x = SparsePolynomial::variable(vars, "x");
  auto y = SparsePolynomial::variable(vars, "y");
  auto p = x * x * y;
  std::vector<SparsePolynomial> images{x + y, x - y};
  EXPECT_EQ(p.substitute(images), (x + y) * (x + y) * (x - y));
}

TEST(Univariate, ResultantExamples) {
  UnivariatePolynomial x_minus_1({Rational(-1), Rational(1)});
  EXPECT_EQ(resultant(x_minus_1, x_minus_1), 0);
  // Sylvester determinant with f's rows first gives a - b for (x - a, x - b).
  UnivariatePolynomial xa({Rational(-5), Rational(1)});
  UnivariatePolynomial xb({Rational(-2), Rational(1)});
  EXPECT_EQ(resultant(xa, xb), Rational(5 - 2));

  UnivariatePolynomial f({Rational(-2), Rational(0), Rational(1)});
  UnivariatePolynomial g({Rational(-3), Rational(0), Rational(1)});
  const std::vector<std::vector<Rational>> sylvester{
      {1, 0, -2, 0}, {0, 1, 0, -2}, {1, 0, -3, 0}, {0, 1, 0, -3}};
  const Rational oracle = cofactor_det(sylvester);
  EXPECT_EQ(oracle, 1);
  EXPECT_EQ(resultant(f, g), oracle);
  EXPECT_THROW(resultant(UnivariatePolynomial{}, f), std::invalid_argument);
}

TEST(Univariate, ResultantVanishesExactlyOnCommonFactor) {
  RandomStream rng(19, "resultant");
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> a, b, c;
    for (int k = 0; k < 3; ++k) a.emplace_back(rng.uniform(-6, 6));
    a.emplace_back(1);
    for (int k = 0; k < 2; ++k) b.emplace_back(rng.uniform(-6, 6));
    b.emplace_back(1);
    c = {Rational(rng.uniform(-6, 6)), Rational(1)};
    UnivariatePolynomial fa(a), fb(b), shared(c);
    EXPECT_EQ(resultant(fa * shared, fb * shared), 0);
    const bool coprime = gcd(fa, fb).degree() == 0;
    EXPECT_EQ(resultant(fa, fb) != 0, coprime);
  }
}

TEST(Univariate, SquarefreePart) {
  UnivariatePolynomial x_minus_1({Rational(-1), Rational(1)});
  EXPECT_EQ(squarefree_part(x_minus_1 * x_minus_1), x_minus_1);
  UnivariatePolynomial sqfree({Rational(6), Rational(-10), Rational(4)});
  EXPECT_EQ(squarefree_part(sqfree), sqfree.monic());
  // x^4 - 2x^2 + 1 = (x^2 - 1)^2
  UnivariatePolynomial quartic({Rational(1), Rational(0), Rational(-2), Rational(0), Rational(1)});
  EXPECT_EQ(squarefree_part(quartic), UnivariatePolynomial({Rational(-1), Rational(0), Rational(1)}));
  EXPECT_THROW(squarefree_part(UnivariatePolynomial{}), std::invalid_argument);
}

TEST(Univariate, Interpolation) {
  std::vector<std::pair<Rational, Rational>> constant{{0, 1}, {1, 1}};
  EXPECT_EQ(interpolate(constant), UnivariatePolynomial({Rational(1)}));
  std::vector<std::pair<Rational, Rational>> square{{0, 0}, {1, 1}, {2, 4}};
  EXPECT_EQ(interpolate(square), UnivariatePolynomial({Rational(0), Rational(0), Rational(1)}));
  std::vector<std::pair<Rational, Rational>> repeated{{1, 0}, {1, 2}};
  EXPECT_THROW(interpolate(repeated), std::invalid_argument);

  UnivariatePolynomial target({Rational(3), Rational(-1, 2), Rational(0), Rational(7), Rational(2)});
  std::vector<Rational> values;
  for (int i = 0; i < 6; ++i) values.push_back(target.evaluate(i));
  auto fit = interpolate_consecutive(std::span<const Rational>(values).first(5));
  EXPECT_EQ(fit.evaluate(5), values[5]);
  EXPECT_EQ(fit, target);
}

TEST(Univariate, FactorDegreePattern) {
  // (x^2 + 1)(x - 1)(x - 2) over F_7: x^2 + 1 is irreducible since 7 = 3 mod 4.
  UnivariatePolynomial q({Rational(1), Rational(0), Rational(1)});
  UnivariatePolynomial l1({Rational(-1), Rational(1)});
  UnivariatePolynomial l2({Rational(-2), Rational(1)});
  EXPECT_EQ(factor_degree_pattern(reduce_mod(q * l1 * l2, 7)), (std::vector<int>{1, 1, 2}));
  // x^5 - x - 1 is irreducible over F_5 (Artin-Schreier).
  UnivariatePolynomial as({Rational(-1), Rational(-1), Rational(0), Rational(0), Rational(0), Rational(1)});
  EXPECT_EQ(factor_degree_pattern(reduce_mod(as, 5)), (std::vector<int>{5}));
  EXPECT_THROW(factor_degree_pattern(reduce_mod(l1 * l1, 7)), std::invalid_argument);
}

TEST(Matrix, RankExamples) {
  EXPECT_EQ(rank(ExactMatrix::identity(6)), 6u);
  ExactMatrix outer(4, 5);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 5; ++j) outer(i, j) = Rational(static_cast<long>(i + 1) * static_cast<long>(j + 2), 3);
  }
  EXPECT_EQ(rank(outer), 1u);
  for (auto p : default_primes()) EXPECT_EQ(rank(ModularMatrix::reduce(outer, p)), 1u);
}

TEST(Matrix, ModularRankOfElementaryProduct) {
  const std::uint32_t p = default_primes().front();
  PrimeField f(p);
  RandomStream rng(23, "elementary");
  // Product of elementary matrices: invertible by construction.
  ModularMatrix m(5, 5, p);
  for (std::size_t i = 0; i < 5; ++i) m(i, i) = 1;
  for (int step = 0; step < 40; ++step) {
    const auto i = static_cast<std::size_t>(rng.uniform(0, 4));
    auto j = static_cast<std::size_t>(rng.uniform(0, 4));
    if (i == j) j = (j + 1) % 5;
    const auto factor = static_cast<std::uint32_t>(rng.uniform(1, p - 1));
    for (std::size_t c = 0; c < 5; ++c) m(i, c) = f.add(m(i, c), f.mul(factor, m(j, c)));
  }
  EXPECT_EQ(rank(m), 5u);
}

TEST(Matrix, DefaultPrimesAreTheTwoLargestBelow2To31) {
  const auto primes = default_primes();
  ASSERT_EQ(primes.size(), 2u);
  EXPECT_EQ(primes[0], 2147483647u);
  for (std::uint64_t n = primes[1] + 1; n < primes[0]; ++n) EXPECT_FALSE(is_prime(n));
  EXPECT_TRUE(is_prime(primes[1]));
}

TEST(Matrix, Determinant) {
  RandomStream rng(29, "det");
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
    ExactMatrix m(n, n);
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational q(rng.uniform(-7, 7), rng.uniform(1, 3));
        q.canonicalize();
        rows[i][j] = m(i, j) = q;
      }
    }
    EXPECT_EQ(determinant(m), cofactor_det(rows));
  }
}

TEST(Matrix, SolveTriangular) {
  auto id = ExactMatrix::identity(3);
  std::vector<Rational> rhs{4, -1, Rational(1, 2)};
  EXPECT_EQ(solve_triangular(id, rhs), rhs);
  ExactMatrix upper(2, 2);
  upper(0, 0) = 1;
  upper(0, 1) = 1;
  upper(1, 1) = 1;
  std::vector<Rational> b{3, 1};
  EXPECT_EQ(solve_triangular(upper, b), (std::vector<Rational>{2, 1}));
  ExactMatrix singular(2, 2);
  singular(0, 0) = 1;
  EXPECT_THROW(solve_triangular(singular, b), std::domain_error);
  ExactMatrix full(2, 2);
  full(0, 0) = full(0, 1) = full(1, 0) = full(1, 1) = 1;
  EXPECT_THROW(solve_triangular(full, b), std::invalid_argument);
}

TEST(Matrix, KernelBasis) {
  ExactMatrix m(2, 4);
  const int vals[2][4] = {{1, 2, 0, -1}, {0, 0, 1, 3}};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 4; ++j) m(i, j) = vals[i][j];
  }
  const auto ker = kernel_basis(m);
  ASSERT_EQ(ker.size(), 2u);
  for (const auto& v : ker) {
    for (int i = 0; i < 2; ++i) {
      Rational s = 0;
      for (int j = 0; j < 4; ++j) s += m(i, j) * v[j];
      EXPECT_EQ(s, 0);
    }
  }
}

TEST(Matrix, CertifiedRankAgreesAcrossPrimes) {
  RandomStream rng(31, "cert");
  ExactMatrix m(6, 8);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 8; ++j) m(i, j) = rng.uniform(-9, 9);
  }
  for (std::size_t j = 0; j < 8; ++j) {
    m(4, j) = m(0, j) + 2 * m(1, j);
    m(5, j) = m(2, j) - m(3, j);
  }
  const auto primes = default_primes();
  const auto cert = certified_rank(m, primes);
  EXPECT_EQ(cert.rank, 4u);
  EXPECT_FALSE(cert.exact_recomputed);
  EXPECT_EQ(cert.rank, rank(m));
}

TEST(Monomials, CountsAndTables) {
  MonomialIndex deg3(14, 3);
  EXPECT_EQ(deg3.size(), 560u);
  EXPECT_EQ(monomial_count(14, 5), 8568u);
  MonomialIndex deg4(14, 4);
  const auto table = deg3.times_variable_table(deg4);
  Exponent e = deg3.exponent(17);
  ++e[5];
  EXPECT_EQ(table[17 * 14 + 5], deg4.index(e));
}
