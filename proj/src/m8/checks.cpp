#include "eightfold/m8/checks.hpp"

#include <stdexcept>

#include "eightfold/exactcore/monomials.hpp"
#include "eightfold/tableaux/configuration.hpp"
#include "eightfold/tableaux/tableau.hpp"

namespace eightfold {

namespace {

Integer binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

// Hilbert function of the polynomial ring on 14 generators.
Integer ambient(long k) { return k < 0 ? Integer(0) : binomial(k + 13, 13); }

ExactMatrix coefficient_rows(const std::vector<SparsePolynomial>& polys, const MonomialIndex& mons) {
  ExactMatrix m(polys.size(), mons.size());
  for (std::size_t r = 0; r < polys.size(); ++r) {
    for (const auto& [e, c] : polys[r].terms()) m(r, mons.index(e)) = c;
  }
  return m;
}

}  // namespace

SingularLocusResult verify_m8_in_singular_locus(const KempeBasis& basis, const SparsePolynomial& form, int trials,
                                                std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("at least one trial required");
  std::vector<SparsePolynomial> partials;
  for (std::size_t v = 0; v < form.num_variables(); ++v) partials.push_back(form.derivative(v));

  SingularLocusResult out;
  out.trials = trials;
  RandomStream rng(seed, "m8-singular-locus");
  for (int t = 0; t < trials; ++t) {
    const auto x = kempe_coordinates(basis, sample_configuration(2, 8, rng));
    for (const auto& p : partials) {
      ++out.values_checked;
      if (p.evaluate(x) != 0) {
        ++out.nonzero_partials;
        if (out.first_failure < 0) out.first_failure = t;
      }
    }
    if (form.evaluate(x) != 0) ++out.nonzero_cubic;
  }

  RandomStream control(seed, "m8-negative-control");
  for (int attempt = 1; attempt <= 100 && !out.negative_control; ++attempt) {
    std::vector<Rational> x;
    for (std::size_t v = 0; v < form.num_variables(); ++v) x.emplace_back(control.uniform(-20, 20));
    out.negative_control_attempts = attempt;
    for (const auto& p : partials) {
      if (p.evaluate(x) != 0) {
        out.negative_control = true;
        break;
      }
    }
  }
  return out;
}

SyzygyResult verify_no_linear_syzygies(const SparsePolynomial& cubic, std::span<const std::uint32_t> primes) {
  const int n = static_cast<int>(cubic.num_variables());
  const MonomialIndex sym2(n, 2);
  const MonomialIndex sym3(n, 3);
  std::vector<SparsePolynomial> partials;
  for (int v = 0; v < n; ++v) partials.push_back(cubic.derivative(static_cast<std::size_t>(v)));
  std::vector<SparsePolynomial> products;
  for (int i = 0; i < n; ++i) {
    const auto xi = SparsePolynomial::variable(cubic.variable_set(), static_cast<std::size_t>(i));
    for (const auto& p : partials) products.push_back(xi * p);
  }
  SyzygyResult out;
  out.sym3_dimension = sym3.size();
  out.r3_dimension = count_ssyt(2, 8, 3);
  out.expected_rank = static_cast<std::size_t>(n * n);
  out.products = certified_rank(coefficient_rows(products, sym3), primes);
  out.partials = certified_rank(coefficient_rows(partials, sym2), primes);
  return out;
}

Integer line_hilbert_function(long k) {
  const Integer kk = k;
  Integer v = kk * kk * kk * kk * kk + 5 * kk * kk * kk * kk + 11 * kk * kk * kk + 13 * kk * kk + 9 * kk + 3;
  if (v % 3 != 0) throw std::logic_error("Hilbert formula is not integral");
  return v / 3;
}

HilbertReport hilbert_report(int max_k) {
  if (max_k < 5) throw std::invalid_argument("need at least degree 5 to bound the numerator");
  HilbertReport r;
  for (int k = 0; k <= max_k; ++k) {
    r.counts.push_back(count_ssyt(2, 8, k));
    r.formula.push_back(line_hilbert_function(k));
  }
  // Multiply the truncated series by (1 - t)^6.
  std::vector<Integer> h(r.counts.size());
  for (std::size_t k = 0; k < h.size(); ++k) {
    for (std::size_t j = 0; j <= std::min<std::size_t>(k, 6); ++j) {
      const Integer term = binomial(6, static_cast<long>(j)) * Integer(static_cast<unsigned long>(r.counts[k - j]));
      h[k] += j % 2 ? Integer(-term) : term;
    }
  }
  std::size_t last = 0;
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (h[k] != 0) last = k;
  }
  r.numerator.assign(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(last + 1));
  r.degree = 0;
  for (const auto& x : r.numerator) r.degree += x;
  r.a_invariant = static_cast<int>(last) - 6;
  r.palindromic = true;
  for (std::size_t i = 0; i <= last; ++i) r.palindromic = r.palindromic && r.numerator[i] == r.numerator[last - i];
  return r;
}

Integer BettiTable::at(int i, int j) const {
  const auto it = entries.find({i, j});
  return it == entries.end() ? Integer(0) : it->second;
}

BettiTable derive_betti_table(int check_to) {
  BettiTable b;
  b.entries[{0, 0}] = 1;
  b.entries[{1, 1}] = 14;
  // Mirror images of the known corners.
  b.entries[{7, 3}] = 14;
  b.entries[{8, 4}] = 1;

  auto f = [](long k) { return Integer(static_cast<unsigned long>(count_ssyt(2, 8, static_cast<int>(k)))); };
  auto known_sum = [&](long k) {
    Integer s = 0;
    for (const auto& [ij, v] : b.entries) {
      const Integer term = v * ambient(k - ij.first - ij.second);
      s += ij.first % 2 ? Integer(-term) : term;
    }
    return s;
  };

  // Unknowns b_{i,2} for i = 2..6 enter first at degree i + 2.
  ExactMatrix system(5, 5);
  std::vector<Rational> rhs(5);
  for (int r = 0; r < 5; ++r) {
    const long k = r + 4;
    for (int c = 0; c < 5; ++c) {
      const int i = c + 2;
      const Integer g = ambient(k - i - 2);
      system(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = i % 2 ? Rational(-g) : Rational(g);
    }
    rhs[static_cast<std::size_t>(r)] = Rational(f(k) - known_sum(k));
  }
  const auto middle = solve_triangular(system, rhs);
  for (int c = 0; c < 5; ++c) {
    if (middle[c].get_den() != 1 || middle[c] < 0) throw std::domain_error("Betti system has a non-natural solution");
    if (middle[c] != 0) b.entries[{c + 2, 2}] = middle[c].get_num();
  }

  b.symmetric = true;
  for (const auto& [ij, v] : b.entries) b.symmetric = b.symmetric && b.at(8 - ij.first, 4 - ij.second) == v;

  b.consistent = true;
  for (long k = 0; k <= check_to && b.consistent; ++k) {
    if (known_sum(k) != f(k)) {
      b.consistent = false;
    } else {
      b.checked_through = static_cast<int>(k);
    }
  }
  return b;
}

}  // namespace eightfold
