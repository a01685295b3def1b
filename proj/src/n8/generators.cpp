#include "eightfold/n8/generators.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "eightfold/exactcore/random.hpp"
#include "eightfold/tableaux/configuration.hpp"

namespace eightfold {

namespace {

Integer binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer as_integer(const Rational& q) {
  if (q.get_den() != 1) throw std::logic_error("invariant value is not integral");
  return q.get_num();
}

}  // namespace

const std::vector<Tableau>& n8_degree1_basis() {
  static const std::vector<Tableau> basis = list_ssyt(4, 8, 1);
  return basis;
}

const std::vector<std::string>& n8_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& t : n8_degree1_basis()) {
      std::string s = "N";
      for (auto e : t.column(0)) s += static_cast<char>('0' + e);
      out.push_back(s);
    }
    return out;
  }();
  return names;
}

VariableSet n8_variables() {
  static const VariableSet vars = make_variables(n8_names());
  return vars;
}

SignedTableau gale_dual(const Tableau& t) {
  if (t.rows() != 4 || t.points() != 8) throw std::invalid_argument("Gale duality needs 4-row tableaux on 8 labels");
  std::vector<std::uint8_t> raw;
  int sign = 1;
  for (int c = 0; c < t.columns(); ++c) {
    const auto col = t.column(c);
    Permutation word(col.begin(), col.end());
    for (int i = 1; i <= 8; ++i) {
      if (std::find(col.begin(), col.end(), i) == col.end()) {
        word.push_back(i);
        raw.push_back(static_cast<std::uint8_t>(i));
      }
    }
    sign *= permutation_sign(word);
  }
  auto image = normalize_raw(4, 8, raw);
  if (!image) throw std::logic_error("complemented columns repeat an entry");
  image->sign *= sign;
  return *image;
}

std::vector<GalePair> gale_pairs_degree2() {
  std::vector<GalePair> out;
  for (const auto& t : list_ssyt(4, 8, 2)) {
    const auto image = gale_dual(t);
    if (t < image.tableau) out.push_back({t, image.tableau, image.sign});
  }
  return out;
}

Degree2GaleReport degree2_gale_analysis(std::span<const std::uint32_t> primes, std::uint64_t seed,
                                        std::size_t configurations) {
  Degree2GaleReport r;
  for (const auto& t : n8_degree1_basis()) {
    ++r.degree1_total;
    const auto g = gale_dual(t);
    if (g.tableau == t && g.sign == 1) ++r.degree1_fixed_positive;
  }

  const auto ssyt = list_ssyt(4, 8, 2);
  std::map<Tableau, std::size_t> position;
  for (std::size_t i = 0; i < ssyt.size(); ++i) position.emplace(ssyt[i], i);
  r.degree2_total = ssyt.size();

  // Matrix of the involution on the semistandard basis.
  Straightener st;
  const std::size_t n = ssyt.size();
  ExactMatrix g(n, n);
  r.involution = true;
  for (std::size_t k = 0; k < n; ++k) {
    const auto image = gale_dual(ssyt[k]);
    for (const auto& [t, c] : st.straighten(image.tableau).terms()) g(position.at(t), k) += image.sign * c;
    const auto back = gale_dual(image.tableau);
    r.involution = r.involution && back.tableau == ssyt[k] && back.sign * image.sign == 1;
    if (image.tableau == ssyt[k]) {
      ++r.fixed;
      if (image.sign != 1) ++r.fixed_with_negative_sign;
    } else {
      ++r.moved;
      if (ssyt[k] < image.tableau) r.pairs.push_back({ssyt[k], image.tableau, image.sign});
    }
  }
  const auto id = ExactMatrix::identity(n);
  ExactMatrix plus(n, n), minus(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      plus(i, j) = g(i, j) - id(i, j);
      minus(i, j) = g(i, j) + id(i, j);
    }
  }
  r.plus_eigenspace = n - rank(plus);
  r.minus_eigenspace = n - rank(minus);

  r.symmetric_square_dimension = 14 * 15 / 2;
  r.quotient_dimension = n - r.symmetric_square_dimension;

  r.configurations = configurations;
  const auto samples = sample_n8(configurations, seed, "n8-gale-degree2", false);
  ExactMatrix products(r.symmetric_square_dimension, configurations);
  std::size_t row = 0;
  for (std::size_t a = 0; a < 14; ++a) {
    for (std::size_t b = a; b < 14; ++b, ++row) {
      for (std::size_t c = 0; c < configurations; ++c) {
        products(row, c) = Rational(samples[c].degree1[a] * samples[c].degree1[b]);
      }
    }
  }
  r.products = certified_rank(products, primes);
  return r;
}

std::vector<N8Sample> sample_n8(std::size_t count, std::uint64_t seed, const std::string& stream, bool with_degree2) {
  static const std::vector<Tableau> degree2 = list_ssyt(4, 8, 2);
  RandomStream rng(seed, stream);
  std::vector<N8Sample> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const BracketTable brackets(sample_configuration(4, 8, rng));
    N8Sample s;
    for (const auto& t : n8_degree1_basis()) s.degree1.push_back(as_integer(brackets.evaluate(t)));
    if (with_degree2) {
      for (const auto& t : degree2) s.degree2.push_back(as_integer(brackets.evaluate(t)));
    }
    out.push_back(std::move(s));
  }
  return out;
}

ExactMatrix n8_action(const Permutation& g, Straightener& st) {
  const auto& basis = n8_degree1_basis();
  static const std::map<Tableau, std::size_t> position = [] {
    std::map<Tableau, std::size_t> out;
    for (std::size_t i = 0; i < n8_degree1_basis().size(); ++i) out.emplace(n8_degree1_basis()[i], i);
    return out;
  }();
  ExactMatrix a(basis.size(), basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto image = relabel(basis[k], g);
    if (!image) throw std::logic_error("relabeling produced a vanishing tableau");
    for (const auto& [t, c] : st.straighten(image->tableau).terms()) a(position.at(t), k) += image->sign * c;
  }
  return a;
}

SeriesReport n8_series_report(int max_k) {
  SeriesReport r;
  for (int k = 0; k <= max_k; ++k) r.counts.push_back(count_ssyt(4, 8, k));
  std::vector<Integer> h(r.counts.size());
  for (std::size_t k = 0; k < h.size(); ++k) {
    for (std::size_t j = 0; j <= std::min<std::size_t>(k, 10); ++j) {
      const Integer term = binomial(10, static_cast<long>(j)) * Integer(static_cast<unsigned long>(r.counts[k - j]));
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
  r.a_invariant = static_cast<int>(last) - 10;
  r.palindromic = true;
  for (std::size_t i = 0; i <= last; ++i) r.palindromic = r.palindromic && r.numerator[i] == r.numerator[last - i];
  return r;
}

}  // namespace eightfold
