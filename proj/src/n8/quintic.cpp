#include "eightfold/n8/quintic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "eightfold/exactcore/matrix.hpp"
#include "eightfold/exactcore/modular.hpp"
#include "eightfold/exactcore/monomials.hpp"
#include "eightfold/exactcore/random.hpp"
#include "eightfold/n8/generators.hpp"
#include "eightfold/symrep/characters.hpp"

namespace eightfold {

namespace {

constexpr int kVars = 14;
constexpr int kDegree = 5;

// Columns of a degree-1 action matrix as sparse (row, coefficient) lists.
struct SparseAction {
  std::vector<std::uint32_t> offsets;
  std::vector<std::pair<int, long long>> entries;

  explicit SparseAction(const ExactMatrix& a) {
    offsets.push_back(0);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      for (std::size_t l = 0; l < a.rows(); ++l) {
        if (a(l, k) == 0) continue;
        if (a(l, k).get_den() != 1 || !a(l, k).get_num().fits_slong_p()) throw std::logic_error("non-integral action");
        entries.emplace_back(static_cast<int>(l), a(l, k).get_num().get_si());
      }
      offsets.push_back(static_cast<std::uint32_t>(entries.size()));
    }
  }
  std::span<const std::pair<int, long long>> column(int k) const {
    return {entries.data() + offsets[k], offsets[k + 1] - offsets[k]};
  }
};

// Expands images of monomials under a linear substitution, degree by degree.
class Expander {
 public:
  Expander() {
    for (int d = 0; d <= kDegree; ++d) mons_.emplace_back(kVars, d);
    for (int d = 0; d < kDegree; ++d) times_.push_back(mons_[d].times_variable_table(mons_[d + 1]));
    for (const auto& m : mons_) {
      buffer_.emplace_back(m.size(), 0);
      seen_.emplace_back(m.size(), 0);
    }
  }

  const MonomialIndex& top() const { return mons_[kDegree]; }

  template <class T>
  void add_image(const Exponent& e, const SparseAction& a, const T& factor, std::vector<T>& out) {
    expand(e, a);
    for (std::size_t i = 0; i < idx_.size(); ++i) out[idx_[i]] += factor * T(static_cast<long>(val_[i]));
  }

 private:
  void expand(const Exponent& e, const SparseAction& a) {
    idx_.assign(1, 0);
    val_.assign(1, 1);
    int d = 0;
    for (int v = 0; v < kVars; ++v) {
      for (int rep = 0; rep < e[v]; ++rep, ++d) {
        auto& next = buffer_[d + 1];
        touched_.clear();
        for (std::size_t i = 0; i < idx_.size(); ++i) {
          for (const auto& [l, c] : a.column(v)) {
            const auto j = times_[d][idx_[i] * kVars + static_cast<std::size_t>(l)];
            if (!seen_[d + 1][j]) {
              seen_[d + 1][j] = 1;
              touched_.push_back(j);
            }
            next[j] += val_[i] * c;
          }
        }
        idx_.clear();
        val_.clear();
        for (auto j : touched_) {
          if (next[j] != 0) {
            idx_.push_back(j);
            val_.push_back(next[j]);
          }
          next[j] = 0;
          seen_[d + 1][j] = 0;
        }
      }
    }
  }

  std::vector<MonomialIndex> mons_;
  std::vector<std::vector<std::size_t>> times_;
  std::vector<std::vector<long long>> buffer_;
  std::vector<std::vector<char>> seen_;
  std::vector<std::size_t> idx_, touched_;
  std::vector<long long> val_;
};

struct GroupActions {
  std::vector<SparseAction> actions;
  std::vector<int> signs;
};

const GroupActions& all_actions() {
  static const GroupActions table = [] {
    GroupActions out;
    Straightener st;
    for_each_permutation(8, [&](const Permutation& g, int sign) {
      out.actions.emplace_back(n8_action(g, st));
      out.signs.push_back(sign);
    });
    return out;
  }();
  return table;
}

std::vector<long long> skew_symmetrize(const Exponent& e, Expander& ex) {
  const auto& group = all_actions();
  std::vector<long long> out(ex.top().size(), 0);
  for (std::size_t i = 0; i < group.actions.size(); ++i) ex.add_image<long long>(e, group.actions[i], static_cast<long long>(group.signs[i]), out);
  return out;
}

Expander& expander() {
  thread_local Expander ex;
  return ex;
}

}  // namespace

SparsePolynomial n8_act(const SparsePolynomial& p, const std::vector<int>& g) {
  Straightener st;
  const SparseAction a(n8_action(g, st));
  auto& ex = expander();
  if (p.num_variables() != kVars || (!p.is_zero() && (!p.is_homogeneous() || p.degree() != kDegree))) {
    throw std::invalid_argument("expected a quintic in the 14 degree-1 invariants");
  }
  std::vector<Rational> out(ex.top().size(), Rational(0));
  for (const auto& [e, c] : p.terms()) ex.add_image<Rational>(e, a, c, out);
  SparsePolynomial image(p.variable_set());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] != 0) image.add_term(ex.top().exponent(i), out[i]);
  }
  return image;
}

QuinticConstruction construct_skew_quintic(std::uint64_t seed, std::size_t evaluation_points, std::size_t seed_budget) {
  QuinticConstruction r;
  const auto chi = symmetric_power_character(invariant_ring_character(4, 8, 1), kDegree);
  const Integer mult = multiplicity(chi, Partition(8, 1));
  r.character_multiplicity = mult.get_ui();

  auto& ex = expander();
  const auto& mons = ex.top();
  std::vector<std::size_t> order(mons.size());
  std::iota(order.begin(), order.end(), 0);
  RandomStream rng(seed, "n8-quintic-seeds");
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i) - 1))]);
  }

  const auto primes = default_primes();
  const PrimeField field(primes.front());
  ModularEchelon ech(primes.front(), mons.size());
  std::vector<std::vector<long long>> span;
  for (std::size_t i = 0; i < order.size() && r.seeds_tried < seed_budget && span.size() < r.character_multiplicity;
       ++i) {
    ++r.seeds_tried;
    auto v = skew_symmetrize(mons.exponent(order[i]), ex);
    std::vector<std::uint32_t> row(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) row[j] = field.from_int(v[j]);
    if (ech.add_row(row)) span.push_back(std::move(v));
  }
  ExactMatrix basis(span.size(), mons.size());
  for (std::size_t i = 0; i < span.size(); ++i) {
    for (std::size_t j = 0; j < mons.size(); ++j) basis(i, j) = Rational(static_cast<long>(span[i][j]));
  }
  r.skew_dimension = rank(basis);
  if (r.skew_dimension == 0) return r;

  const auto samples = sample_n8(evaluation_points, seed, "n8-quintic-evaluation", false);
  r.evaluation_points = samples.size();
  ExactMatrix values(samples.size(), span.size());
  for (std::size_t c = 0; c < samples.size(); ++c) {
    std::vector<Integer> monomial_values(mons.size());
    for (std::size_t j = 0; j < mons.size(); ++j) {
      Integer x = 1;
      const auto& e = mons.exponent(j);
      for (int v = 0; v < kVars; ++v) {
        for (int k = 0; k < e[v]; ++k) x *= samples[c].degree1[v];
      }
      monomial_values[j] = x;
    }
    for (std::size_t i = 0; i < span.size(); ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < mons.size(); ++j) {
        if (span[i][j] != 0) s += Integer(static_cast<long>(span[i][j])) * monomial_values[j];
      }
      values(c, i) = Rational(s);
    }
  }
  const auto kernel = kernel_basis(values);
  r.kernel_dimension = kernel.size();
  if (kernel.size() != 1) return r;

  std::vector<Rational> coeffs(mons.size(), Rational(0));
  for (std::size_t i = 0; i < span.size(); ++i) {
    for (std::size_t j = 0; j < mons.size(); ++j) coeffs[j] += kernel[0][i] * Rational(static_cast<long>(span[i][j]));
  }
  Integer den = 1, content = 0;
  for (const auto& c : coeffs) {
    if (c != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  }
  for (auto& c : coeffs) {
    c *= den;
    if (c != 0) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_num().get_mpz_t());
  }
  const auto lead = std::find_if(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c != 0; });
  if (lead == coeffs.end()) return r;
  const Rational scale = Rational(*lead < 0 ? -1 : 1) / Rational(content);
  r.quintic = SparsePolynomial(n8_variables());
  for (std::size_t j = 0; j < mons.size(); ++j) {
    if (coeffs[j] != 0) r.quintic.add_term(mons.exponent(j), coeffs[j] * scale);
  }
  return r;
}

QuinticSingularReport verify_quintic_singular(const SparsePolynomial& quintic, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("at least one trial required");
  std::vector<SparsePolynomial> partials;
  for (std::size_t v = 0; v < quintic.num_variables(); ++v) partials.push_back(quintic.derivative(v));

  QuinticSingularReport r;
  r.trials = trials;
  const auto samples = sample_n8(static_cast<std::size_t>(trials), seed, "n8-quintic-singular", false);
  for (int t = 0; t < trials; ++t) {
    const std::vector<Rational> x(samples[t].degree1.begin(), samples[t].degree1.end());
    for (const auto& p : partials) {
      ++r.values_checked;
      if (p.evaluate(x) != 0) {
        ++r.nonzero_partials;
        if (r.first_failure < 0) r.first_failure = t;
      }
    }
    if (quintic.evaluate(x) != 0) ++r.nonzero_values;
  }

  RandomStream control(seed, "n8-negative-control");
  for (int attempt = 1; attempt <= 100 && !r.negative_control; ++attempt) {
    std::vector<Rational> x;
    for (std::size_t v = 0; v < quintic.num_variables(); ++v) x.emplace_back(control.uniform(-20, 20));
    r.negative_control_attempts = attempt;
    r.negative_control = std::any_of(partials.begin(), partials.end(), [&](const auto& p) { return p.evaluate(x) != 0; });
  }
  return r;
}

}  // namespace eightfold
