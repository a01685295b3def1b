#include "eightfold/symrep/characters.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "eightfold/exactcore/matrix.hpp"
#include "eightfold/exactcore/modular.hpp"
#include "eightfold/exactcore/monomials.hpp"

namespace eightfold {

namespace {

void build_partitions(int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    cur.push_back(k);
    build_partitions(remaining - k, k, cur, out);
    cur.pop_back();
  }
}

Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

int weight(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

Partition merged(const Partition& a, const Partition& b) {
  Partition out(a);
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::mutex memo_mutex;
std::map<std::pair<Partition, Partition>, Integer> memo;

Integer mn(const Partition& lambda, const Partition& mu) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  {
    std::lock_guard lock(memo_mutex);
    if (auto it = memo.find({lambda, mu}); it != memo.end()) return it->second;
  }
  const int k = mu.front();
  const Partition rest(mu.begin() + 1, mu.end());
  const int len = static_cast<int>(lambda.size());
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) beta[i] = lambda[i] + len - 1 - i;
  Integer total = 0;
  for (int i = 0; i < len; ++i) {
    const int target = beta[i] - k;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int b : beta) between += b > target && b < beta[i];
    std::vector<int> next(beta);
    next[i] = target;
    std::sort(next.begin(), next.end(), std::greater<>());
    Partition shape;
    for (int j = 0; j < len; ++j) {
      const int part = next[j] - (len - 1 - j);
      if (part > 0) shape.push_back(part);
    }
    const Integer v = mn(shape, rest);
    total += between % 2 ? -v : v;
  }
  std::lock_guard lock(memo_mutex);
  memo.emplace(std::make_pair(lambda, mu), total);
  return total;
}

std::size_t class_index(int n, const Partition& p) {
  static std::mutex m;
  static std::map<int, std::map<Partition, std::size_t>> indices;
  std::lock_guard lock(m);
  auto& idx = indices[n];
  if (idx.empty()) {
    const auto parts = partitions(n);
    for (std::size_t i = 0; i < parts.size(); ++i) idx.emplace(parts[i], i);
  }
  const auto it = idx.find(p);
  if (it == idx.end()) throw std::invalid_argument("not a partition of " + std::to_string(n));
  return it->second;
}

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 0) throw std::invalid_argument("negative partition weight");
  std::vector<Partition> out;
  Partition cur;
  build_partitions(n, n, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::string partition_to_string(const Partition& p) {
  if (p.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += '+';
    out += std::to_string(p[i]);
  }
  return out;
}

Partition parse_partition(const std::string& text) {
  Partition p;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, '+')) {
    const int v = std::stoi(part);
    if (v > 0) p.push_back(v);
  }
  if (!std::is_sorted(p.begin(), p.end(), std::greater<>())) throw std::invalid_argument("parts must be weakly decreasing");
  return p;
}

Integer centralizer_order(const Partition& p) {
  std::map<int, int> mult;
  for (int k : p) ++mult[k];
  Integer z = 1;
  for (const auto& [k, m] : mult) {
    for (int i = 0; i < m; ++i) z *= k;
    z *= factorial(m);
  }
  return z;
}

Integer class_size(const Partition& p) { return factorial(weight(p)) / centralizer_order(p); }

Integer character_value(const Partition& lambda, const Partition& mu) {
  if (weight(lambda) != weight(mu)) throw std::invalid_argument("partitions of different weights");
  return mn(lambda, mu);
}

CharacterVector::CharacterVector(int n, std::vector<Rational> values) : n_(n), values_(std::move(values)) {
  if (values_.size() != partitions(n).size()) throw std::invalid_argument("one value per conjugacy class required");
}

const Rational& CharacterVector::at(const Partition& cycle_type) const { return values_[class_index(n_, cycle_type)]; }

Rational CharacterVector::dimension() const { return values_.front(); }

CharacterVector& CharacterVector::operator+=(const CharacterVector& rhs) {
  if (n_ != rhs.n_) throw std::invalid_argument("characters of different groups");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += rhs.values_[i];
  return *this;
}

CharacterVector& CharacterVector::operator*=(const Rational& c) {
  for (auto& v : values_) v *= c;
  return *this;
}

CharacterVector operator*(const CharacterVector& a, const CharacterVector& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("characters of different groups");
  CharacterVector out(a);
  for (std::size_t i = 0; i < out.values_.size(); ++i) out.values_[i] *= b.values_[i];
  return out;
}

CharacterVector irreducible_character(const Partition& lambda) {
  const int n = weight(lambda);
  std::vector<Rational> values;
  for (const auto& mu : partitions(n)) values.emplace_back(mn(lambda, mu));
  return CharacterVector(n, std::move(values));
}

std::vector<CharacterVector> character_table(int n) {
  std::vector<CharacterVector> rows;
  for (const auto& lambda : partitions(n)) rows.push_back(irreducible_character(lambda));
  return rows;
}

Rational inner_product(const CharacterVector& a, const CharacterVector& b) {
  if (a.order() != b.order()) throw std::invalid_argument("characters of different groups");
  const auto parts = partitions(a.order());
  Rational s = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    s += a.values()[i] * b.values()[i] / Rational(centralizer_order(parts[i]));
  }
  return s;
}

Partition power_cycle_type(const Partition& mu, int k) {
  Partition out;
  for (int len : mu) {
    const int g = std::gcd(len, k);
    for (int i = 0; i < g; ++i) out.push_back(len / g);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

namespace {

CharacterVector power_character(const CharacterVector& chi, int d, bool alternating) {
  const auto classes = partitions(chi.order());
  std::vector<Rational> values(classes.size());
  for (const auto& lambda : partitions(d)) {
    Rational coef = Rational(1) / Rational(centralizer_order(lambda));
    if (alternating && (d - static_cast<int>(lambda.size())) % 2) coef = -coef;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      Rational prod = coef;
      for (int part : lambda) prod *= chi.at(power_cycle_type(classes[c], part));
      values[c] += prod;
    }
  }
  return CharacterVector(chi.order(), std::move(values));
}

}  // namespace

CharacterVector symmetric_power_character(const CharacterVector& chi, int d) {
  if (d < 0) throw std::invalid_argument("negative symmetric power");
  return power_character(chi, d, false);
}

CharacterVector exterior_power_character(const CharacterVector& chi, int d) {
  if (d < 0) throw std::invalid_argument("negative exterior power");
  return power_character(chi, d, true);
}

Integer multiplicity(const CharacterVector& chi, const Partition& lambda) {
  const Rational m = inner_product(chi, irreducible_character(lambda));
  if (m.get_den() != 1) throw std::domain_error("non-integral multiplicity of " + partition_to_string(lambda));
  return m.get_num();
}

RepDecomposition decompose(const CharacterVector& chi) {
  RepDecomposition out;
  for (const auto& lambda : partitions(chi.order())) {
    const Integer m = multiplicity(chi, lambda);
    if (m < 0) throw std::domain_error("negative multiplicity of " + partition_to_string(lambda));
    if (m != 0) out.emplace(lambda, m);
  }
  return out;
}

CharacterVector recompose(int n, const RepDecomposition& d) {
  CharacterVector out(n, std::vector<Rational>(partitions(n).size()));
  for (const auto& [lambda, m] : d) out += irreducible_character(lambda) * Rational(m);
  return out;
}

CharacterVector invariant_ring_character(int m, int n, int d) {
  if (m < 1 || n < 1 || d < 0 || (d * n) % m != 0) throw std::invalid_argument("m must divide d * n");
  const Partition rect(d == 0 ? 0 : static_cast<std::size_t>(m), d * n / m);
  const auto d_parts = partitions(d);
  std::vector<Rational> inv_z;
  for (const auto& nu : d_parts) inv_z.push_back(Rational(1) / Rational(centralizer_order(nu)));

  std::vector<Rational> values;
  for (const auto& mu : partitions(n)) {
    std::map<Partition, Rational> acc{{Partition{}, Rational(1)}};
    for (int k : mu) {
      std::map<Partition, Rational> next;
      for (const auto& [rho, c] : acc) {
        for (std::size_t i = 0; i < d_parts.size(); ++i) {
          Partition scaled(d_parts[i]);
          for (auto& x : scaled) x *= k;
          next[merged(rho, scaled)] += c * inv_z[i];
        }
      }
      acc = std::move(next);
    }
    Rational v = 0;
    for (const auto& [rho, c] : acc) {
      if (c != 0) v += c * Rational(mn(rect, rho));
    }
    values.push_back(v);
  }
  return CharacterVector(n, std::move(values));
}

FinalCheck n8_final_check() {
  const auto v = irreducible_character({2, 2, 2, 2});
  const auto w = irreducible_character({3, 1, 1, 1, 1, 1});
  const Partition sign(8, 1);
  FinalCheck out;
  out.sign_in_w_sym3 = multiplicity(w * symmetric_power_character(v, 3), sign);
  out.sign_in_sym2w_r1 = multiplicity(symmetric_power_character(w, 2) * v, sign);
  out.sign_in_sym5 = multiplicity(symmetric_power_character(v, 5), sign);
  return out;
}

AnnihilatorResult rotation_annihilator(int nvars, int d, const std::vector<std::pair<int, int>>& pairs,
                                       std::span<const std::uint32_t> primes) {
  if (primes.empty()) throw std::invalid_argument("at least one prime required");
  const MonomialIndex mons(nvars, d);
  const std::size_t cols = mons.size();

  // Sparse rows with integer coefficients, pair by pair.
  std::vector<std::vector<std::pair<std::size_t, long>>> rows;
  for (const auto& [i, j] : pairs) {
    if (i < 0 || j < 0 || i >= nvars || j >= nvars || i == j) throw std::invalid_argument("invalid variable pair");
    std::map<std::size_t, std::map<std::size_t, long>> by_target;
    for (std::size_t c = 0; c < cols; ++c) {
      Exponent e = mons.exponent(c);
      if (e[j] > 0) {
        const long coef = e[j];
        --e[j];
        ++e[i];
        by_target[mons.index(e)][c] += coef;
        --e[i];
        ++e[j];
      }
      if (e[i] > 0) {
        const long coef = e[i];
        --e[i];
        ++e[j];
        by_target[mons.index(e)][c] -= coef;
      }
    }
    for (auto& [target, entries] : by_target) {
      std::vector<std::pair<std::size_t, long>> row;
      for (const auto& [c, v] : entries) {
        if (v != 0) row.emplace_back(c, v);
      }
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }

  AnnihilatorResult out;
  out.unknowns = cols;
  std::vector<std::size_t> pivot_rows;
  for (std::size_t pi = 0; pi < primes.size(); ++pi) {
    PrimeField f(primes[pi]);
    ModularEchelon ech(primes[pi], cols);
    std::vector<std::uint32_t> buf(cols);
    for (std::size_t r = 0; r < rows.size() && ech.rank() < cols; ++r) {
      std::fill(buf.begin(), buf.end(), 0);
      for (const auto& [c, v] : rows[r]) buf[c] = f.from_int(v);
      if (ech.add_row(buf) && pi == 0) pivot_rows.push_back(r);
    }
    out.modular_ranks.push_back(ech.rank());
  }
  const std::size_t modular_kernel = cols - *std::min_element(out.modular_ranks.begin(), out.modular_ranks.end());
  if (modular_kernel == 0) {
    out.kernel_dimension = 0;
    return out;
  }

  // The pivot rows already have full modular rank, so their exact kernel is
  // at most this big; every candidate is then checked against all rows.
  ExactMatrix sub(pivot_rows.size(), cols);
  for (std::size_t r = 0; r < pivot_rows.size(); ++r) {
    for (const auto& [c, v] : rows[pivot_rows[r]]) sub(r, c) = v;
  }
  const auto candidates = kernel_basis(sub);
  ExactMatrix residual(rows.size(), candidates.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      for (const auto& [c, v] : rows[r]) residual(r, k) += v * candidates[k][c];
    }
  }
  for (const auto& combo : kernel_basis(residual)) {
    std::vector<Rational> vec(cols);
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      for (std::size_t c = 0; c < cols; ++c) vec[c] += combo[k] * candidates[k][c];
    }
    out.kernel.push_back(std::move(vec));
  }
  out.kernel_dimension = out.kernel.size();
  return out;
}

AnnihilatorResult so_annihilator(int d, std::span<const std::uint32_t> primes) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 14; ++i) {
    for (int j = i + 1; j < 14; ++j) pairs.emplace_back(i, j);
  }
  return rotation_annihilator(14, d, pairs, primes);
}

}  // namespace eightfold
