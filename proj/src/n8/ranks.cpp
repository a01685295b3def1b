#include "eightfold/n8/ranks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "eightfold/exactcore/matrix.hpp"
#include "eightfold/exactcore/modular.hpp"
#include "eightfold/exactcore/monomials.hpp"
#include "eightfold/n8/generators.hpp"

namespace eightfold {

namespace {

long long choose(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  long long out = 1;
  for (long long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// Multisets of generator indices (nondecreasing) with total degree k.
std::vector<std::vector<int>> products_of_degree(const std::vector<int>& degrees, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int, int)> walk = [&](int start, int remaining) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int g = start; g < static_cast<int>(degrees.size()); ++g) {
      if (degrees[g] > remaining) continue;
      current.push_back(g);
      walk(g, remaining - degrees[g]);
      current.pop_back();
    }
  };
  walk(0, k);
  return out;
}

// values[c][g] is the value of generator g at configuration c.
EvaluationRank modular_rank(int k, const std::vector<std::vector<int>>& rows,
                            const std::vector<std::vector<Integer>>& values, std::size_t target, bool stop_at_target,
                            std::span<const std::uint32_t> primes) {
  EvaluationRank r;
  r.degree = k;
  r.rows = rows.size();
  r.cols = values.size();
  r.target = target;
  for (auto p : primes) {
    const PrimeField field(p);
    std::vector<std::vector<std::uint32_t>> reduced(values.size());
    for (std::size_t c = 0; c < values.size(); ++c) {
      for (const auto& v : values[c]) reduced[c].push_back(field.from_integer(v));
    }
    ModularEchelon ech(p, values.size());
    std::vector<std::uint32_t> row(values.size());
    for (const auto& mono : rows) {
      for (std::size_t c = 0; c < values.size(); ++c) {
        std::uint32_t x = 1;
        for (int g : mono) x = field.mul(x, reduced[c][static_cast<std::size_t>(g)]);
        row[c] = x;
      }
      ech.add_row(row);
      if (stop_at_target && ech.rank() == target) break;
    }
    r.primes.push_back(p);
    r.ranks.push_back(ech.rank());
  }
  r.primes_agree = std::adjacent_find(r.ranks.begin(), r.ranks.end(), std::not_equal_to<>()) == r.ranks.end();
  r.rank = r.ranks.empty() ? 0 : *std::max_element(r.ranks.begin(), r.ranks.end());
  return r;
}

std::vector<std::vector<Integer>> generator_values(const std::vector<N8Sample>& samples,
                                                   const std::vector<std::size_t>& degree2_indices) {
  std::vector<std::vector<Integer>> out;
  for (const auto& s : samples) {
    std::vector<Integer> v = s.degree1;
    for (auto i : degree2_indices) v.push_back(s.degree2[i]);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

EvaluationRank generation_rank(int k, std::span<const std::uint32_t> primes, std::uint64_t seed, std::size_t margin) {
  if (k < 1) throw std::invalid_argument("degree must be positive");
  const auto ssyt = list_ssyt(4, 8, 2);
  std::vector<std::size_t> picks;
  for (const auto& pair : gale_pairs_degree2()) {
    picks.push_back(static_cast<std::size_t>(std::lower_bound(ssyt.begin(), ssyt.end(), pair.first) - ssyt.begin()));
  }
  std::vector<int> degrees(14, 1);
  degrees.resize(14 + picks.size(), 2);
  const auto rows = products_of_degree(degrees, k);
  const std::size_t target = count_ssyt(4, 8, k);
  const auto samples = sample_n8(target + margin, seed, "n8-generation-" + std::to_string(k), true);
  return modular_rank(k, rows, generator_values(samples, picks), target, true, primes);
}

EvaluationRank symmetric_power_rank(int k, std::span<const std::uint32_t> primes, std::uint64_t seed,
                                    std::size_t margin) {
  if (k < 1) throw std::invalid_argument("degree must be positive");
  const auto rows = products_of_degree(std::vector<int>(14, 1), k);
  const auto samples = sample_n8(rows.size() + margin, seed, "n8-symmetric-power-" + std::to_string(k), false);
  return modular_rank(k, rows, generator_values(samples, {}), count_ssyt(4, 8, k), false, primes);
}

NPrimeHilbertReport nprime_hilbert_report(std::span<const std::uint32_t> primes, std::uint64_t seed, int max_k,
                                          std::size_t margin) {
  NPrimeHilbertReport r;
  std::vector<long long> h{1};
  for (int k = 1; k <= max_k; ++k) {
    r.ranks.push_back(symmetric_power_rank(k, primes, seed, margin));
    r.ideal_dimensions.push_back(r.ranks.back().rows - r.ranks.back().rank);
    h.push_back(static_cast<long long>(r.ranks.back().rank));
  }
  for (std::size_t k = 0; k < h.size(); ++k) {
    long long s = 0;
    for (std::size_t j = 0; j <= std::min<std::size_t>(k, 10); ++j) {
      s += (j % 2 ? -1 : 1) * choose(10, static_cast<long long>(j)) * h[k - j];
    }
    r.numerator.push_back(s);
    r.degree += s;
  }
  return r;
}

}  // namespace eightfold
