#include "eightfold/symrep/permutations.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace eightfold {

int permutation_sign(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j] - 1)) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutations of different sizes");
  Permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i] - 1)];
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[static_cast<std::size_t>(p[i] - 1)] = static_cast<int>(i + 1);
  return out;
}

Permutation rotation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[i] = (i + 1) % n + 1;
  return p;
}

Permutation transposition(int n, int a, int b) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::swap(p[a - 1], p[b - 1]);
  return p;
}

Permutation random_permutation(int n, RandomStream& rng) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng.uniform(0, i)]);
  return p;
}

void for_each_permutation(int n, const std::function<void(const Permutation&, int)>& visit) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  do {
    visit(p, permutation_sign(p));
  } while (std::next_permutation(p.begin(), p.end()));
}

}  // namespace eightfold
