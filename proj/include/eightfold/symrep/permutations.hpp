#pragma once

#include <functional>
#include <vector>

#include "eightfold/exactcore/random.hpp"

namespace eightfold {

/// perm[i - 1] is the image of i.
using Permutation = std::vector<int>;

int permutation_sign(const Permutation& p);
/// (a * b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
/// i -> i + 1, n -> 1.
Permutation rotation(int n);
Permutation transposition(int n, int a, int b);
Permutation random_permutation(int n, RandomStream& rng);
/// Every permutation of 1..n in lexicographic order, with its sign.
void for_each_permutation(int n, const std::function<void(const Permutation&, int)>& visit);

}  // namespace eightfold
