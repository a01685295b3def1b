#include "eightfold/n8/secant_identity.hpp"

#include <array>
#include <stdexcept>

#include "eightfold/exactcore/matrix.hpp"
#include "eightfold/exactcore/random.hpp"
#include "eightfold/symrep/permutations.hpp"

namespace eightfold {

namespace {

using Rows = std::array<std::array<int, 4>, 2>;

constexpr Rows kA{{{1, 3, 5, 7}, {2, 4, 6, 8}}};
constexpr Rows kB{{{1, 2, 5, 6}, {3, 4, 7, 8}}};
constexpr Rows kC{{{1, 2, 5, 7}, {3, 4, 6, 8}}};
constexpr Rows kD{{{1, 3, 5, 6}, {2, 4, 7, 8}}};

// Product over columns of det [[1, 1], [x_top, x_bottom]].
Rational line_tableau(const Rows& rows, const std::vector<Rational>& x, const std::vector<int>& g) {
  Rational out = 1;
  for (int c = 0; c < 4; ++c) out *= x[g[rows[1][c] - 1] - 1] - x[g[rows[0][c] - 1] - 1];
  return out;
}

Rational secant_coordinate(const Rows& rows, const std::vector<Rational>& p, const std::vector<Rational>& q,
                           const Rational& t, const std::vector<int>& g) {
  return line_tableau(rows, p, g) + t * line_tableau(rows, q, g);
}

Rational segre_bracket(const std::vector<Rational>& p, const std::vector<Rational>& q, const std::vector<int>& g,
                       int first) {
  ExactMatrix m(4, 4);
  for (int c = 0; c < 4; ++c) {
    const auto i = static_cast<std::size_t>(g[first + c - 1] - 1);
    m(0, c) = 1;
    m(1, c) = p[i];
    m(2, c) = q[i];
    m(3, c) = p[i] * q[i];
  }
  return determinant(m);
}

Rational random_rational(RandomStream& rng) {
  Rational out(rng.uniform(-60, 60), rng.uniform(1, 9));
  out.canonicalize();
  return out;
}

std::vector<Rational> random_points(RandomStream& rng) {
  std::vector<Rational> out;
  for (int i = 0; i < 8; ++i) out.push_back(random_rational(rng));
  return out;
}

Rational random_nonzero(RandomStream& rng) {
  Rational t = 0;
  while (t == 0) t = random_rational(rng);
  return t;
}

}  // namespace

Rational secant_left(const std::vector<Rational>& p, const std::vector<Rational>& q, const Rational& t,
                     const std::vector<int>& g) {
  if (p.size() != 8 || q.size() != 8 || g.size() != 8) throw std::invalid_argument("expected 8 points");
  return secant_coordinate(kA, p, q, t, g) * secant_coordinate(kB, p, q, t, g) -
         secant_coordinate(kC, p, q, t, g) * secant_coordinate(kD, p, q, t, g);
}

Rational secant_right(const std::vector<Rational>& p, const std::vector<Rational>& q, const Rational& t,
                      const std::vector<int>& g) {
  if (p.size() != 8 || q.size() != 8 || g.size() != 8) throw std::invalid_argument("expected 8 points");
  return t * segre_bracket(p, q, g, 1) * segre_bracket(p, q, g, 5);
}

SecantIdentityReport verify_secant_identity(int trials, std::uint64_t seed, int translates, int swap_samples) {
  if (trials < 1) throw std::invalid_argument("at least one trial required");
  SecantIdentityReport r;
  RandomStream rng(seed, "n8-secant-identity");
  const Permutation id = compose(rotation(8), inverse(rotation(8)));

  r.trials = trials;
  for (int i = 0; i < trials; ++i) {
    const auto p = random_points(rng), q = random_points(rng);
    const auto t = random_nonzero(rng);
    const auto lhs = secant_left(p, q, t, id);
    if (lhs != secant_right(p, q, t, id)) ++r.mismatches;
    if (lhs != 0) ++r.nonzero_samples;
  }

  r.translates = translates;
  for (int k = 0; k < translates; ++k) {
    const auto g = random_permutation(8, rng);
    bool ok = true;
    for (int i = 0; i < trials; ++i) {
      const auto p = random_points(rng), q = random_points(rng);
      const auto t = random_nonzero(rng);
      ok = ok && secant_left(p, q, t, g) == secant_right(p, q, t, g);
    }
    if (!ok) ++r.translate_mismatches;
  }

  {
    const auto p = random_points(rng), q = random_points(rng);
    r.zero_at_origin = secant_left(p, q, 0, id) == 0 && secant_right(p, q, 0, id) == 0;
  }

  r.swap_samples = swap_samples;
  for (int i = 0; i < swap_samples; ++i) {
    const auto p = random_points(rng), q = random_points(rng);
    const auto t = random_nonzero(rng);
    const Rational scale = 1 / (t * t);
    const bool left = secant_left(q, p, 1 / t, id) == scale * secant_left(p, q, t, id);
    const bool right = secant_right(q, p, 1 / t, id) == scale * secant_right(p, q, t, id);
    if (!left || !right) ++r.swap_mismatches;
  }
  return r;
}

}  // namespace eightfold
