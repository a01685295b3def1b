#include "eightfold/m8/secant_slice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "eightfold/exactcore/matrix.hpp"
#include "eightfold/exactcore/modular.hpp"
#include "eightfold/exactcore/random.hpp"

namespace eightfold {

namespace {

constexpr int kHessianDegree = 14;

struct Plane {
  std::vector<Rational> a, b, c;
};

std::vector<Rational> point(const Plane& p, const Rational& u, const Rational& v) {
  std::vector<Rational> x(p.a.size());
  for (std::size_t k = 0; k < x.size(); ++k) x[k] = u * p.a[k] + v * p.b[k] + p.c[k];
  return x;
}

class Hessian {
 public:
  explicit Hessian(const SparsePolynomial& cubic) : n_(cubic.num_variables()), coef_(n_ * n_ * n_) {
    for (std::size_t i = 0; i < n_; ++i) {
      const auto di = cubic.derivative(i);
      for (std::size_t j = 0; j < n_; ++j) {
        const auto dij = di.derivative(j);
        for (const auto& [e, c] : dij.terms()) {
          const auto k = static_cast<std::size_t>(std::find(e.begin(), e.end(), 1) - e.begin());
          coef_[(i * n_ + j) * n_ + k] = c;
        }
      }
    }
  }

  Rational at(std::span<const Rational> x) const {
    ExactMatrix m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        Rational s = 0;
        for (std::size_t k = 0; k < n_; ++k) {
          const auto& c = coef_[(i * n_ + j) * n_ + k];
          if (c != 0) s += c * x[k];
        }
        m(i, j) = s;
      }
    }
    return determinant(m);
  }

 private:
  std::size_t n_;
  std::vector<Rational> coef_;
};

// Coefficients in u of the cubic restricted to the line v = const.
UnivariatePolynomial cubic_in_u(const SparsePolynomial& cubic, const Plane& p, const Rational& v) {
  std::vector<std::pair<Rational, Rational>> samples;
  for (int u = 0; u <= 3; ++u) samples.emplace_back(u, cubic.evaluate(point(p, u, v)));
  return interpolate(samples);
}

std::vector<std::uint32_t> candidate_primes(std::size_t count) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t q = 1009; out.size() < count; q += 2) {
    if (is_prime(q)) out.push_back(q);
  }
  return out;
}

PlaneSlice analyse(const SparsePolynomial& cubic, const Hessian& hessian, RandomStream& rng, int max_primes) {
  PlaneSlice out;
  const std::size_t n = cubic.num_variables();
  for (int attempt = 0; attempt < 20; ++attempt) {
    Plane p;
    for (auto* v : {&p.a, &p.b, &p.c}) {
      for (std::size_t k = 0; k < n; ++k) v->emplace_back(rng.uniform(-9, 9));
    }
    // Leading coefficients in u are the values at A; both must survive.
    if (cubic.evaluate(p.a) == 0 || hessian.at(p.a) == 0) {
      ++out.resamples;
      continue;
    }

    std::vector<std::vector<Rational>> by_power(kHessianDegree + 1);
    for (int v = 0; v <= kHessianDegree; ++v) {
      std::vector<Rational> values;
      for (int u = 0; u <= kHessianDegree; ++u) values.push_back(hessian.at(point(p, u, v)));
      const auto in_u = interpolate_consecutive(values);
      for (int j = 0; j <= kHessianDegree; ++j) by_power[j].push_back(in_u.coefficient(j));
    }
    std::vector<UnivariatePolynomial> coeff_in_v;
    for (const auto& vals : by_power) coeff_in_v.push_back(interpolate_consecutive(vals));

    const int bezout = 3 * kHessianDegree;
    std::vector<Rational> res_values;
    for (int v = 0; v <= bezout; ++v) {
      const auto c = cubic_in_u(cubic, p, v);
      std::vector<Rational> hc;
      for (const auto& q : coeff_in_v) hc.push_back(q.evaluate(v));
      const UnivariatePolynomial h(hc);
      if (c.degree() != 3 || h.degree() != kHessianDegree) throw std::logic_error("leading coefficient vanished");
      res_values.push_back(resultant(c, h));
    }
    const auto r = interpolate_consecutive(res_values);
    if (r.degree() != bezout) {
      ++out.resamples;
      continue;
    }
    out.resultant_degree = r.degree();
    out.squarefree = squarefree_part(r);
    out.squarefree_degree = out.squarefree.degree();
    const auto [quotient, remainder] = divmod(r, out.squarefree * out.squarefree);
    out.constant_times_square = remainder.is_zero() && quotient.degree() == 0;

    const auto integral = primitive_integer_part(out.squarefree);
    std::vector<int> common;
    for (int d = 1; d < integral.degree(); ++d) common.push_back(d);
    for (auto q : candidate_primes(200)) {
      if (static_cast<int>(out.primes.size()) >= max_primes || (out.primes.size() >= 3 && common.empty())) break;
      const auto reduced = reduce_mod(integral, q);
      if (reduced.degree() != integral.degree()) continue;
      std::vector<int> pattern;
      try {
        pattern = factor_degree_pattern(reduced);
      } catch (const std::invalid_argument&) {
        continue;
      }
      out.primes.push_back(q);
      out.degree_patterns.push_back(pattern);
      const auto sums = achievable_degrees(pattern);
      std::vector<int> kept;
      std::set_intersection(common.begin(), common.end(), sums.begin(), sums.end(), std::back_inserter(kept));
      common = std::move(kept);
    }
    out.common_degrees = common;
    return out;
  }
  throw std::runtime_error("no nondegenerate plane found");
}

}  // namespace

std::vector<int> achievable_degrees(const std::vector<int>& pattern) {
  const int total = std::accumulate(pattern.begin(), pattern.end(), 0);
  std::vector<bool> reach(static_cast<std::size_t>(total) + 1, false);
  reach[0] = true;
  for (int d : pattern) {
    for (int s = total; s >= d; --s) reach[s] = reach[s] || reach[s - d];
  }
  std::vector<int> out;
  for (int s = 1; s < total; ++s) {
    if (reach[s]) out.push_back(s);
  }
  return out;
}

SecantSliceResult secant_slice_analysis(const SparsePolynomial& cubic, int planes, std::uint64_t seed, int max_primes) {
  if (planes < 1) throw std::invalid_argument("at least one plane required");
  const Hessian hessian(cubic);
  SecantSliceResult out;
  for (int i = 0; i < planes; ++i) {
    RandomStream rng(seed, "m8-secant-plane-" + std::to_string(i));
    out.planes.push_back(analyse(cubic, hessian, rng, max_primes));
  }
  out.identical_conclusions = std::all_of(out.planes.begin(), out.planes.end(), [&](const PlaneSlice& s) {
    const auto& f = out.planes.front();
    return s.resultant_degree == f.resultant_degree && s.squarefree_degree == f.squarefree_degree &&
           s.constant_times_square == f.constant_times_square && s.common_degrees.empty() == f.common_degrees.empty();
  });
  return out;
}

}  // namespace eightfold
