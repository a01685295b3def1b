#include "eightfold/exactcore/univariate.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "eightfold/exactcore/matrix.hpp"
#include "eightfold/exactcore/modular.hpp"

namespace eightfold {

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

UnivariatePolynomial UnivariatePolynomial::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UnivariatePolynomial(std::move(v));
}

void UnivariatePolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UnivariatePolynomial::coefficient(int k) const {
  return (k < 0 || k > degree()) ? Rational(0) : coeffs_[k];
}

Rational UnivariatePolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return UnivariatePolynomial(std::move(d));
}

UnivariatePolynomial UnivariatePolynomial::monic() const {
  if (is_zero()) return {};
  return *this * (1 / leading_coefficient());
}

UnivariatePolynomial& UnivariatePolynomial::operator+=(const UnivariatePolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator-=(const UnivariatePolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial operator*(UnivariatePolynomial a, const Rational& c) {
  for (auto& x : a.coeffs_) x *= c;
  a.trim();
  return a;
}

std::string UnivariatePolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    const Rational mag = abs(c);
    if (k == 0 || mag != 1) os << mag.get_str() << (k ? "*" : "");
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
    first = false;
  }
  return os.str();
}

std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(const UnivariatePolynomial& a,
                                                             const UnivariatePolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = a.coefficients();
  const int db = b.degree();
  const Rational lc_inv = 1 / b.leading_coefficient();
  std::vector<Rational> q(std::max(a.degree() - db + 1, 0));
  for (int k = a.degree(); k >= db; --k) {
    if (r[k] == 0) continue;
    const Rational f = r[k] * lc_inv;
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.coefficients()[j];
  }
  return {UnivariatePolynomial(std::move(q)), UnivariatePolynomial(std::move(r))};
}

UnivariatePolynomial gcd(UnivariatePolynomial a, UnivariatePolynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

Rational resultant(const UnivariatePolynomial& f, const UnivariatePolynomial& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant of a zero polynomial");
  const int m = f.degree();
  const int n = g.degree();
  if (m == 0 && n == 0) return 1;
  const std::size_t size = static_cast<std::size_t>(m + n);
  ExactMatrix s(size, size);
  // Rows 0..n-1 hold shifted copies of f, rows n..n+m-1 copies of g, with
  // coefficients written highest degree first.
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k <= m; ++k) s(i, i + k) = f.coefficients()[m - k];
  }
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k <= n; ++k) s(n + i, i + k) = g.coefficients()[n - k];
  }
  return determinant(s);
}

UnivariatePolynomial squarefree_part(const UnivariatePolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree part of the zero polynomial");
  const auto g = gcd(f, f.derivative());
  return divmod(f, g).first.monic();
}

UnivariatePolynomial interpolate(std::span<const std::pair<Rational, Rational>> samples) {
  const std::size_t n = samples.size();
  {
    std::set<Rational> seen;
    for (const auto& s : samples) {
      if (!seen.insert(s.first).second) throw std::invalid_argument("repeated interpolation node");
    }
  }
  // Newton divided differences.
  std::vector<Rational> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = samples[i].second;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (samples[i].first - samples[i - level].first);
    }
  }
  UnivariatePolynomial result;
  for (std::size_t i = n; i-- > 0;) {
    // result = result * (x - x_i) + dd[i]
    result = result * UnivariatePolynomial({-samples[i].first, Rational(1)});
    result += UnivariatePolynomial({dd[i]});
  }
  return result;
}

UnivariatePolynomial interpolate_consecutive(std::span<const Rational> values) {
  std::vector<std::pair<Rational, Rational>> samples;
  samples.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) samples.emplace_back(Rational(static_cast<long>(i)), values[i]);
  return interpolate(samples);
}

UnivariatePolynomial primitive_integer_part(const UnivariatePolynomial& f) {
  if (f.is_zero()) return {};
  Integer l = 1;
  for (const auto& c : f.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  Integer g = 0;
  for (const auto& c : f.coefficients()) {
    ints.push_back(c.get_num() * (l / c.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  if (f.leading_coefficient() < 0) g = -g;
  std::vector<Rational> out;
  for (const auto& z : ints) out.emplace_back(Integer(z / g));
  return UnivariatePolynomial(std::move(out));
}

ModularPolynomial::ModularPolynomial(std::uint32_t prime, std::vector<std::uint32_t> coefficients)
    : p_(prime), c_(std::move(coefficients)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModularPolynomial reduce_mod(const UnivariatePolynomial& f, std::uint32_t prime) {
  PrimeField field(prime);
  std::vector<std::uint32_t> c;
  for (const auto& q : f.coefficients()) c.push_back(field.from_rational(q));
  return ModularPolynomial(prime, std::move(c));
}

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly mod_poly(Poly a, const Poly& b, const PrimeField& f) {
  const std::uint32_t inv = f.inv(b.back());
  const std::size_t db = b.size() - 1;
  for (std::size_t k = a.size(); k-- > db;) {
    if (a[k] == 0) continue;
    const std::uint32_t q = f.mul(a[k], inv);
    for (std::size_t j = 0; j <= db; ++j) a[k - db + j] = f.sub(a[k - db + j], f.mul(q, b[j]));
  }
  trim(a);
  return a;
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& m, const PrimeField& f) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  }
  trim(out);
  return mod_poly(std::move(out), m, f);
}

Poly pow_mod(Poly base, std::uint64_t e, const Poly& m, const PrimeField& f) {
  Poly r{1};
  base = mod_poly(std::move(base), m, f);
  while (e) {
    if (e & 1) r = mul_mod(r, base, m, f);
    base = mul_mod(base, base, m, f);
    e >>= 1;
  }
  return r;
}

Poly gcd_poly(Poly a, Poly b, const PrimeField& f) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod_poly(a, b, f);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint32_t inv = f.inv(a.back());
    for (auto& x : a) x = f.mul(x, inv);
  }
  return a;
}

Poly div_exact(Poly a, const Poly& b, const PrimeField& f) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {};
  Poly q(a.size() - db, 0);
  const std::uint32_t inv = f.inv(b.back());
  for (std::size_t k = a.size(); k-- > db;) {
    const std::uint32_t c = f.mul(a[k], inv);
    q[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[k - db + j] = f.sub(a[k - db + j], f.mul(c, b[j]));
  }
  trim(q);
  return q;
}

}  // namespace

std::vector<int> factor_degree_pattern(const ModularPolynomial& poly) {
  PrimeField f(poly.prime());
  Poly a = poly.coefficients();
  if (a.size() < 2) return {};
  Poly deriv;
  for (std::size_t k = 1; k < a.size(); ++k) deriv.push_back(f.mul(a[k], f.from_int(static_cast<std::int64_t>(k))));
  trim(deriv);
  if (gcd_poly(a, deriv, f).size() != 1) throw std::invalid_argument("polynomial is not squarefree modulo p");
  std::vector<int> degrees;
  Poly rest = a;
  Poly h{0, 1};  // x^(p^i) mod rest
  for (int i = 1; static_cast<int>(rest.size()) - 1 >= 2 * i; ++i) {
    h = pow_mod(h, f.prime(), rest, f);
    Poly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = f.sub(diff[1], 1);
    trim(diff);
    Poly g = gcd_poly(rest, diff, f);
    const int dg = static_cast<int>(g.size()) - 1;
    if (dg > 0) {
      for (int k = 0; k < dg / i; ++k) degrees.push_back(i);
      rest = div_exact(rest, g, f);
      h = mod_poly(h, rest, f);
    }
  }
  if (rest.size() > 1) degrees.push_back(static_cast<int>(rest.size()) - 1);
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

}  // namespace eightfold
