#include <stdexcept>
#include <string>

#include "eightfold/exactcore/modular.hpp"
#include "eightfold/exactcore/random.hpp"
#include "eightfold/exactcore/rational.hpp"

namespace eightfold {

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  Rational q;
  if (q.set_str(std::string(text), 10) != 0 || q.get_den() == 0) {
    throw std::invalid_argument("malformed rational literal: " + std::string(text));
  }
  q.canonicalize();
  return q;
}

Rational pow(const Rational& x, unsigned e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), e);
  return r;
}

namespace {
std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}
}  // namespace

RandomStream::RandomStream(std::uint64_t master_seed, std::string_view name) {
  const std::uint64_t h = fnv1a(name);
  std::seed_seq seq{static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  engine_.seed(seq);
}

std::int64_t RandomStream::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 2 || p >= (1u << 31)) throw std::invalid_argument("prime must lie in [2, 2^31)");
  m_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) / p);
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1 % p_;
  std::uint32_t b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero modulo p");
  return pow(a, p_ - 2);
}

std::uint32_t PrimeField::from_int(std::int64_t x) const {
  std::int64_t r = x % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t PrimeField::from_integer(const Integer& z) const {
  return static_cast<std::uint32_t>(mpz_fdiv_ui(z.get_mpz_t(), p_));
}

std::uint32_t PrimeField::from_rational(const Rational& q) const {
  const std::uint32_t den = from_integer(q.get_den());
  if (den == 0) throw std::domain_error("denominator divisible by the prime");
  return mul(from_integer(q.get_num()), inv(den));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
      if (e & 1) r = mulmod(r, a, m);
      a = mulmod(a, a, m);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit integers.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint32_t> largest_primes_below(std::uint64_t bound, int count) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t n = bound - 1; n >= 2 && static_cast<int>(out.size()) < count; --n) {
    if (is_prime(n)) out.push_back(static_cast<std::uint32_t>(n));
  }
  return out;
}

std::vector<std::uint32_t> default_primes() {
  static const std::vector<std::uint32_t> primes = largest_primes_below(1ULL << 31, 2);
  return primes;
}

}  // namespace eightfold
