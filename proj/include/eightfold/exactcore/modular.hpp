#pragma once

#include <cstdint>
#include <vector>

#include "eightfold/exactcore/rational.hpp"

namespace eightfold {

/// Arithmetic in Z/p for a prime p < 2^31. Products of two residues fit in
/// 62 bits and are reduced with a precomputed Barrett constant.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t prime() const { return p_; }

  std::uint32_t reduce(std::uint64_t x) const {
    const std::uint64_t q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * m_) >> 64);
    std::uint64_t r = x - q * p_;
    while (r >= p_) r -= p_;
    return static_cast<std::uint32_t>(r);
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return reduce(static_cast<std::uint64_t>(a) * b);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  /// Throws std::domain_error for a == 0.
  std::uint32_t inv(std::uint32_t a) const;

  std::uint32_t from_int(std::int64_t x) const;
  /// Throws std::domain_error if p divides the denominator.
  std::uint32_t from_rational(const Rational& q) const;
  std::uint32_t from_integer(const Integer& z) const;

 private:
  std::uint32_t p_;
  std::uint64_t m_;  // floor(2^64 / p)
};

bool is_prime(std::uint64_t n);

/// The `count` largest primes strictly below `bound`, largest first.
std::vector<std::uint32_t> largest_primes_below(std::uint64_t bound, int count);

/// Default prime pair: the two largest primes below 2^31.
std::vector<std::uint32_t> default_primes();

}  // namespace eightfold
