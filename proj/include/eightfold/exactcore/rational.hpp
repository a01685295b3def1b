#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace eightfold {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator after each arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "a" or "a/b"; throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// x^e for e >= 0.
Rational pow(const Rational& x, unsigned e);

}  // namespace eightfold
