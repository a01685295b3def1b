#pragma once

#include <cstdint>
#include <vector>

#include "eightfold/exactcore/rational.hpp"

namespace eightfold {

/// Left side: [1357/2468][1256/3478] - [1257/3468][1356/2478] at the secant
/// point T(p) + t T(q), with points written (1; p_i). Right side: t times the
/// 4 x 2 tableau with columns 1234, 5678 at the Segre points
/// (1, p_i, q_i, p_i q_i). Labels are relabeled by g before evaluation.
Rational secant_left(const std::vector<Rational>& p, const std::vector<Rational>& q, const Rational& t,
                     const std::vector<int>& g);
Rational secant_right(const std::vector<Rational>& p, const std::vector<Rational>& q, const Rational& t,
                      const std::vector<int>& g);

struct SecantIdentityReport {
  int trials = 0;
  int mismatches = 0;
  int translates = 0;
  int translate_mismatches = 0;
  /// Both sides vanish at t = 0.
  bool zero_at_origin = false;
  /// Both sides at (q, p, 1/t) equal t^-2 times their values at (p, q, t).
  int swap_samples = 0;
  int swap_mismatches = 0;
  int nonzero_samples = 0;
};

SecantIdentityReport verify_secant_identity(int trials, std::uint64_t seed, int translates = 3, int swap_samples = 10);

}  // namespace eightfold
