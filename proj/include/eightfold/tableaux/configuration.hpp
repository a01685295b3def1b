#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "eightfold/exactcore/random.hpp"
#include "eightfold/exactcore/rational.hpp"
#include "eightfold/tableaux/tableau.hpp"

namespace eightfold {

/// n points of projective (m-1)-space in homogeneous coordinates.
class Configuration {
 public:
  /// Throws std::invalid_argument on ragged input or a zero point.
  explicit Configuration(std::vector<std::vector<Rational>> points);

  int dimension() const { return m_; }
  int size() const { return static_cast<int>(points_.size()); }
  const std::vector<Rational>& point(int i) const { return points_[static_cast<std::size_t>(i)]; }

 private:
  int m_;
  std::vector<std::vector<Rational>> points_;
};

/// Integer coordinates drawn from [-20, 20]; resamples until every m of the
/// points are independent. Throws std::runtime_error if the budget runs out.
Configuration sample_configuration(int m, int n, RandomStream& rng, int budget = 1000);
Configuration sample_configuration(int m, int n, std::uint64_t seed, std::string_view stream = "configuration");

/// Determinant of the m x m matrix whose rows are the listed points (1-based).
Rational bracket(const Configuration& c, std::span<const std::uint8_t> labels);

Rational evaluate_invariant(const Tableau& t, const Configuration& c);
Rational evaluate_invariant(const TableauSum& s, const Configuration& c);

/// Every bracket of a configuration, computed once for repeated evaluation.
class BracketTable {
 public:
  explicit BracketTable(const Configuration& c);

  const Rational& operator()(std::span<const std::uint8_t> labels) const;
  Rational evaluate(const Tableau& t) const;
  Rational evaluate(const TableauSum& s) const;

 private:
  int m_;
  int n_;
  std::vector<Rational> by_mask_;
};

}  // namespace eightfold
