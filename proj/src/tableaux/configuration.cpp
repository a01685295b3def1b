#include "eightfold/tableaux/configuration.hpp"

#include <stdexcept>

namespace eightfold {

namespace {

Rational small_determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

bool all_subsets_independent(const Configuration& c) {
  const int m = c.dimension();
  const int n = c.size();
  std::vector<std::uint8_t> pick(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) pick[i] = static_cast<std::uint8_t>(i + 1);
  while (true) {
    if (bracket(c, pick) == 0) return false;
    int i = m - 1;
    while (i >= 0 && pick[i] == n - m + i + 1) --i;
    if (i < 0) return true;
    ++pick[i];
    for (int j = i + 1; j < m; ++j) pick[j] = static_cast<std::uint8_t>(pick[j - 1] + 1);
  }
}

}  // namespace

Configuration::Configuration(std::vector<std::vector<Rational>> points) : points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("configuration needs at least one point");
  m_ = static_cast<int>(points_.front().size());
  for (const auto& p : points_) {
    if (static_cast<int>(p.size()) != m_) throw std::invalid_argument("points have different dimensions");
    bool zero = true;
    for (const auto& x : p) zero = zero && x == 0;
    if (zero) throw std::invalid_argument("zero vector is not a projective point");
  }
}

Configuration sample_configuration(int m, int n, RandomStream& rng, int budget) {
  for (int attempt = 0; attempt < budget; ++attempt) {
    std::vector<std::vector<Rational>> pts(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(m)));
    bool zero_point = false;
    for (auto& p : pts) {
      bool zero = true;
      for (auto& x : p) {
        x = rng.uniform(-20, 20);
        zero = zero && x == 0;
      }
      zero_point = zero_point || zero;
    }
    if (zero_point) continue;
    Configuration c(std::move(pts));
    if (all_subsets_independent(c)) return c;
  }
  throw std::runtime_error("configuration sampling budget exhausted");
}

Configuration sample_configuration(int m, int n, std::uint64_t seed, std::string_view stream) {
  RandomStream rng(seed, stream);
  return sample_configuration(m, n, rng);
}

Rational bracket(const Configuration& c, std::span<const std::uint8_t> labels) {
  const int m = c.dimension();
  if (static_cast<int>(labels.size()) != m) throw std::invalid_argument("bracket needs one label per coordinate");
  std::vector<std::vector<Rational>> a;
  for (auto l : labels) {
    if (l < 1 || l > c.size()) throw std::invalid_argument("bracket label out of range");
    a.push_back(c.point(l - 1));
  }
  return small_determinant(std::move(a));
}

Rational evaluate_invariant(const Tableau& t, const Configuration& c) {
  if (t.rows() != c.dimension() || t.points() != c.size()) throw std::invalid_argument("tableau and configuration differ in shape");
  Rational v = 1;
  for (int col = 0; col < t.columns() && v != 0; ++col) v *= bracket(c, t.column(col));
  return v;
}

Rational evaluate_invariant(const TableauSum& s, const Configuration& c) {
  Rational v = 0;
  for (const auto& [t, coef] : s.terms()) v += coef * evaluate_invariant(t, c);
  return v;
}

BracketTable::BracketTable(const Configuration& c) : m_(c.dimension()), n_(c.size()) {
  if (n_ > 20) throw std::invalid_argument("bracket table supports at most 20 points");
  by_mask_.resize(std::size_t{1} << n_);
  std::vector<std::uint8_t> labels;
  for (std::uint32_t mask = 0; mask < by_mask_.size(); ++mask) {
    if (__builtin_popcount(mask) != m_) continue;
    labels.clear();
    for (int i = 0; i < n_; ++i) {
      if (mask >> i & 1) labels.push_back(static_cast<std::uint8_t>(i + 1));
    }
    by_mask_[mask] = bracket(c, labels);
  }
}

const Rational& BracketTable::operator()(std::span<const std::uint8_t> labels) const {
  std::uint32_t mask = 0;
  for (auto l : labels) mask |= 1u << (l - 1);
  return by_mask_[mask];
}

Rational BracketTable::evaluate(const Tableau& t) const {
  if (t.rows() != m_ || t.points() != n_) throw std::invalid_argument("tableau and configuration differ in shape");
  Rational v = 1;
  for (int col = 0; col < t.columns(); ++col) v *= (*this)(t.column(col));
  return v;
}

Rational BracketTable::evaluate(const TableauSum& s) const {
  Rational v = 0;
  for (const auto& [t, coef] : s.terms()) v += coef * evaluate(t);
  return v;
}

}  // namespace eightfold
