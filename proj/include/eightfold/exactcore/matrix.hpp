#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "eightfold/exactcore/modular.hpp"
#include "eightfold/exactcore/rational.hpp"

namespace eightfold {

/// Dense row-major matrix of exact rationals.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  bool operator==(const ExactMatrix& rhs) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Dense matrix of residues modulo a recorded prime; entries lie in [0, p).
class ModularMatrix {
 public:
  ModularMatrix(std::size_t rows, std::size_t cols, std::uint32_t prime)
      : rows_(rows), cols_(cols), prime_(prime), data_(rows * cols, 0) {}

  static ModularMatrix reduce(const ExactMatrix& m, std::uint32_t prime);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t prime() const { return prime_; }
  std::uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<std::uint32_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const std::uint32_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::uint32_t prime_;
  std::vector<std::uint32_t> data_;
};

/// Exact rank by fraction-free (Bareiss) elimination after clearing row
/// denominators.
std::size_t rank(const ExactMatrix& m);

/// Rank over Z/p. A lower bound on the rank of any rational lift.
std::size_t rank(const ModularMatrix& m);

/// Exact determinant of a square matrix (fraction-free elimination).
Rational determinant(const ExactMatrix& m);

/// Solves a square triangular system (upper or lower) by substitution.
/// Throws std::invalid_argument if the matrix is not square and triangular,
/// std::domain_error on a zero diagonal entry.
std::vector<Rational> solve_triangular(const ExactMatrix& system, std::span<const Rational> rhs);

/// Basis of the right kernel {x : m x = 0}, from the reduced row echelon form.
std::vector<std::vector<Rational>> kernel_basis(const ExactMatrix& m);

/// Incremental row echelon form over Z/p. Rows are fed one at a time and
/// reduced against the basis so far; only independent rows are kept.
class ModularEchelon {
 public:
  ModularEchelon(std::uint32_t prime, std::size_t cols);

  /// Reduces `row` in place; returns true (and keeps it) if independent.
  bool add_row(std::span<std::uint32_t> row);
  std::size_t rank() const { return pivots_.size(); }
  std::size_t cols() const { return cols_; }
  const PrimeField& field() const { return field_; }

 private:
  PrimeField field_;
  std::size_t cols_;
  std::vector<std::size_t> pivots_;
  std::vector<std::uint32_t> basis_;  // rank x cols, each row zero before its pivot and 1 at it
};

/// Rank at several primes, combined under the two-prime agreement rule.
struct RankCertificate {
  std::vector<std::uint32_t> primes;
  std::vector<std::size_t> modular_ranks;
  bool exact_recomputed = false;
  std::size_t rank = 0;
};

/// Modular ranks at each prime; if they disagree the exact rank is computed.
RankCertificate certified_rank(const ExactMatrix& m, std::span<const std::uint32_t> primes);

}  // namespace eightfold
