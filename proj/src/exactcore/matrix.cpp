#include "eightfold/exactcore/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace eightfold {

namespace {

// Row-wise denominator clearing; rank and (up to the returned factor) the
// determinant are preserved.
std::vector<Integer> integer_rows(const ExactMatrix& m, Integer* scale) {
  std::vector<Integer> out(m.rows() * m.cols());
  if (scale) *scale = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (const auto& q : m.row(r)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& q = m(r, c);
      out[r * m.cols() + c] = q.get_num() * (l / q.get_den());
    }
    if (scale) *scale *= l;
  }
  return out;
}

// Fraction-free elimination; returns the rank, and the signed determinant
// numerator through `det` when the matrix is square.
std::size_t bareiss(std::vector<Integer>& a, std::size_t rows, std::size_t cols, Integer* det) {
  Integer prev = 1;
  std::size_t rank = 0;
  int sign = 1;
  Integer tmp;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (a[r * cols + col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(a[pivot * cols + c], a[rank * cols + c]);
      sign = -sign;
    }
    const Integer& p = a[rank * cols + col];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      Integer factor = a[r * cols + col];
      for (std::size_t c = col + 1; c < cols; ++c) {
        tmp = p * a[r * cols + c] - factor * a[rank * cols + c];
        mpz_divexact(a[r * cols + c].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a[r * cols + col] = 0;
    }
    prev = p;
    ++rank;
  }
  if (det) {
    if (rows != cols || rank < rows) {
      *det = 0;
    } else {
      *det = rows == 0 ? Integer(1) : a[(rows - 1) * cols + (cols - 1)];
      if (sign < 0) *det = -*det;
    }
  }
  return rank;
}

}  // namespace

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
  ExactMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

ModularMatrix ModularMatrix::reduce(const ExactMatrix& m, std::uint32_t prime) {
  PrimeField f(prime);
  ModularMatrix out(m.rows(), m.cols(), prime);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = f.from_rational(m(r, c));
  }
  return out;
}

std::size_t rank(const ExactMatrix& m) {
  auto a = integer_rows(m, nullptr);
  return bareiss(a, m.rows(), m.cols(), nullptr);
}

std::size_t rank(const ModularMatrix& m) {
  ModularEchelon ech(m.prime(), m.cols());
  std::vector<std::uint32_t> buf(m.cols());
  for (std::size_t r = 0; r < m.rows() && ech.rank() < m.cols(); ++r) {
    std::copy(m.row(r).begin(), m.row(r).end(), buf.begin());
    ech.add_row(buf);
  }
  return ech.rank();
}

Rational determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  Integer scale;
  auto a = integer_rows(m, &scale);
  Integer det;
  bareiss(a, m.rows(), m.cols(), &det);
  Rational out(det, scale);
  out.canonicalize();
  return out;
}

std::vector<Rational> solve_triangular(const ExactMatrix& system, std::span<const Rational> rhs) {
  const std::size_t n = system.rows();
  if (system.cols() != n) throw std::invalid_argument("triangular solve needs a square matrix");
  if (rhs.size() != n) throw std::invalid_argument("right-hand side length mismatch");
  bool upper = true;
  bool lower = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (system(i, j) == 0) continue;
      if (j < i) upper = false;
      if (j > i) lower = false;
    }
  }
  if (!upper && !lower) throw std::invalid_argument("matrix is not triangular");
  for (std::size_t i = 0; i < n; ++i) {
    if (system(i, i) == 0) throw std::domain_error("zero diagonal entry in triangular system");
  }
  std::vector<Rational> x(n);
  if (upper) {
    for (std::size_t i = n; i-- > 0;) {
      Rational s = rhs[i];
      for (std::size_t j = i + 1; j < n; ++j) s -= system(i, j) * x[j];
      x[i] = s / system(i, i);
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      Rational s = rhs[i];
      for (std::size_t j = 0; j < i; ++j) s -= system(i, j) * x[j];
      x[i] = s / system(i, i);
    }
  }
  return x;
}

std::vector<std::vector<Rational>> kernel_basis(const ExactMatrix& m) {
  ExactMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (a(i, c) != 0) {
        p = i;
        break;
      }
    }
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    }
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

ModularEchelon::ModularEchelon(std::uint32_t prime, std::size_t cols) : field_(prime), cols_(cols) {}

bool ModularEchelon::add_row(std::span<std::uint32_t> row) {
  if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
  const std::uint32_t p = field_.prime();
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const std::size_t pc = pivots_[k];
    const std::uint32_t f = row[pc];
    if (f == 0) continue;
    const std::uint32_t nf = p - f;
    const std::uint32_t* b = basis_.data() + k * cols_;
    for (std::size_t c = pc; c < cols_; ++c) {
      if (b[c] == 0) continue;
      row[c] = field_.reduce(row[c] + static_cast<std::uint64_t>(nf) * b[c]);
    }
  }
  std::size_t pc = 0;
  while (pc < cols_ && row[pc] == 0) ++pc;
  if (pc == cols_) return false;
  const std::uint32_t inv = field_.inv(row[pc]);
  for (std::size_t c = pc; c < cols_; ++c) row[c] = field_.mul(row[c], inv);
  pivots_.push_back(pc);
  basis_.insert(basis_.end(), row.begin(), row.end());
  return true;
}

RankCertificate certified_rank(const ExactMatrix& m, std::span<const std::uint32_t> primes) {
  RankCertificate cert;
  cert.primes.assign(primes.begin(), primes.end());
  for (auto p : primes) cert.modular_ranks.push_back(rank(ModularMatrix::reduce(m, p)));
  const bool agree = !cert.modular_ranks.empty() &&
                     std::all_of(cert.modular_ranks.begin(), cert.modular_ranks.end(),
                                 [&](std::size_t r) { return r == cert.modular_ranks.front(); });
  if (agree) {
    cert.rank = cert.modular_ranks.front();
  } else {
    cert.exact_recomputed = true;
    cert.rank = rank(m);
  }
  return cert;
}

}  // namespace eightfold
