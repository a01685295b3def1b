#include "eightfold/tableaux/tableau.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace eightfold {

struct TableauFactory {
  static Tableau make(int m, int n, std::vector<std::uint8_t> entries) {
    Tableau t;
    t.m_ = m;
    t.n_ = n;
    t.entries_ = std::move(entries);
    return t;
  }
};

namespace {

void check_content(int m, int n, std::span<const std::uint8_t> raw) {
  if (m < 1 || n < 1 || raw.size() % static_cast<std::size_t>(m) != 0) {
    throw std::invalid_argument("tableau shape does not match row count");
  }
  std::vector<int> counts(static_cast<std::size_t>(n) + 1, 0);
  for (auto e : raw) {
    if (e < 1 || e > n) throw std::invalid_argument("tableau entry out of range");
    ++counts[e];
  }
  for (int v = 2; v <= n; ++v) {
    if (counts[v] != counts[1]) throw std::invalid_argument("tableau entries have unequal multiplicities");
  }
}

// Sorts each column and the column list; returns 0 if a column repeats.
int canonicalize(int m, std::vector<std::uint8_t>& e) {
  int sign = 1;
  const std::size_t cols = e.size() / static_cast<std::size_t>(m);
  for (std::size_t c = 0; c < cols; ++c) {
    std::uint8_t* col = e.data() + c * m;
    for (int i = 1; i < m; ++i) {
      for (int j = i; j > 0 && col[j - 1] >= col[j]; --j) {
        if (col[j - 1] == col[j]) return 0;
        std::swap(col[j - 1], col[j]);
        sign = -sign;
      }
    }
  }
  std::vector<std::vector<std::uint8_t>> columns(cols);
  for (std::size_t c = 0; c < cols; ++c) columns[c].assign(e.begin() + c * m, e.begin() + (c + 1) * m);
  std::sort(columns.begin(), columns.end());
  for (std::size_t c = 0; c < cols; ++c) std::copy(columns[c].begin(), columns[c].end(), e.begin() + c * m);
  return sign;
}

}  // namespace

bool Tableau::is_semistandard() const {
  for (int c = 0; c + 1 < columns(); ++c) {
    for (int r = 0; r < m_; ++r) {
      if (entry(r, c) > entry(r, c + 1)) return false;
    }
  }
  return true;
}

std::vector<std::string> Tableau::row_strings() const {
  std::vector<std::string> out;
  for (int r = 0; r < m_; ++r) {
    std::string row;
    for (int c = 0; c < columns(); ++c) {
      if (c) row += ' ';
      row += std::to_string(entry(r, c));
    }
    out.push_back(row);
  }
  return out;
}

std::string Tableau::to_string() const {
  std::string out;
  for (const auto& row : row_strings()) {
    if (!out.empty()) out += " / ";
    out += row;
  }
  return out;
}

std::optional<SignedTableau> normalize_raw(int m, int n, std::span<const std::uint8_t> raw_columns) {
  check_content(m, n, raw_columns);
  std::vector<std::uint8_t> e(raw_columns.begin(), raw_columns.end());
  const int sign = canonicalize(m, e);
  if (sign == 0) return std::nullopt;
  return SignedTableau{sign, TableauFactory::make(m, n, std::move(e))};
}

std::optional<SignedTableau> normalize(int m, int n, const std::vector<std::vector<int>>& columns) {
  std::vector<std::uint8_t> raw;
  for (const auto& col : columns) {
    if (static_cast<int>(col.size()) != m) throw std::invalid_argument("column length does not match row count");
    for (int v : col) {
      if (v < 1 || v > 255) throw std::invalid_argument("tableau entry out of range");
      raw.push_back(static_cast<std::uint8_t>(v));
    }
  }
  return normalize_raw(m, n, raw);
}

Tableau multiply(const Tableau& a, const Tableau& b) {
  if (a.rows() != b.rows() || a.points() != b.points()) throw std::invalid_argument("tableau shapes differ");
  std::vector<std::uint8_t> e(a.entries());
  e.insert(e.end(), b.entries().begin(), b.entries().end());
  canonicalize(a.rows(), e);
  return TableauFactory::make(a.rows(), a.points(), std::move(e));
}

std::optional<SignedTableau> relabel(const Tableau& t, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != t.points()) throw std::invalid_argument("permutation size mismatch");
  std::vector<std::uint8_t> e(t.entries().size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint8_t>(perm[t.entries()[i] - 1]);
  return normalize_raw(t.rows(), t.points(), e);
}

void TableauSum::add(const Tableau& t, const Rational& c) {
  if (c == 0) return;
  if (!terms_.empty()) {
    const Tableau& first = terms_.begin()->first;
    if (first.rows() != t.rows() || first.points() != t.points() || first.columns() != t.columns()) {
      throw std::invalid_argument("tableau sum terms must share a shape");
    }
  }
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void TableauSum::add(const std::optional<SignedTableau>& t, const Rational& c) {
  if (t) add(t->tableau, t->sign * c);
}

Rational TableauSum::coefficient(const Tableau& t) const {
  const auto it = terms_.find(t);
  return it == terms_.end() ? Rational(0) : it->second;
}

TableauSum& TableauSum::operator+=(const TableauSum& rhs) {
  for (const auto& [t, c] : rhs.terms_) add(t, c);
  return *this;
}

TableauSum& TableauSum::operator-=(const TableauSum& rhs) {
  for (const auto& [t, c] : rhs.terms_) add(t, -c);
  return *this;
}

TableauSum& TableauSum::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, v] : terms_) v *= c;
  return *this;
}

TableauSum operator*(const TableauSum& a, const TableauSum& b) {
  TableauSum out;
  for (const auto& [ta, ca] : a.terms()) {
    for (const auto& [tb, cb] : b.terms()) out.add(multiply(ta, tb), ca * cb);
  }
  return out;
}

bool TableauSum::is_semistandard() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.is_semistandard(); });
}

const TableauSum& Straightener::straighten(const Tableau& t) {
  if (auto it = memo_.find(t); it != memo_.end()) return it->second;
  if (t.is_semistandard()) return memo_.emplace(t, TableauSum(t)).first->second;
  if (active_.count(t)) throw std::logic_error("straightening revisited a tableau: " + t.to_string());
  if (++steps_ > step_limit_) throw std::runtime_error("straightening step limit exceeded");
  active_[t] = true;

  const int m = t.rows();
  int col = -1;
  int row = -1;
  for (int c = 0; c + 1 < t.columns() && col < 0; ++c) {
    for (int r = 0; r < m; ++r) {
      if (t.entry(r, c) > t.entry(r, c + 1)) {
        col = c;
        row = r;
        break;
      }
    }
  }

  // The alternating sum over exchanges of s = A[row..] + B[..row] vanishes.
  std::vector<std::uint8_t> s;
  for (int r = row; r < m; ++r) s.push_back(static_cast<std::uint8_t>(t.entry(r, col)));
  for (int r = 0; r <= row; ++r) s.push_back(static_cast<std::uint8_t>(t.entry(r, col + 1)));
  const int k = m - row;
  const int size = m + 1;

  TableauSum rest;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[i] = i;
  std::vector<std::uint8_t> raw(t.entries());
  while (true) {
    bool original = true;
    for (int i = 0; i < k; ++i) original = original && pick[i] == i;
    if (!original) {
      int parity = 0;
      for (int i = 0; i < k; ++i) parity += pick[i] - i;
      std::vector<bool> chosen(static_cast<std::size_t>(size), false);
      for (int i = 0; i < k; ++i) chosen[pick[i]] = true;
      std::uint8_t* a = raw.data() + col * m;
      std::uint8_t* b = raw.data() + (col + 1) * m;
      int ai = row;
      int bi = 0;
      for (int j = 0; j < size; ++j) {
        if (chosen[j]) {
          a[ai++] = s[j];
        } else {
          b[bi++] = s[j];
        }
      }
      rest.add(normalize_raw(m, t.points(), raw), parity % 2 ? -1 : 1);
    }
    int i = k - 1;
    while (i >= 0 && pick[i] == size - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }

  const Rational self = rest.coefficient(t);
  if (self + 1 == 0) throw std::logic_error("degenerate exchange relation at " + t.to_string());
  rest.add(t, -self);
  const Rational scale = -1 / (self + 1);

  TableauSum out;
  for (const auto& [u, c] : rest.terms()) {
    const TableauSum& su = straighten(u);
    for (const auto& [v, cv] : su.terms()) out.add(v, scale * c * cv);
  }
  active_.erase(t);
  return memo_.emplace(t, std::move(out)).first->second;
}

TableauSum Straightener::straighten(const TableauSum& s) {
  TableauSum out;
  for (const auto& [t, c] : s.terms()) {
    for (const auto& [u, cu] : straighten(t).terms()) out.add(u, c * cu);
  }
  return out;
}

TableauSum straighten(const TableauSum& s) {
  Straightener st;
  return st.straighten(s);
}

namespace {

struct SsytWalker {
  int m, n, d, width;
  std::map<std::pair<int, std::vector<int>>, std::uint64_t> memo;

  // Calls f(next_shape) for each horizontal strip of size d added to shape.
  template <class F>
  void strips(const std::vector<int>& shape, F&& f) {
    std::vector<int> next(shape);
    std::function<void(int, int)> rec = [&](int r, int left) {
      if (r == m) {
        if (left == 0) f(next);
        return;
      }
      const int cap = r == 0 ? width : shape[r - 1];
      for (int add = std::min(left, cap - shape[r]); add >= 0; --add) {
        next[r] = shape[r] + add;
        rec(r + 1, left - add);
      }
      next[r] = shape[r];
    };
    rec(0, d);
  }

  std::uint64_t count(int v, const std::vector<int>& shape) {
    if (v > n) return 1;
    auto key = std::make_pair(v, shape);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    strips(shape, [&](const std::vector<int>& next) { total += count(v + 1, next); });
    memo.emplace(std::move(key), total);
    return total;
  }

  void visit(int v, const std::vector<int>& shape, std::vector<std::vector<std::uint8_t>>& rows,
             const std::function<void(const Tableau&)>& f) {
    if (v > n) {
      std::vector<std::uint8_t> e(static_cast<std::size_t>(m * width));
      for (int c = 0; c < width; ++c) {
        for (int r = 0; r < m; ++r) e[static_cast<std::size_t>(c * m + r)] = rows[r][c];
      }
      f(TableauFactory::make(m, n, std::move(e)));
      return;
    }
    strips(shape, [&](const std::vector<int>& next) {
      for (int r = 0; r < m; ++r) {
        for (int c = shape[r]; c < next[r]; ++c) rows[r][c] = static_cast<std::uint8_t>(v);
      }
      visit(v + 1, next, rows, f);
    });
  }
};

SsytWalker make_walker(int m, int n, int d) {
  if (m < 1 || n < 1 || d < 0 || (d * n) % m != 0) throw std::invalid_argument("m must divide d * n");
  return SsytWalker{m, n, d, d * n / m, {}};
}

}  // namespace

std::uint64_t count_ssyt(int m, int n, int d) {
  auto w = make_walker(m, n, d);
  return w.count(1, std::vector<int>(static_cast<std::size_t>(m), 0));
}

void enumerate_ssyt(int m, int n, int d, const std::function<void(const Tableau&)>& visit) {
  auto w = make_walker(m, n, d);
  std::vector<std::vector<std::uint8_t>> rows(static_cast<std::size_t>(m), std::vector<std::uint8_t>(w.width));
  w.visit(1, std::vector<int>(static_cast<std::size_t>(m), 0), rows, visit);
}

std::vector<Tableau> list_ssyt(int m, int n, int d) {
  std::vector<Tableau> out;
  enumerate_ssyt(m, n, d, [&](const Tableau& t) { out.push_back(t); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace eightfold
