#include "eightfold/exactcore/monomials.hpp"

#include <algorithm>
#include <stdexcept>

namespace eightfold {

namespace {
void compositions(int nvars, int remaining, std::size_t pos, Exponent& cur, std::vector<Exponent>& out) {
  if (pos + 1 == static_cast<std::size_t>(nvars)) {
    cur[pos] = static_cast<std::uint16_t>(remaining);
    out.push_back(cur);
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    cur[pos] = static_cast<std::uint16_t>(k);
    compositions(nvars, remaining - k, pos + 1, cur, out);
  }
}
}  // namespace

MonomialIndex::MonomialIndex(int num_variables, int degree) : nvars_(num_variables), degree_(degree) {
  if (num_variables < 1 || degree < 0) throw std::invalid_argument("invalid monomial space");
  Exponent cur(num_variables, 0);
  compositions(num_variables, degree, 0, cur, monos_);
  std::sort(monos_.begin(), monos_.end(), GrevlexGreater{});
  for (std::size_t i = 0; i < monos_.size(); ++i) lookup_.emplace(monos_[i], i);
}

std::size_t MonomialIndex::index(const Exponent& e) const {
  const auto it = lookup_.find(e);
  if (it == lookup_.end()) throw std::out_of_range("monomial not in index");
  return it->second;
}

std::vector<std::size_t> MonomialIndex::times_variable_table(const MonomialIndex& next) const {
  if (next.degree_ != degree_ + 1 || next.nvars_ != nvars_) throw std::invalid_argument("incompatible monomial spaces");
  std::vector<std::size_t> table(monos_.size() * nvars_);
  for (std::size_t i = 0; i < monos_.size(); ++i) {
    Exponent e = monos_[i];
    for (int v = 0; v < nvars_; ++v) {
      ++e[v];
      table[i * nvars_ + v] = next.index(e);
      --e[v];
    }
  }
  return table;
}

std::size_t monomial_count(int n, int d) {
  std::size_t c = 1;
  for (int i = 1; i <= d; ++i) c = c * static_cast<std::size_t>(n + i - 1) / static_cast<std::size_t>(i);
  return c;
}

}  // namespace eightfold
