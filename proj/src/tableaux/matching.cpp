#include "eightfold/tableaux/matching.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace eightfold {

Matching::Matching(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 2 || n % 2 != 0 || static_cast<int>(edges_.size()) * 2 != n) {
    throw std::invalid_argument("not a perfect matching");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (auto& [a, b] : edges_) {
    if (a > b) std::swap(a, b);
    if (a < 1 || b > n || a == b || seen[a] || seen[b]) throw std::invalid_argument("not a perfect matching");
    seen[a] = seen[b] = true;
  }
  std::sort(edges_.begin(), edges_.end());
}

Matching Matching::parse(int n, const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  std::vector<Edge> edges;
  while (in >> tok) {
    const auto dash = tok.find('-');
    if (dash == std::string::npos) throw std::invalid_argument("edge must look like i-j: " + tok);
    edges.emplace_back(std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1)));
  }
  return Matching(n, std::move(edges));
}

bool Matching::is_noncrossing() const {
  for (const auto& [a, c] : edges_) {
    for (const auto& [b, d] : edges_) {
      if (a < b && b < c && c < d) return false;
    }
  }
  return true;
}

std::string Matching::to_string() const {
  std::string out;
  for (const auto& [a, b] : edges_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(a) + "-" + std::to_string(b);
  }
  return out;
}

namespace {

void build_matchings(std::vector<bool>& used, std::vector<Matching::Edge>& edges, int n, std::vector<Matching>& out) {
  int a = 1;
  while (a <= n && used[a]) ++a;
  if (a > n) {
    out.emplace_back(n, edges);
    return;
  }
  used[a] = true;
  for (int b = a + 1; b <= n; ++b) {
    if (used[b]) continue;
    used[b] = true;
    edges.emplace_back(a, b);
    build_matchings(used, edges, n, out);
    edges.pop_back();
    used[b] = false;
  }
  used[a] = false;
}

}  // namespace

std::vector<Matching> all_matchings(int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("matchings need an even number of points");
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::vector<Matching::Edge> edges;
  std::vector<Matching> out;
  build_matchings(used, edges, n, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Matching> noncrossing_matchings(int n) {
  auto all = all_matchings(n);
  std::vector<Matching> out;
  std::copy_if(all.begin(), all.end(), std::back_inserter(out), [](const Matching& g) { return g.is_noncrossing(); });
  return out;
}

SignedTableau matching_to_tableau(const Matching& g) {
  std::vector<std::vector<int>> cols;
  for (const auto& [a, b] : g.edges()) cols.push_back({a, b});
  return *normalize(2, g.points(), cols);
}

std::pair<int, Matching> relabel(const Matching& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.points()) throw std::invalid_argument("permutation size mismatch");
  int sign = 1;
  std::vector<Matching::Edge> edges;
  for (const auto& [a, b] : g.edges()) {
    const int x = perm[a - 1];
    const int y = perm[b - 1];
    if (x > y) sign = -sign;
    edges.emplace_back(x, y);
  }
  return {sign, Matching(g.points(), std::move(edges))};
}

std::map<Matching, Integer> resolve_crossings(const Matching& g) {
  std::map<Matching, Integer> out;
  std::vector<std::pair<Matching, Integer>> work{{g, Integer(1)}};
  while (!work.empty()) {
    auto [h, coef] = std::move(work.back());
    work.pop_back();
    const auto& e = h.edges();
    bool crossed = false;
    for (std::size_t i = 0; i < e.size() && !crossed; ++i) {
      for (std::size_t j = 0; j < e.size() && !crossed; ++j) {
        const auto [a, c] = e[i];
        const auto [b, d] = e[j];
        if (!(a < b && b < c && c < d)) continue;
        crossed = true;
        auto keep = e;
        keep.erase(keep.begin() + static_cast<std::ptrdiff_t>(std::max(i, j)));
        keep.erase(keep.begin() + static_cast<std::ptrdiff_t>(std::min(i, j)));
        auto first = keep;
        first.insert(first.end(), {{a, b}, {c, d}});
        auto second = keep;
        second.insert(second.end(), {{a, d}, {b, c}});
        work.emplace_back(Matching(h.points(), std::move(first)), coef);
        work.emplace_back(Matching(h.points(), std::move(second)), coef);
      }
    }
    if (!crossed) out[h] += coef;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::vector<Rational> expand_in_matching_basis(const TableauSum& s, const std::vector<Matching>& basis) {
  std::map<Matching, std::size_t> position;
  for (std::size_t i = 0; i < basis.size(); ++i) position.emplace(basis[i], i);
  std::vector<Rational> coeffs(basis.size());
  for (const auto& [t, c] : s.terms()) {
    if (t.rows() != 2 || t.degree() != 1) throw std::invalid_argument("matching basis expansion needs degree-1 two-row tableaux");
    std::vector<Matching::Edge> edges;
    for (int col = 0; col < t.columns(); ++col) edges.emplace_back(t.entry(0, col), t.entry(1, col));
    for (const auto& [h, k] : resolve_crossings(Matching(t.points(), std::move(edges)))) {
      const auto it = position.find(h);
      if (it == position.end()) throw std::invalid_argument("matching outside the basis: " + h.to_string());
      coeffs[it->second] += c * Rational(k);
    }
  }
  return coeffs;
}

}  // namespace eightfold
