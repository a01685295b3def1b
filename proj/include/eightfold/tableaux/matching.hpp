#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eightfold/exactcore/rational.hpp"
#include "eightfold/tableaux/tableau.hpp"

namespace eightfold {

/// Perfect matching on the cyclically ordered vertices 1..n, every edge
/// oriented from the smaller to the larger label.
class Matching {
 public:
  using Edge = std::pair<int, int>;

  /// Throws std::invalid_argument unless the edges cover 1..n exactly once.
  Matching(int n, std::vector<Edge> edges);
  /// Parses "1-2 3-4 ...".
  static Matching parse(int n, const std::string& text);

  int points() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool is_noncrossing() const;
  std::string to_string() const;

  auto operator<=>(const Matching&) const = default;

 private:
  int n_;
  std::vector<Edge> edges_;
};

std::vector<Matching> all_matchings(int n);
/// Lexicographic order of the sorted edge lists.
std::vector<Matching> noncrossing_matchings(int n);

/// The two-row tableau whose columns are the edges; sign is always +1 for an
/// upward-oriented matching.
SignedTableau matching_to_tableau(const Matching& g);

/// Image of g under a relabelling, as a signed matching after re-orienting
/// every edge upward.
std::pair<int, Matching> relabel(const Matching& g, std::span<const int> perm);

/// Writes g as an integer combination of non-crossing matchings by repeatedly
/// applying [ac][bd] = [ab][cd] + [ad][bc] for a < b < c < d.
std::map<Matching, Integer> resolve_crossings(const Matching& g);

/// Coefficients of a degree-1 two-row tableau sum on the given basis.
/// Throws std::invalid_argument if a term does not come from a perfect
/// matching or lands outside the basis.
std::vector<Rational> expand_in_matching_basis(const TableauSum& s, const std::vector<Matching>& basis);

}  // namespace eightfold
