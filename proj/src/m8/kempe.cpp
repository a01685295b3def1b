#include "eightfold/m8/kempe.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace eightfold {

namespace {

struct CubicTerm {
  int coef;
  const char* a;
  const char* b;
  const char* c;
};

constexpr CubicTerm kCubicTerms[] = {
    {1, "X1", "X1", "X2"}, {1, "X1", "X2", "X2"},
    {1, "X1", "X2", "Z1"}, {1, "X1", "X2", "Z2"}, {1, "X1", "X2", "Z3"}, {1, "X1", "X2", "Z4"},
    {1, "X1", "X2", "Z5"}, {1, "X1", "X2", "Z6"}, {1, "X1", "X2", "Z7"}, {1, "X1", "X2", "Z8"},
    {-1, "X1", "Y2", "Y4"}, {-1, "X2", "Y3", "Y1"},
    {1, "X1", "Z2", "Z6"}, {1, "X2", "Z3", "Z7"}, {1, "X1", "Z4", "Z8"}, {1, "X2", "Z5", "Z1"},
    {1, "Y1", "Z2", "Z6"}, {1, "Y2", "Z3", "Z7"}, {1, "Y3", "Z4", "Z8"}, {1, "Y4", "Z5", "Z1"},
    {-1, "Z1", "Z2", "Z3"}, {-1, "Z2", "Z3", "Z4"}, {-1, "Z3", "Z4", "Z5"}, {-1, "Z4", "Z5", "Z6"},
    {-1, "Z5", "Z6", "Z7"}, {-1, "Z6", "Z7", "Z8"}, {-1, "Z7", "Z8", "Z1"}, {-1, "Z8", "Z1", "Z2"},
};

Matching shifted(const Matching& g, const Permutation& step) { return relabel(g, step).second; }

std::vector<Matching> orbit(const Matching& g, const Permutation& step) {
  std::vector<Matching> out{g};
  for (Matching h = shifted(g, step); h != g; h = shifted(h, step)) out.push_back(h);
  return out;
}

TableauSum as_sum(const Matching& g) {
  const auto t = matching_to_tableau(g);
  return TableauSum(t.tableau, t.sign);
}

bool binomial_holds(const KempeBasis& b) {
  Straightener st;
  const TableauSum lhs = as_sum(b["X2"]) * as_sum(b["Y1"]);
  const TableauSum rhs = as_sum(b["Z4"]) * as_sum(b["Z8"]);
  return st.straighten(lhs - rhs).is_zero();
}

bool cubic_is_skew(const KempeBasis& b, const SparsePolynomial& cubic) {
  const std::vector<ExactMatrix> gens{s8_action(b, rotation(8)), s8_action(b, transposition(8, 1, 2))};
  return is_skew(cubic, gens, {permutation_sign(rotation(8)), -1});
}

}  // namespace

const std::vector<std::string>& kempe_names() {
  static const std::vector<std::string> names{"X1", "X2", "Y1", "Y2", "Y3", "Y4", "Z1",
                                              "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8"};
  return names;
}

VariableSet kempe_variables() {
  static const VariableSet vars = make_variables(kempe_names());
  return vars;
}

std::size_t KempeBasis::index_of(const std::string& name) const {
  const auto& names = kempe_names();
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw std::out_of_range("unknown Kempe name " + name);
  return static_cast<std::size_t>(it - names.begin());
}

SparsePolynomial build_cubic_explicit() {
  const auto vars = kempe_variables();
  SparsePolynomial c(vars);
  for (const auto& t : kCubicTerms) {
    c += Rational(t.coef) * SparsePolynomial::variable(vars, t.a) * SparsePolynomial::variable(vars, t.b) *
         SparsePolynomial::variable(vars, t.c);
  }
  return c;
}

ExactMatrix s8_action(const KempeBasis& basis, const Permutation& g) {
  std::map<Matching, std::size_t> position;
  for (std::size_t i = 0; i < basis.matchings.size(); ++i) position.emplace(basis.matchings[i], i);
  const std::size_t n = basis.matchings.size();
  ExactMatrix a(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto [sign, image] = relabel(basis.matchings[k], g);
    for (const auto& [h, coef] : resolve_crossings(image)) a(position.at(h), k) += sign * Rational(coef);
  }
  return a;
}

SparsePolynomial act(const SparsePolynomial& p, const ExactMatrix& action) {
  const auto& vars = p.variable_set();
  const std::size_t n = p.num_variables();
  if (action.rows() != n || action.cols() != n) throw std::invalid_argument("action matrix size mismatch");
  std::vector<SparsePolynomial> images;
  for (std::size_t k = 0; k < n; ++k) {
    SparsePolynomial img(vars);
    for (std::size_t l = 0; l < n; ++l) {
      if (action(l, k) != 0) img += action(l, k) * SparsePolynomial::variable(vars, l);
    }
    images.push_back(std::move(img));
  }
  return p.substitute(images);
}

bool is_skew(const SparsePolynomial& p, const std::vector<ExactMatrix>& generators, const std::vector<int>& signs) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (act(p, generators[i]) != Rational(signs[i]) * p) return false;
  }
  return true;
}

KempeBasis kempe_basis_from(const std::vector<Matching>& matchings, int direction) {
  KempeBasis b;
  b.matchings = matchings;
  b.direction = direction;
  if (matchings.size() != 14) throw std::invalid_argument("a Kempe basis has 14 matchings");
  auto sorted = matchings;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != noncrossing_matchings(8)) throw std::invalid_argument("not the 14 non-crossing matchings");
  if (!binomial_holds(b) || !cubic_is_skew(b, build_cubic_explicit())) {
    throw std::invalid_argument("binding is inconsistent with the explicit cubic");
  }
  b.candidates = b.consistent = 1;
  return b;
}

KempeBasis bind_kempe_labels() {
  const auto basis = noncrossing_matchings(8);
  const auto cubic = build_cubic_explicit();
  std::vector<KempeBasis> found;
  std::size_t candidates = 0;
  for (int direction : {1, -1}) {
    const Permutation step = direction == 1 ? rotation(8) : inverse(rotation(8));
    std::map<std::size_t, std::vector<Matching>> starts;
    for (const auto& g : basis) {
      const auto o = orbit(g, step);
      starts[o.size()].push_back(g);
    }
    if (starts[2].size() != 2 || starts[4].size() != 4 || starts[8].size() != 8) {
      throw std::logic_error("unexpected rotation orbit structure");
    }
    for (const auto& x1 : starts[2]) {
      for (const auto& y1 : starts[4]) {
        for (const auto& z1 : starts[8]) {
          ++candidates;
          KempeBasis b;
          b.direction = direction;
          for (const auto& h : orbit(x1, step)) b.matchings.push_back(h);
          for (const auto& h : orbit(y1, step)) b.matchings.push_back(h);
          for (const auto& h : orbit(z1, step)) b.matchings.push_back(h);
          if (binomial_holds(b) && cubic_is_skew(b, cubic)) found.push_back(std::move(b));
        }
      }
    }
  }
  if (found.empty()) throw std::logic_error("no Kempe binding is consistent with the explicit cubic");
  KempeBasis chosen = found.front();
  chosen.candidates = candidates;
  chosen.consistent = found.size();
  return chosen;
}

SkewAverageCubic build_cubic_skew_average(const KempeBasis& basis, const SparsePolynomial& explicit_cubic) {
  const Matching seed = Matching::parse(8, "1-2 3-4 5-6 7-8");
  std::map<Matching, long> weight;
  for_each_permutation(8, [&](const Permutation& g, int sign) {
    const auto [orient, image] = relabel(seed, g);
    weight[image] += sign * orient;
  });

  std::map<Matching, std::size_t> position;
  for (std::size_t i = 0; i < basis.matchings.size(); ++i) position.emplace(basis.matchings[i], i);
  const auto vars = kempe_variables();
  SkewAverageCubic out{SparsePolynomial(vars), Rational(0), false};
  for (const auto& [g, w] : weight) {
    if (w == 0) continue;
    SparsePolynomial form(vars);
    for (const auto& [h, coef] : resolve_crossings(g)) form += Rational(coef) * SparsePolynomial::variable(vars, position.at(h));
    out.cubic += Rational(w) * form * form * form;
  }
  if (!out.cubic.is_zero() && !explicit_cubic.is_zero()) {
    const auto& [e, c] = *explicit_cubic.terms().begin();
    out.scalar = out.cubic.coefficient(e) / c;
    out.proportional = out.scalar != 0 && out.cubic == out.scalar * explicit_cubic;
  }
  return out;
}

std::vector<Rational> kempe_coordinates(const KempeBasis& basis, const Configuration& c) {
  const BracketTable brackets(c);
  std::vector<Rational> out;
  for (const auto& g : basis.matchings) {
    const auto t = matching_to_tableau(g);
    out.push_back(t.sign * brackets.evaluate(t.tableau));
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> describe(const KempeBasis& basis) {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < basis.matchings.size(); ++i) out.emplace_back(kempe_names()[i], basis.matchings[i].to_string());
  return out;
}

}  // namespace eightfold
