#include "eightfold/exactcore/sparse_polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace eightfold {

namespace {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

const std::vector<std::string>& empty_names() {
  static const std::vector<std::string> names;
  return names;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

}  // namespace

bool GrevlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da > db;
  // Reverse lexicographic: the last differing exponent decides, smaller wins.
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

VariableSet make_variables(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

SparsePolynomial::SparsePolynomial(VariableSet variables) : vars_(std::move(variables)) {}

SparsePolynomial SparsePolynomial::constant(VariableSet variables, const Rational& c) {
  SparsePolynomial p(std::move(variables));
  p.add_term(Exponent(p.num_variables(), 0), c);
  return p;
}

SparsePolynomial SparsePolynomial::variable(VariableSet variables, std::size_t index) {
  SparsePolynomial p(std::move(variables));
  if (index >= p.num_variables()) throw std::out_of_range("variable index out of range");
  Exponent e(p.num_variables(), 0);
  e[index] = 1;
  p.add_term(e, Rational(1));
  return p;
}

SparsePolynomial SparsePolynomial::variable(VariableSet variables, std::string_view name) {
  SparsePolynomial probe(variables);
  return variable(std::move(variables), probe.index_of(name));
}

const std::vector<std::string>& SparsePolynomial::variables() const { return vars_ ? *vars_ : empty_names(); }

std::size_t SparsePolynomial::index_of(std::string_view name) const {
  const auto& names = variables();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return i;
  }
  throw std::out_of_range("unknown variable: " + std::string(name));
}

bool SparsePolynomial::same_variables(const SparsePolynomial& other) const {
  return vars_ == other.vars_ || variables() == other.variables();
}

void SparsePolynomial::require_same_variables(const SparsePolynomial& other) const {
  if (!same_variables(other)) throw std::invalid_argument("polynomials have different variable sets");
}

int SparsePolynomial::degree() const {
  // Graded order: the leading term carries the maximal degree.
  return terms_.empty() ? -1 : total_degree(terms_.begin()->first);
}

bool SparsePolynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return total_degree(t.first) == d; });
}

Rational SparsePolynomial::coefficient(const Exponent& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePolynomial::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != num_variables()) throw std::invalid_argument("exponent length does not match variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& rhs) {
  require_same_variables(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& rhs) {
  require_same_variables(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
  a.require_same_variables(b);
  SparsePolynomial out(a.vars_);
  Exponent e(a.num_variables());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

SparsePolynomial SparsePolynomial::operator-() const {
  SparsePolynomial out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

bool SparsePolynomial::operator==(const SparsePolynomial& rhs) const {
  return same_variables(rhs) && terms_ == rhs.terms_;
}

SparsePolynomial SparsePolynomial::derivative(std::size_t index) const {
  if (index >= num_variables()) throw std::out_of_range("variable index out of range");
  SparsePolynomial out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponent d = e;
    --d[index];
    out.add_term(d, c * e[index]);
  }
  return out;
}

Rational SparsePolynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != num_variables()) throw std::invalid_argument("point dimension does not match variable count");
  const int deg = std::max(degree(), 0);
  // powers[i][k] = point[i]^k
  std::vector<std::vector<Rational>> powers(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    powers[i].resize(deg + 1);
    powers[i][0] = 1;
    for (int k = 1; k <= deg; ++k) powers[i][k] = powers[i][k - 1] * point[i];
  }
  Rational sum = 0;
  Rational term;
  for (const auto& [e, c] : terms_) {
    term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i]) term *= powers[i][e[i]];
    }
    sum += term;
  }
  return sum;
}

Rational SparsePolynomial::evaluate(const std::map<std::string, Rational>& assignment) const {
  std::vector<Rational> point;
  point.reserve(num_variables());
  for (const auto& name : variables()) {
    const auto it = assignment.find(name);
    if (it == assignment.end()) throw std::invalid_argument("no value assigned to variable " + name);
    point.push_back(it->second);
  }
  return evaluate(point);
}

SparsePolynomial SparsePolynomial::substitute(std::span<const SparsePolynomial> images) const {
  if (images.size() != num_variables()) throw std::invalid_argument("substitution needs one image per variable");
  if (images.empty()) return *this;
  const VariableSet& target = images.front().variable_set();
  for (const auto& img : images) {
    if (!img.same_variables(images.front())) throw std::invalid_argument("substitution images disagree on variables");
  }
  const int deg = std::max(degree(), 0);
  std::vector<std::vector<SparsePolynomial>> powers(images.size());
  SparsePolynomial out(target);
  for (const auto& [e, c] : terms_) {
    SparsePolynomial term = SparsePolynomial::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) {
        pw.reserve(deg + 1);
        pw.push_back(SparsePolynomial::constant(target, 1));
      }
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * images[i]);
      term = term * pw[e[i]];
    }
    out += term;
  }
  return out;
}

std::string SparsePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += variables()[i];
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      os << mono;
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const SparsePolynomial& p) { return os << p.to_string(); }

std::string write_canonical(const SparsePolynomial& p) {
  std::ostringstream os;
  os << "vars\t";
  const auto& names = p.variables();
  for (std::size_t i = 0; i < names.size(); ++i) os << (i ? "," : "") << names[i];
  os << '\n';
  for (const auto& [e, c] : p.terms()) {
    os << c.get_str() << '\t';
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << '\n';
  }
  return os.str();
}

SparsePolynomial read_canonical(std::string_view text) {
  std::vector<std::string_view> lines = split(text, '\n');
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty() || lines.front().substr(0, 5) != "vars\t") {
    throw std::invalid_argument("canonical polynomial: missing header line");
  }
  std::vector<std::string> names;
  const std::string_view header = lines.front().substr(5);
  if (!header.empty()) {
    for (auto name : split(header, ',')) names.emplace_back(name);
  }
  SparsePolynomial p(make_variables(names));
  for (std::size_t ln = 1; ln < lines.size(); ++ln) {
    const auto fields = split(lines[ln], '\t');
    if (fields.size() != 2) throw std::invalid_argument("canonical polynomial: malformed term line");
    const auto parts = split(fields[1], ',');
    if (parts.size() != names.size()) throw std::invalid_argument("canonical polynomial: exponent length mismatch");
    Exponent e;
    for (auto part : parts) {
      if (part.empty() || part.find_first_not_of("0123456789") != std::string_view::npos) {
        throw std::invalid_argument("canonical polynomial: malformed exponent");
      }
      e.push_back(static_cast<std::uint16_t>(std::stoul(std::string(part))));
    }
    const Rational c = parse_rational(fields[0]);
    if (c == 0) throw std::invalid_argument("canonical polynomial: stored zero coefficient");
    if (p.terms().count(e)) throw std::invalid_argument("canonical polynomial: repeated exponent");
    p.add_term(e, c);
  }
  if (write_canonical(p) != std::string(text.substr(0, text.find_last_not_of('\n') + 1)) + "\n") {
    throw std::invalid_argument("canonical polynomial: terms not in canonical order");
  }
  return p;
}

}  // namespace eightfold
