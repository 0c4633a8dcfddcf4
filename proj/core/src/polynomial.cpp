#include "psatz/polynomial.hpp"

#include <cctype>
#include <sstream>

namespace psatz {

Polynomial::Polynomial(std::size_t dim) : dim_(dim) {
  if (dim_ == 0) throw std::invalid_argument("polynomial dimension must be positive");
}

Polynomial Polynomial::constant(std::size_t dim, const Rational& c) {
  Polynomial p(dim);
  p.add_term(MultiIndex(dim), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t dim, std::size_t index) {
  if (index >= dim) throw std::invalid_argument("variable index out of range");
  MultiIndex alpha(dim);
  alpha[index] = 1;
  return monomial(alpha, Rational(1));
}

Polynomial Polynomial::monomial(const MultiIndex& alpha, const Rational& c) {
  Polynomial p(alpha.dimension());
  p.add_term(alpha, c);
  return p;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  // Graded-lex keys: the last term has the maximal degree.
  return static_cast<int>(terms_.rbegin()->first.total_degree());
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned deg = terms_.begin()->first.total_degree();
  return terms_.rbegin()->first.total_degree() == deg;
}

Rational Polynomial::coefficient(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(MultiIndex(dim_)); }

void Polynomial::add_term(const MultiIndex& alpha, const Rational& c) {
  if (alpha.dimension() != dim_) {
    throw std::invalid_argument("term dimension does not match polynomial dimension");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out(dim_);
  for (const auto& [alpha, c] : terms_) out.terms_.emplace(alpha, -c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (dim_ != other.dim_) throw std::invalid_argument("polynomial dimension mismatch");
  for (const auto& [alpha, c] : other.terms_) add_term(alpha, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (dim_ != other.dim_) throw std::invalid_argument("polynomial dimension mismatch");
  for (const auto& [alpha, c] : other.terms_) add_term(alpha, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("polynomial dimension mismatch");
  Polynomial out(a.dim_);
  for (const auto& [alpha, ca] : a.terms_) {
    for (const auto& [beta, cb] : b.terms_) {
      out.add_term(alpha + beta, ca * cb);
    }
  }
  return out;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  Polynomial out(p.dim_);
  if (c == 0) return out;
  for (const auto& [alpha, pc] : p.terms_) out.terms_.emplace(alpha, c * pc);
  return out;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = constant(dim_, Rational(1));
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
  if (point.size() != dim_) throw std::invalid_argument("evaluation point length mismatch");
  Rational sum(0);
  for (const auto& [alpha, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < dim_; ++i) {
      for (unsigned e = 0; e < alpha[i]; ++e) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

double Polynomial::eval(const std::vector<double>& point) const {
  if (point.size() != dim_) throw std::invalid_argument("evaluation point length mismatch");
  double sum = 0.0;
  for (const auto& [alpha, c] : terms_) {
    double term = to_double(c);
    for (std::size_t i = 0; i < dim_; ++i) {
      for (unsigned e = 0; e < alpha[i]; ++e) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

std::string Polynomial::str() const { return to_string(*this); }

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
      position_(position) {}

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_space();
    return pos >= text.size();
  }
  char peek() {
    skip_space();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool starts_digit() { return std::isdigit(static_cast<unsigned char>(peek())); }

  Integer read_integer() {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw ParseError("expected an integer", pos);
    return Integer(text.substr(start, pos - start));
  }

  Rational read_rational() {
    Integer num = read_integer();
    Integer den{1};
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      den = read_integer();
      if (den == 0) throw ParseError("zero denominator", pos);
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  // Returns (0-based variable index, exponent).
  std::pair<std::size_t, unsigned> read_factor() {
    skip_space();
    if (peek() != 'x') throw ParseError("expected a variable factor 'xi'", pos);
    ++pos;
    Integer idx = read_integer();
    if (idx < 1) throw ParseError("variable indices start at 1", pos);
    unsigned exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      Integer e = read_integer();
      if (e < 0) throw ParseError("negative exponent", pos);
      exponent = static_cast<unsigned>(e.get_ui());
    }
    return {static_cast<std::size_t>(idx.get_ui()) - 1, exponent};
  }
};

struct RawTerm {
  Rational coefficient;
  std::vector<std::pair<std::size_t, unsigned>> factors;
};

std::vector<RawTerm> parse_terms(const std::string& text, std::size_t& max_index) {
  Cursor cur{text};
  std::vector<RawTerm> terms;
  max_index = 0;
  if (cur.done()) throw ParseError("empty polynomial", 0);
  bool first = true;
  while (!cur.done()) {
    int sign = 1;
    char c = cur.peek();
    if (c == '+' || c == '-') {
      sign = c == '-' ? -1 : 1;
      ++cur.pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms", cur.pos);
    }
    first = false;

    RawTerm term;
    term.coefficient = Rational(sign);
    bool has_content = false;
    if (cur.starts_digit()) {
      term.coefficient *= cur.read_rational();
      has_content = true;
      if (cur.peek() == '*') ++cur.pos;
    }
    while (cur.peek() == 'x') {
      auto [index, exponent] = cur.read_factor();
      term.factors.emplace_back(index, exponent);
      max_index = std::max(max_index, index + 1);
      has_content = true;
      if (cur.peek() == '*') {
        ++cur.pos;
        if (cur.peek() != 'x' && !cur.starts_digit()) {
          throw ParseError("dangling '*'", cur.pos);
        }
        if (cur.starts_digit()) throw ParseError("coefficient must precede factors", cur.pos);
      }
    }
    if (!has_content) throw ParseError("expected a coefficient or a factor", cur.pos);
    terms.push_back(std::move(term));
  }
  return terms;
}

Polynomial assemble(const std::vector<RawTerm>& raw, std::size_t dim) {
  Polynomial p(dim);
  for (const auto& term : raw) {
    MultiIndex alpha(dim);
    for (const auto& [index, exponent] : term.factors) {
      if (index >= dim) {
        throw std::invalid_argument("variable x" + std::to_string(index + 1) +
                                    " exceeds dimension " + std::to_string(dim));
      }
      alpha[index] += exponent;
    }
    p.add_term(alpha, term.coefficient);
  }
  return p;
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, std::size_t dim) {
  std::size_t max_index = 0;
  auto raw = parse_terms(text, max_index);
  return assemble(raw, dim);
}

Polynomial parse_polynomial(const std::string& text) {
  std::size_t max_index = 0;
  auto raw = parse_terms(text, max_index);
  return assemble(raw, std::max<std::size_t>(max_index, 1));
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [alpha, c] : p.terms()) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool has_factor = !alpha.is_zero();
    if (!has_factor || mag != 1) {
      out << mag.get_str();
      if (has_factor) out << " ";
    }
    bool first_factor = true;
    for (std::size_t i = 0; i < alpha.dimension(); ++i) {
      if (alpha[i] == 0) continue;
      if (!first_factor) out << "*";
      out << "x" << (i + 1);
      if (alpha[i] > 1) out << "^" << alpha[i];
      first_factor = false;
    }
  }
  return out.str();
}

}  // namespace psatz
