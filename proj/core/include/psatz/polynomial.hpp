#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "psatz/multi_index.hpp"
#include "psatz/rational.hpp"

namespace psatz {

/// Sparse multivariate polynomial over exact rationals.
///
/// The term map is the canonical form: it never stores a zero coefficient,
/// every key has length equal to the ambient dimension, and two polynomials
/// are equal exactly when their term maps are equal. Terms iterate in
/// graded-lex order. Values are immutable in spirit: every operation
/// returns a fresh polynomial.
class Polynomial {
 public:
  using TermMap = std::map<MultiIndex, Rational, GrlexLess>;

  explicit Polynomial(std::size_t dim = 1);

  static Polynomial constant(std::size_t dim, const Rational& c);
  /// x_{index} (0-based variable index).
  static Polynomial variable(std::size_t dim, std::size_t index);
  static Polynomial monomial(const MultiIndex& alpha, const Rational& c);

  std::size_t dimension() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Degree of the zero polynomial is -1.
  int total_degree() const;
  bool is_homogeneous() const;
  bool is_linear() const { return total_degree() <= 1; }

  /// Coefficient of x^alpha, zero when the term is absent.
  Rational coefficient(const MultiIndex& alpha) const;
  Rational constant_term() const;

  /// Accumulates c * x^alpha, dropping the term if the sum cancels.
  void add_term(const MultiIndex& alpha, const Rational& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend Polynomial operator*(const Polynomial& p, const Rational& c) { return c * p; }

  bool operator==(const Polynomial& other) const {
    return dim_ == other.dim_ && terms_ == other.terms_;
  }

  /// Repeated-squaring power; pow(0) is the constant 1.
  Polynomial pow(unsigned n) const;

  /// Exact evaluation sum_alpha c_alpha * point^alpha.
  Rational eval(const std::vector<Rational>& point) const;
  double eval(const std::vector<double>& point) const;

  std::string str() const;

 private:
  std::size_t dim_;
  TermMap terms_;
};

/// Syntax error raised by parse_polynomial, carrying the offending position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses the text grammar: terms separated by +/-, each an optional
/// rational coefficient ("a/b" or integer) followed by '*'- or
/// space-separated factors "xi^k" (k omitted means 1).
Polynomial parse_polynomial(const std::string& text, std::size_t dim);

/// Same, with the dimension inferred from the largest variable index.
Polynomial parse_polynomial(const std::string& text);

std::string to_string(const Polynomial& p);

}  // namespace psatz
