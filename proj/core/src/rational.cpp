#include "psatz/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace psatz {

Rational rational_from_string(const std::string& text) {
  if (text.empty()) {
    throw std::invalid_argument("empty rational literal");
  }
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  auto read_digits = [&](Integer& out) {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw std::invalid_argument("malformed rational literal: " + text);
    }
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    out = Integer(text.substr(start, pos - start));
  };
  Integer num, den{1};
  read_digits(num);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    read_digits(den);
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
  }
  if (pos != text.size()) {
    throw std::invalid_argument("trailing characters in rational literal: " + text);
  }
  Rational q(num, den);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("cannot convert non-finite double to rational");
  }
  return Rational(x);
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

}  // namespace psatz
