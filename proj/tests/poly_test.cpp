#include <random>

#include "doctest.h"
#include "psatz/polynomial.hpp"
#include "test_support.hpp"

using namespace psatz;
using testsupport::random_polynomial;
using testsupport::random_rational;

namespace {

Polynomial p1(const std::string& text) { return parse_polynomial(text, 1); }
Polynomial p2(const std::string& text) { return parse_polynomial(text, 2); }

// Brute-force term convolution, independent of operator*.
Polynomial naive_mul(const Polynomial& a, const Polynomial& b) {
  Polynomial out(a.dimension());
  for (const auto& [alpha, ca] : a.terms()) {
    for (const auto& [beta, cb] : b.terms()) out.add_term(alpha + beta, ca * cb);
  }
  return out;
}

}  // namespace

TEST_CASE("addition basics") {
  CHECK(p1("1 + x1") + p1("1 - x1") == p1("2"));
  Polynomial p = p2("x1^2 - 3 x2");
  CHECK(p + Polynomial(2) == p);
  Polynomial cancel = p1("x1^2") + p1("0 - x1^2");
  CHECK(cancel.is_zero());
  CHECK(cancel.terms().empty());
}

TEST_CASE("addition dimension mismatch") {
  CHECK_THROWS_AS(p1("x1") + p2("x2"), std::invalid_argument);
}

TEST_CASE("multiplication basics") {
  CHECK(p1("1 + x1") * p1("1 - x1") == p1("1 - x1^2"));
  CHECK(p2("x1^2 - x1*x2 + x2^2") * p2("x1 + x2") == p2("x1^3 + x2^3"));
  Polynomial p = p2("2/3 x1*x2 - x2^2 + 5");
  CHECK(p * Polynomial::constant(2, Rational(1)) == p);
}

TEST_CASE("pow") {
  CHECK(p1("1 + x1").pow(2) == p1("1 + 2 x1 + x1^2"));
  CHECK(p2("x1*x2 - 1").pow(0) == p2("1"));
  // Binomial oracle for (x + y)^3.
  Polynomial expected(2);
  for (unsigned k = 0; k <= 3; ++k) {
    expected.add_term(MultiIndex{k, 3 - k}, Rational(binomial(3, k)));
  }
  CHECK(p2("x1 + x2").pow(3) == expected);
}

TEST_CASE("eval") {
  Polynomial disk = p2("1 - x1^2 - x2^2");
  CHECK(disk.eval({Rational(0), Rational(0)}) == 1);
  CHECK(disk.eval({Rational(1), Rational(0)}) == 0);
  CHECK(p2("x1^3 + x2^3").eval({Rational(1), Rational(1)}) == 2);
  CHECK_THROWS_AS(disk.eval(std::vector<Rational>{Rational(1)}), std::invalid_argument);
}

TEST_CASE("monomial enumeration is graded-lex sorted") {
  auto basis = monomials_up_to(2, 3);
  CHECK(basis.size() == 10);
  CHECK(basis.front() == MultiIndex{0, 0});
  CHECK(basis[1] == MultiIndex{1, 0});
  CHECK(basis[2] == MultiIndex{0, 1});
  CHECK(basis[3] == MultiIndex{2, 0});
  CHECK(basis[4] == MultiIndex{1, 1});
  CHECK(basis[5] == MultiIndex{0, 2});
  for (std::size_t i = 0; i + 1 < basis.size(); ++i) {
    CHECK(grlex_less(basis[i], basis[i + 1]));
  }
}

TEST_CASE("degree and homogeneity") {
  CHECK(p2("x1^3 + x2^3").total_degree() == 3);
  CHECK(p2("x1^3 + x2^3").is_homogeneous());
  CHECK(p1("x1^2 - x1 + 1").total_degree() == 2);
  CHECK_FALSE(p1("x1^2 - x1 + 1").is_homogeneous());
  CHECK(Polynomial(3).total_degree() == -1);
  CHECK(Polynomial(3).is_homogeneous());
}

TEST_CASE("parse and render") {
  Polynomial disk = parse_polynomial("1 - x1^2 - x2^2");
  CHECK(disk.dimension() == 2);
  CHECK(disk.term_count() == 3);

  Polynomial xy = parse_polynomial("x1*x2");
  CHECK(xy.term_count() == 1);
  CHECK(xy.coefficient(MultiIndex{1, 1}) == 1);

  Polynomial frac = parse_polynomial("2/3 x1");
  CHECK(parse_polynomial(to_string(frac), 1) == frac);

  CHECK(to_string(Polynomial(2)) == "0");
  CHECK(parse_polynomial("0", 2).is_zero());
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_polynomial("x1 + ", 1), ParseError);
  CHECK_THROWS_AS(parse_polynomial("", 1), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x0", 1), ParseError);
  CHECK_THROWS_AS(parse_polynomial("1/0", 1), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x1^", 1), ParseError);
  try {
    parse_polynomial("x1 + @", 1);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
  // Variable beyond the requested dimension.
  CHECK_THROWS_AS(parse_polynomial("x3", 2), std::invalid_argument);
}

TEST_CASE("render round trip on random polynomials") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t dim = 1 + trial % 3;
    Polynomial p = random_polynomial(rng, dim, 4, 5);
    if (p.is_zero()) continue;
    CHECK(parse_polynomial(to_string(p), dim) == p);
  }
}

TEST_CASE("ring axioms on random inputs") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t dim = 1 + trial % 3;
    Polynomial a = random_polynomial(rng, dim, 3);
    Polynomial b = random_polynomial(rng, dim, 3);
    Polynomial c = random_polynomial(rng, dim, 3);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == naive_mul(a, b));
  }
}

TEST_CASE("eval is a ring homomorphism") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t dim = 1 + trial % 3;
    Polynomial a = random_polynomial(rng, dim, 3);
    Polynomial b = random_polynomial(rng, dim, 3);
    std::vector<Rational> point;
    for (std::size_t i = 0; i < dim; ++i) point.push_back(random_rational(rng));
    CHECK((a * b).eval(point) == a.eval(point) * b.eval(point));
    CHECK((a + b).eval(point) == a.eval(point) + b.eval(point));
  }
}

TEST_CASE("pow equals repeated multiplication") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    Polynomial p = random_polynomial(rng, 2, 2, 3);
    Polynomial product = Polynomial::constant(2, Rational(1));
    for (unsigned n = 0; n <= 6; ++n) {
      CHECK(p.pow(n) == product);
      product = product * p;
    }
  }
}

TEST_CASE("canonical form stores no zero coefficients") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    Polynomial a = random_polynomial(rng, 2, 3);
    Polynomial b = random_polynomial(rng, 2, 3);
    for (const Polynomial& p : {a + b, a - b, a * b, a - a}) {
      for (const auto& [alpha, coeff] : p.terms()) {
        CHECK(coeff != 0);
        CHECK(alpha.dimension() == p.dimension());
      }
    }
    CHECK((a - a).is_zero());
  }
}
