#include <set>

#include "doctest.h"
#include "psatz/cones.hpp"
#include "test_support.hpp"

using namespace psatz;

namespace {

std::vector<std::vector<Rational>> unit_grid_1d() {
  std::vector<std::vector<Rational>> grid;
  for (int k = 0; k <= 4; ++k) grid.push_back({Rational(k, 4)});
  return grid;
}

std::vector<std::vector<Rational>> grid_2d(int steps, const Rational& lo, const Rational& hi) {
  std::vector<std::vector<Rational>> grid;
  Rational span = hi - lo;
  for (int i = 0; i <= steps; ++i) {
    for (int j = 0; j <= steps; ++j) {
      grid.push_back({lo + span * Rational(i, steps), lo + span * Rational(j, steps)});
    }
  }
  return grid;
}

std::set<std::string> element_strings(const ConeElementBasis& basis) {
  std::set<std::string> out;
  for (const auto& element : basis.elements) out.insert(element.value.str());
  return out;
}

}  // namespace

TEST_CASE("make_cone validation") {
  CHECK_THROWS_AS(make_cone(ConeKind::Semiring, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_cone(ConeKind::Preordering, {parse_polynomial("x1", 1)},
                            {parse_polynomial("x1", 1)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      make_cone(ConeKind::Semiring, {parse_polynomial("x1", 1), parse_polynomial("x2", 2)}),
      std::invalid_argument);

  auto smodule = make_cone(ConeKind::SModule, {parse_polynomial("x1", 2)},
                           {parse_polynomial("x2", 2)});
  REQUIRE(smodule.multipliers.size() == 2);
  CHECK(smodule.multipliers[0] == Polynomial::constant(2, Rational(1)));

  auto already = make_cone(ConeKind::SModule, {parse_polynomial("x1", 2)},
                           {parse_polynomial("1", 2), parse_polynomial("x2", 2)});
  CHECK(already.multipliers.size() == 2);
}

TEST_CASE("enumerate_basis shapes") {
  Polynomial f1 = parse_polynomial("x1", 2);
  Polynomial f2 = parse_polynomial("1 - x1 - x2", 2);

  auto preordering = enumerate_basis(make_cone(ConeKind::Preordering, {f1, f2}), 10);
  CHECK(element_strings(preordering) ==
        std::set<std::string>{"1", "x1", "1 - x1 - x2", to_string(f1 * f2)});

  auto semiring = enumerate_basis(make_cone(ConeKind::Semiring, {parse_polynomial("x1", 1)}), 3);
  CHECK(element_strings(semiring) == std::set<std::string>{"1", "x1", "x1^2", "x1^3"});

  auto smodule = enumerate_basis(
      make_cone(ConeKind::SModule, {parse_polynomial("x1", 2)}, {parse_polynomial("x2", 2)}), 2);
  CHECK(element_strings(smodule) == std::set<std::string>{"1", "x1", "x1^2", "x2", "x1*x2"});

  auto quadratic = enumerate_basis(make_cone(ConeKind::QuadraticModule, {f1, f2}), 4);
  CHECK(quadratic.elements.size() == 3);

  // Factor descriptions recompute to the stored values.
  auto smod_cone = make_cone(ConeKind::SModule, {parse_polynomial("x1", 2)},
                             {parse_polynomial("x2", 2)});
  for (const auto& element : smodule.elements) {
    Polynomial recomputed = smod_cone.multipliers[element.multiplier_index];
    for (std::size_t i = 0; i < element.exponents.size(); ++i) {
      recomputed = recomputed * smod_cone.generators[i].pow(element.exponents[i]);
    }
    CHECK(recomputed == element.value);
  }
}

TEST_CASE("enumerate_basis honors the element cap") {
  std::vector<Polynomial> many;
  for (int i = 0; i < 3; ++i) many.push_back(parse_polynomial("x1 + " + std::to_string(i), 1));
  CHECK_THROWS_AS(enumerate_basis(make_cone(ConeKind::Semiring, many), 30, 10),
                  std::length_error);
}

TEST_CASE("basis elements are nonnegative on K(f)") {
  Polynomial x = parse_polynomial("x1", 1);
  Polynomial one_minus_x = parse_polynomial("1 - x1", 1);
  for (ConeKind kind : {ConeKind::Preordering, ConeKind::Semiring, ConeKind::QuadraticModule}) {
    auto basis = enumerate_basis(make_cone(kind, {x, one_minus_x}), 4);
    for (const auto& element : basis.elements) {
      for (const auto& point : unit_grid_1d()) {
        CHECK(element.value.eval(point) >= 0);
      }
    }
  }
}

TEST_CASE("archimedean witness: interval quadratic module") {
  // Q(1 - x^2) in one variable: the generator itself bounds x.
  auto ball1 = make_cone(ConeKind::QuadraticModule, {parse_polynomial("1 - x1^2", 1)});
  auto report = archimedean_witness_search(ball1, 2);
  REQUIRE(report.per_variable.size() == 1);
  REQUIRE(report.per_variable[0].has_value());
  const auto& witness = *report.per_variable[0];
  CHECK(witness.lambda == 1);
  REQUIRE(witness.certificates.size() == 1);
  CHECK(witness.certificates[0].target == parse_polynomial("1 - x1^2", 1));
  CHECK(verify(witness.certificates[0]));
  CHECK(report.all_witnessed);
}

TEST_CASE("archimedean witness: d-interval generators at degree one") {
  std::vector<Polynomial> box = {parse_polynomial("x1", 2), parse_polynomial("1 - x1", 2),
                                 parse_polynomial("x2", 2), parse_polynomial("1 - x2", 2)};
  auto report = archimedean_witness_search(make_cone(ConeKind::QuadraticModule, box), 1);
  CHECK(report.all_witnessed);
  for (const auto& witness : report.per_variable) {
    REQUIRE(witness.has_value());
    CHECK(witness->certificates.size() == 2);
    for (const auto& cert : witness->certificates) CHECK(verify(cert));
    // lambda - x_k and lambda + x_k are nonnegative on the box.
    for (const auto& point : grid_2d(4, Rational(0), Rational(1))) {
      for (const auto& cert : witness->certificates) CHECK(cert.target.eval(point) >= 0);
    }
  }
}

TEST_CASE("archimedean witness: simplex semiring") {
  std::vector<Polynomial> simplex = {parse_polynomial("x1", 2), parse_polynomial("x2", 2),
                                     parse_polynomial("1 - x1 - x2", 2)};
  auto report = archimedean_witness_search(make_cone(ConeKind::Semiring, simplex), 1);
  CHECK(report.all_witnessed);
  for (const auto& witness : report.per_variable) {
    REQUIRE(witness.has_value());
    CHECK(witness->lambda > 0);
    for (const auto& cert : witness->certificates) CHECK(verify(cert));
  }
}

TEST_CASE("archimedean witness: ball quadratic module needs the square shape") {
  auto ball = make_cone(ConeKind::QuadraticModule, {parse_polynomial("1 - x1^2 - x2^2", 2)});
  auto report = archimedean_witness_search(ball, 2);
  CHECK(report.all_witnessed);
  for (const auto& witness : report.per_variable) {
    REQUIRE(witness.has_value());
    REQUIRE(witness->certificates.size() == 1);
    CHECK(verify(witness->certificates[0]));
    for (const auto& point : grid_2d(4, Rational(-1), Rational(1))) {
      Polynomial constraint = parse_polynomial("1 - x1^2 - x2^2", 2);
      if (constraint.eval(point) < 0) continue;
      CHECK(witness->certificates[0].target.eval(point) >= 0);
    }
  }
}

TEST_CASE("archimedean witness: ball semiring with shifted squares") {
  // Generators 1 - x1^2 - x2^2 and (1 +- x_j)^2 bound each variable through
  // the linear identity 3 - 2 x_k = (1 - x1^2 - x2^2) + (1 - x_k)^2
  //                                 + 1/2 [(1 + x_i)^2 + (1 - x_i)^2], i != k.
  Polynomial f = parse_polynomial("1 - x1^2 - x2^2", 2);
  Polynomial gp1 = parse_polynomial("1 + x1", 2).pow(2);
  Polynomial gm1 = parse_polynomial("1 - x1", 2).pow(2);
  Polynomial gp2 = parse_polynomial("1 + x2", 2).pow(2);
  Polynomial gm2 = parse_polynomial("1 - x2", 2).pow(2);

  Polynomial lhs = parse_polynomial("3 - 2 x1", 2);
  CHECK(lhs == f + gm1 + Rational(1, 2) * (gp2 + gm2));

  auto cone = make_cone(ConeKind::Semiring, {f, gp1, gm1, gp2, gm2});
  auto report = archimedean_witness_search(cone, 2);
  CHECK(report.all_witnessed);
  for (const auto& witness : report.per_variable) {
    REQUIRE(witness.has_value());
    for (const auto& cert : witness->certificates) CHECK(verify(cert));
  }
}

TEST_CASE("archimedean search stays inconclusive on the non-archimedean module") {
  std::vector<Polynomial> gens = {parse_polynomial("2 x1 - 1", 2), parse_polynomial("2 x2 - 1", 2),
                                  parse_polynomial("1 - x1*x2", 2)};
  auto cone = make_cone(ConeKind::QuadraticModule, gens);
  for (unsigned degree : {1u, 2u, 3u, 4u, 5u, 6u}) {
    auto report = archimedean_witness_search(cone, degree);
    CHECK_FALSE(report.all_witnessed);
    for (const auto& witness : report.per_variable) CHECK_FALSE(witness.has_value());
  }
}

TEST_CASE("bounded element identities") {
  auto identity = bounded_element_identities(Rational(1), parse_polynomial("x1", 1));
  CHECK(identity.verified);
  CHECK(identity.sum == identity.sum_expansion);
  CHECK(identity.difference == identity.difference_expansion);
  CHECK(identity.square_difference == identity.square_difference_expansion);

  auto quartic = bounded_element_identities(Rational(2), parse_polynomial("x1^2 - 1", 1));
  CHECK(quartic.verified);

  CHECK_THROWS_AS(bounded_element_identities(Rational(0), parse_polynomial("x1", 1)),
                  std::invalid_argument);
}

TEST_CASE("membership by evaluation") {
  auto cone = make_cone(ConeKind::Preordering,
                        {parse_polynomial("x1", 1), parse_polynomial("1 - x1", 1)});
  auto refuted = membership_by_evaluation(cone, parse_polynomial("0 - 1", 1), unit_grid_1d());
  CHECK(refuted.refuted);
  CHECK(refuted.value_at_point == -1);

  auto passes = membership_by_evaluation(cone, parse_polynomial("x1", 1), unit_grid_1d());
  CHECK_FALSE(passes.refuted);
  CHECK(passes.feasible_samples == 5);

  // Sample points outside K are ignored.
  auto wide = membership_by_evaluation(cone, parse_polynomial("0 - 1", 1),
                                       {{Rational(2)}, {Rational(-1)}});
  CHECK_FALSE(wide.refuted);
  CHECK(wide.feasible_samples == 0);

  // SModule feasibility includes the multipliers.
  auto smod = make_cone(ConeKind::SModule,
                        {parse_polynomial("x1", 2), parse_polynomial("1 - x1", 2)},
                        {parse_polynomial("x2", 2)});
  auto shifted = membership_by_evaluation(smod, parse_polynomial("0 - x2", 2),
                                          {{Rational(1, 2), Rational(-1)},
                                           {Rational(1, 2), Rational(1)}});
  CHECK(shifted.refuted);
  CHECK(shifted.refuting_point == std::vector<Rational>{Rational(1, 2), Rational(1)});
}
