#include "doctest.h"
#include "psatz/json_io.hpp"
#include "test_support.hpp"

using namespace psatz;
using testsupport::dirac;
using testsupport::lebesgue_sequence;

TEST_CASE("polynomial json round trip") {
  Polynomial p = parse_polynomial("2/3 x1 - x2^2 + 5", 2);
  CHECK(polynomial_from_json(to_json(p)) == p);

  // Coefficients beyond 64 bits are emitted as decimal strings.
  Polynomial big(1);
  Rational huge(Integer(1) << 80, Integer(3));
  huge.canonicalize();
  big.add_term(MultiIndex{2}, huge);
  CHECK(polynomial_from_json(to_json(big)) == big);

  CHECK_THROWS_AS(polynomial_from_json("{\"dim\": 1}"), std::invalid_argument);
  CHECK_THROWS_AS(polynomial_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(
      polynomial_from_json("{\"dim\":1,\"terms\":[{\"exp\":[0],\"num\":1,\"den\":0}]}"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      polynomial_from_json("{\"dim\":2,\"terms\":[{\"exp\":[1],\"num\":1,\"den\":1}]}"),
      std::invalid_argument);
}

TEST_CASE("moment sequence json") {
  auto s = lebesgue_sequence(4);
  auto round = moment_sequence_from_json(to_json(s));
  CHECK(round.dimension() == 1);
  CHECK(round.max_degree() == 4);
  CHECK(round.values() == s.values());

  // Values must cover the truncation exactly.
  CHECK_THROWS_AS(
      moment_sequence_from_json(
          "{\"dim\":1,\"max_degree\":2,\"values\":[{\"exp\":[0],\"num\":1,\"den\":1}]}"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      moment_sequence_from_json(
          "{\"dim\":1,\"max_degree\":0,\"values\":[{\"exp\":[0],\"num\":1,\"den\":1},"
          "{\"exp\":[0],\"num\":2,\"den\":1}]}"),
      std::invalid_argument);
}

TEST_CASE("atomic measure json") {
  AtomicMeasure m;
  m.dimension = 2;
  m.atoms.push_back({{Rational(1, 2), Rational(1, 3)}, Rational(2, 5)});
  m.atoms.push_back({{Rational(0), Rational(1)}, Rational(3, 5)});
  auto round = atomic_measure_from_json(to_json(m));
  CHECK(round.dimension == 2);
  REQUIRE(round.atoms.size() == 2);
  CHECK(round.atoms[0].point == m.atoms[0].point);
  CHECK(round.atoms[1].weight == m.atoms[1].weight);

  CHECK_THROWS_AS(atomic_measure_from_json(
                      "{\"dim\":1,\"atoms\":[{\"point\":[\"0\"],\"weight\":\"0\"}]}"),
                  std::invalid_argument);
}

TEST_CASE("cone spec json") {
  auto cone = make_cone(ConeKind::SModule,
                        {parse_polynomial("x1", 2), parse_polynomial("1 - x1", 2)},
                        {parse_polynomial("x2", 2)});
  auto round = cone_spec_from_json(to_json(cone));
  CHECK(round.kind == ConeKind::SModule);
  CHECK(round.generators == cone.generators);
  CHECK(round.multipliers == cone.multipliers);

  auto preordering = cone_spec_from_json(
      "{\"kind\":\"preordering\",\"f\":[{\"dim\":1,\"terms\":[{\"exp\":[1],\"num\":1,"
      "\"den\":1}]}]}");
  CHECK(preordering.kind == ConeKind::Preordering);

  CHECK_THROWS_AS(cone_spec_from_json("{\"kind\":\"mystery\",\"f\":[]}"),
                  std::invalid_argument);
}

TEST_CASE("certificate json round trips and re-verifies") {
  auto handelman = handelman_certify(parse_polynomial("x1^2 - x1 + 1", 1),
                                     {parse_polynomial("x1", 1), parse_polynomial("1 - x1", 1)},
                                     2);
  REQUIRE(handelman.has_value());
  auto reloaded = certificate_from_json(to_json(*handelman));
  CHECK(reloaded.kind == CertificateKind::Handelman);
  CHECK(reloaded.target == handelman->target);
  CHECK(verify(reloaded));

  auto polya = polya_certify(parse_polynomial("x1^2 - x1*x2 + x2^2", 2), 5);
  REQUIRE(polya.has_value());
  auto polya_round = certificate_from_json(to_json(*polya));
  CHECK(polya_round.polya_power == 1);
  CHECK(verify(polya_round));

  auto bernstein = certificate_from_json(to_json(bernstein_identity(5)));
  CHECK(bernstein.bernstein_order == 5);
  CHECK(verify(bernstein));

  // Tampering survives the round trip as a verification failure.
  std::string text = to_json(*handelman);
  auto pos = text.find("\"coeff\":\"1");
  if (pos != std::string::npos) {
    text.replace(pos, 10, "\"coeff\":\"7");
    CHECK_FALSE(verify(certificate_from_json(text)));
  }
}

TEST_CASE("extraction result json") {
  auto s = moments_of(dirac({Rational(1, 2)}), 3);
  auto result = gns_extract(gns_build(s, 1));
  auto doc = to_json(result);
  CHECK(doc.find("\"residual\"") != std::string::npos);
  CHECK(doc.find("\"flat\"") != std::string::npos);
  auto as_measure = atomic_measure_from_json(doc);   // schema mirrors AtomicMeasure
  CHECK(as_measure.atoms.size() == 1);
}
