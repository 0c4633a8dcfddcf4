#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "psatz/certificates.hpp"
#include "psatz/json_io.hpp"
#include "test_support.hpp"

using json = nlohmann::json;
using namespace psatz;
using testsupport::lebesgue_sequence;

namespace {

struct CliResult {
  int exit_code;
  std::string stdout_text;
};

std::string scratch_path(const std::string& name) {
  return "/tmp/psatz_cli_test_" + name;
}

void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  REQUIRE(out.good());
  out << content;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

CliResult run_cli(const std::string& args) {
  std::string out_file = scratch_path("stdout.json");
  std::string command = std::string(PSATZ_CLI_PATH) + " " + args + " > " + out_file + " 2>/dev/null";
  int status = std::system(command.c_str());
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, read_text(out_file)};
}

std::string two_point_sequence_file() {
  AtomicMeasure m;
  m.dimension = 1;
  m.atoms.push_back({{Rational(0)}, Rational(1, 2)});
  m.atoms.push_back({{Rational(1)}, Rational(1, 2)});
  std::string path = scratch_path("two_point.json");
  write_text(path, to_json(moments_of(m, 5)));
  return path;
}

}  // namespace

TEST_CASE("cli hankel") {
  std::string seq = scratch_path("lebesgue.json");
  write_text(seq, to_json(lebesgue_sequence(6)));
  std::string gens = scratch_path("interval_gens.json");
  write_text(gens, "[" + to_json(parse_polynomial("x1", 1)) + "," +
                       to_json(parse_polynomial("1 - x1", 1)) + "]");

  auto good = run_cli("hankel " + seq + " --generators " + gens + " --level 2");
  CHECK(good.exit_code == 0);
  json report = json::parse(good.stdout_text);
  CHECK(report["verdict"] == "all_psd");
  CHECK(report["blocks"].size() == 3);
  CHECK(report["command"] == "hankel");

  MomentSequence bad(1, 2);
  bad.set_value(MultiIndex{0}, Rational(1));
  bad.set_value(MultiIndex{2}, Rational(-1));
  std::string bad_path = scratch_path("indefinite.json");
  write_text(bad_path, to_json(bad));
  auto violation = run_cli("hankel " + bad_path + " --level 1");
  CHECK(violation.exit_code == 1);
  json bad_report = json::parse(violation.stdout_text);
  CHECK(bad_report["verdict"] == "violation");
  CHECK(bad_report["blocks"][0].contains("witness"));

  std::string broken = scratch_path("broken.json");
  write_text(broken, "{not json");
  CHECK(run_cli("hankel " + broken + " --level 1").exit_code == 2);
  CHECK(run_cli("hankel " + seq + " --level 9").exit_code == 2);
}

TEST_CASE("cli hausdorff") {
  MomentSequence geometric(1, 6);
  Rational v(1);
  for (unsigned n = 0; n <= 6; ++n, v /= 2) geometric.set_value(MultiIndex{n}, v);
  std::string geo = scratch_path("geometric.json");
  write_text(geo, to_json(geometric));
  CHECK(run_cli("hausdorff " + geo).exit_code == 0);

  MomentSequence doubling(1, 4);
  v = 1;
  for (unsigned n = 0; n <= 4; ++n, v *= 2) doubling.set_value(MultiIndex{n}, v);
  std::string dbl = scratch_path("doubling.json");
  write_text(dbl, to_json(doubling));
  auto rejected = run_cli("hausdorff " + dbl + " --up-to 4");
  CHECK(rejected.exit_code == 1);
  json report = json::parse(rejected.stdout_text);
  CHECK(report["verdict"] == "rejected");
  CHECK(report["violation"]["m"] == json::array({0}));
  CHECK(report["violation"]["n"] == json::array({1}));

  // Product measure of two geometric marginals lives in [0,1]^2.
  AtomicMeasure product;
  product.dimension = 2;
  product.atoms.push_back({{Rational(1, 2), Rational(1, 2)}, Rational(1)});
  std::string prod = scratch_path("product.json");
  write_text(prod, to_json(moments_of(product, 6)));
  CHECK(run_cli("hausdorff " + prod).exit_code == 0);
}

TEST_CASE("cli certify") {
  std::string interval = scratch_path("interval.json");
  write_text(interval, "[" + to_json(parse_polynomial("x1", 1)) + "," +
                           to_json(parse_polynomial("1 - x1", 1)) + "]");

  std::string cert_path = scratch_path("handelman_cert.json");
  auto handelman = run_cli("certify --method handelman --target \"x1^2 - x1 + 1\" --constraints " +
                           interval + " --degree 2 --out " + cert_path);
  CHECK(handelman.exit_code == 0);
  json report = json::parse(handelman.stdout_text);
  CHECK(report["verdict"] == "certified");
  auto reloaded = certificate_from_json(read_text(cert_path));
  CHECK(verify(reloaded));
  CHECK(reloaded.target == parse_polynomial("x1^2 - x1 + 1", 1));

  auto polya = run_cli("certify --method polya --target \"x1^2 - x1*x2 + x2^2\" --dim 2");
  CHECK(polya.exit_code == 0);
  json polya_report = json::parse(polya.stdout_text);
  CHECK(polya_report["polya_n"] == 1);
  auto embedded = certificate_from_json(polya_report["certificate"].dump());
  CHECK(verify(embedded));

  std::string halfline = scratch_path("halfline.json");
  write_text(halfline, "[" + to_json(parse_polynomial("x1", 1)) + "]");
  auto infeasible = run_cli("certify --method farkas --target \"0 - 1\" --constraints " + halfline);
  CHECK(infeasible.exit_code == 1);
  CHECK(json::parse(infeasible.stdout_text)["verdict"] == "infeasible");

  auto bernstein = run_cli("certify --method bernstein --k 4");
  CHECK(bernstein.exit_code == 0);

  CHECK(run_cli("certify --method polya --target \"x1^2 - x1 + 1\" --dim 1").exit_code == 2);
  CHECK(run_cli("certify --method nonsense --target \"x1\"").exit_code == 2);
  CHECK(run_cli("certify --method handelman --target \"x1^2 +\" --constraints " + interval)
            .exit_code == 2);
}

TEST_CASE("cli extract") {
  std::string seq = two_point_sequence_file();
  std::string out = scratch_path("measure.json");
  auto result = run_cli("extract " + seq + " --level 2 --out " + out);
  CHECK(result.exit_code == 0);
  json report = json::parse(result.stdout_text);
  CHECK(report["verdict"] == "extracted");
  CHECK(report["atoms"] == 2);
  json measure = json::parse(read_text(out));
  CHECK(measure["atoms"].size() == 2);
  CHECK(measure["flat"] == true);
  CHECK(measure["residual"].get<double>() <= 1e-9);

  // Rank one: a single atom.
  std::string point = scratch_path("point.json");
  write_text(point, to_json(moments_of(testsupport::dirac({Rational(1, 3)}), 4)));
  auto single = run_cli("extract " + point + " --level 1");
  CHECK(single.exit_code == 0);
  CHECK(json::parse(single.stdout_text)["atoms"] == 1);

  MomentSequence indefinite(1, 3);
  indefinite.set_value(MultiIndex{0}, Rational(1));
  indefinite.set_value(MultiIndex{2}, Rational(-1));
  std::string bad = scratch_path("negative.json");
  write_text(bad, to_json(indefinite));
  auto rejected = run_cli("extract " + bad + " --level 1");
  CHECK(rejected.exit_code == 1);
  json bad_report = json::parse(rejected.stdout_text);
  CHECK(bad_report["verdict"] == "not_positive");
  CHECK(bad_report.contains("witness"));
}

TEST_CASE("cli archimedean") {
  ConeSpec simplex = make_cone(
      ConeKind::Semiring, {parse_polynomial("x1", 2), parse_polynomial("x2", 2),
                           parse_polynomial("1 - x1 - x2", 2)});
  std::string simplex_path = scratch_path("simplex_cone.json");
  write_text(simplex_path, to_json(simplex));
  auto witnessed = run_cli("archimedean " + simplex_path + " --degree 1");
  CHECK(witnessed.exit_code == 0);
  json report = json::parse(witnessed.stdout_text);
  CHECK(report["verdict"] == "witnessed");
  CHECK(report["variables"].size() == 2);
  for (const auto& entry : report["variables"]) {
    CHECK(entry["status"] == "witness");
    for (const auto& cert : entry["certificates"]) {
      CHECK(verify(certificate_from_json(cert.dump())));
    }
  }

  ConeSpec stuck = make_cone(
      ConeKind::QuadraticModule, {parse_polynomial("2 x1 - 1", 2), parse_polynomial("2 x2 - 1", 2),
                                  parse_polynomial("1 - x1*x2", 2)});
  std::string stuck_path = scratch_path("stuck_cone.json");
  write_text(stuck_path, to_json(stuck));
  auto inconclusive = run_cli("archimedean " + stuck_path + " --degree 4");
  CHECK(inconclusive.exit_code == 1);
  CHECK(json::parse(inconclusive.stdout_text)["verdict"] == "inconclusive");

  ConeSpec ball = make_cone(ConeKind::QuadraticModule, {parse_polynomial("1 - x1^2 - x2^2", 2)});
  std::string ball_path = scratch_path("ball_cone.json");
  write_text(ball_path, to_json(ball));
  CHECK(run_cli("archimedean " + ball_path + " --degree 2").exit_code == 0);
}

TEST_CASE("cli usage errors exit with code two") {
  CHECK(run_cli("unknown-subcommand").exit_code == 2);
  CHECK(run_cli("hankel").exit_code == 2);
  CHECK(run_cli("extract missing-file.json --level 1").exit_code == 2);
}
