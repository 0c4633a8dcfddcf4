// psatz: positivity certificates and moment-sequence analysis on compact
// semi-algebraic sets.
//
// Exit codes are the machine contract: 0 = success / accepting verdict,
// 1 = negative verdict (violation, infeasible, inconclusive), 2 = usage or
// input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "psatz/certificates.hpp"
#include "psatz/cones.hpp"
#include "psatz/gns.hpp"
#include "psatz/hankel.hpp"
#include "psatz/json_io.hpp"
#include "psatz/version.hpp"

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << content;
}

// Accepts either a JSON array of polynomials or an object wrapping one
// under "generators"/"f"/"g".
std::vector<psatz::Polynomial> load_polynomial_list(const std::string& path) {
  json doc = json::parse(read_file(path), nullptr, false);
  if (doc.is_discarded()) throw std::invalid_argument("malformed JSON in " + path);
  const json* list = &doc;
  if (doc.is_object()) {
    for (const char* key : {"generators", "f", "g", "polynomials"}) {
      if (doc.contains(key)) {
        list = &doc.at(key);
        break;
      }
    }
  }
  if (!list->is_array()) throw std::invalid_argument("expected a polynomial list in " + path);
  std::vector<psatz::Polynomial> out;
  for (const auto& item : *list) out.push_back(psatz::polynomial_from_json(item.dump()));
  return out;
}

json base_report(const std::string& command) {
  return json{{"command", command},
              {"version", std::string(psatz::kVersion)},
              {"inputs", json::object()}};
}

int emit(json& report, Clock::time_point start, int exit_code) {
  double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  report["timings_ms"] = json{{"total", ms}};
  std::cout << report.dump(2) << "\n";
  return exit_code;
}

json verdict_to_json(const psatz::PsdVerdict& v) {
  json out{{"psd", v.psd}, {"min_eigenvalue", v.min_eigenvalue}};
  if (!v.witness.empty()) out["witness"] = v.witness;
  return out;
}

json certificate_to_value(const psatz::Certificate& cert) {
  return json::parse(psatz::to_json(cert));
}

int run_hankel(const std::string& seq_path, const std::string& generators_path, unsigned level,
               double tol) {
  auto start = Clock::now();
  json report = base_report("hankel");
  report["inputs"] = {{"sequence", seq_path}, {"level", level}, {"tol", tol}};
  auto s = psatz::moment_sequence_from_json(read_file(seq_path));
  std::vector<psatz::Polynomial> generators;
  if (!generators_path.empty()) {
    generators = load_polynomial_list(generators_path);
    report["inputs"]["generators"] = generators_path;
  }
  auto result = psatz::cone_positivity_check(s, generators, level, tol);
  json blocks = json::array();
  for (const auto& block : result.blocks) {
    json entry = verdict_to_json(block.verdict);
    entry["localizer"] = block.localizer.str();
    blocks.push_back(std::move(entry));
  }
  report["blocks"] = std::move(blocks);
  report["verdict"] = result.all_psd ? "all_psd" : "violation";
  return emit(report, start, result.all_psd ? 0 : 1);
}

int run_hausdorff(const std::string& seq_path, std::optional<unsigned> up_to) {
  auto start = Clock::now();
  json report = base_report("hausdorff");
  auto s = psatz::moment_sequence_from_json(read_file(seq_path));
  unsigned budget = up_to.value_or(s.max_degree());
  report["inputs"] = {{"sequence", seq_path}, {"up_to", budget}};
  auto verdict = psatz::hausdorff_check(s, budget);
  report["verdict"] = verdict.accepted ? "accepted" : "rejected";
  if (!verdict.accepted) {
    report["violation"] = {{"m", verdict.violating_m.exponents()},
                           {"n", verdict.violating_n.exponents()},
                           {"value", psatz::to_string(verdict.violating_value)}};
  }
  return emit(report, start, verdict.accepted ? 0 : 1);
}

struct CertifyOptions {
  std::string method;
  std::string target;
  std::string constraints_path;
  std::string multipliers_path;
  std::string out_path;
  std::optional<unsigned> degree;
  unsigned bernstein_k = 2;
  std::optional<unsigned> dim;
};

int run_certify(const CertifyOptions& opt) {
  auto start = Clock::now();
  json report = base_report("certify");
  report["inputs"] = {{"method", opt.method}};

  std::vector<psatz::Polynomial> constraints;
  std::vector<psatz::Polynomial> multipliers;
  std::optional<psatz::Polynomial> target;

  if (opt.method == "farkas" || opt.method == "handelman" || opt.method == "smodule") {
    if (opt.constraints_path.empty()) {
      throw std::invalid_argument("--constraints is required for method " + opt.method);
    }
    constraints = load_polynomial_list(opt.constraints_path);
    if (constraints.empty()) throw std::invalid_argument("constraint list is empty");
    report["inputs"]["constraints"] = opt.constraints_path;
  }
  if (opt.method == "smodule" && !opt.multipliers_path.empty()) {
    multipliers = load_polynomial_list(opt.multipliers_path);
    report["inputs"]["multipliers"] = opt.multipliers_path;
  }
  if (opt.method != "bernstein") {
    if (opt.target.empty()) {
      throw std::invalid_argument("--target is required for method " + opt.method);
    }
    std::size_t dim = opt.dim ? *opt.dim
                              : (constraints.empty() ? 0 : constraints.front().dimension());
    target = dim > 0 ? psatz::parse_polynomial(opt.target, dim)
                     : psatz::parse_polynomial(opt.target);
    report["inputs"]["target"] = target->str();
  }

  std::optional<psatz::Certificate> certificate;
  std::string failure;
  if (opt.method == "farkas") {
    certificate = psatz::farkas_certify(*target, constraints);
    failure = "infeasible";
  } else if (opt.method == "handelman") {
    unsigned degree = opt.degree.value_or(2 * std::max(target->total_degree(), 1));
    report["inputs"]["degree"] = degree;
    certificate = psatz::handelman_certify(*target, constraints, degree);
    failure = "not_found_at_degree";
  } else if (opt.method == "smodule") {
    unsigned degree = opt.degree.value_or(2 * std::max(target->total_degree(), 1));
    report["inputs"]["degree"] = degree;
    certificate = psatz::smodule_certify(*target, constraints, multipliers, degree);
    failure = "not_found_at_degree";
  } else if (opt.method == "polya") {
    unsigned max_power = opt.degree.value_or(30);
    report["inputs"]["max_power"] = max_power;
    certificate = psatz::polya_certify(*target, max_power);
    failure = "not_found_up_to";
  } else if (opt.method == "bernstein") {
    report["inputs"]["k"] = opt.bernstein_k;
    certificate = psatz::bernstein_identity(opt.bernstein_k);
    failure = "unreachable";
  } else {
    throw std::invalid_argument("unknown method: " + opt.method);
  }

  if (!certificate) {
    report["verdict"] = failure;
    return emit(report, start, 1);
  }
  if (!psatz::verify(*certificate)) {
    throw std::logic_error("internal error: constructed certificate failed verification");
  }
  report["verdict"] = "certified";
  report["certificate_verified"] = true;
  report["terms"] = certificate->terms.size();
  if (certificate->kind == psatz::CertificateKind::Polya) {
    report["polya_n"] = certificate->polya_power;
  }
  std::string cert_text = psatz::to_json(*certificate);
  if (!opt.out_path.empty()) {
    write_file(opt.out_path, cert_text);
    report["certificate_file"] = opt.out_path;
  } else {
    report["certificate"] = json::parse(cert_text);
  }
  return emit(report, start, 0);
}

int run_extract(const std::string& seq_path, unsigned level, std::uint64_t seed, double tol,
                double rank_tol, const std::string& out_path) {
  auto start = Clock::now();
  json report = base_report("extract");
  report["inputs"] = {{"sequence", seq_path}, {"level", level}, {"seed", seed},
                      {"tol", tol},          {"rank_tol", rank_tol}};
  auto s = psatz::moment_sequence_from_json(read_file(seq_path));
  psatz::GnsModel model;
  try {
    model = psatz::gns_build(s, level, rank_tol);
  } catch (const psatz::GramNotPsdError& e) {
    report["verdict"] = "not_positive";
    report["eigenvalue"] = e.eigenvalue();
    report["witness"] = e.witness();
    return emit(report, start, 1);
  }
  report["rank"] = model.rank;
  report["flat"] = model.flat;
  psatz::ExtractionResult result;
  try {
    result = psatz::gns_extract(model, tol, seed);
  } catch (const std::runtime_error& e) {
    report["verdict"] = "extraction_failed";
    report["error"] = e.what();
    report["commutation_defect"] = psatz::check_commutation(model, tol).max_defect;
    return emit(report, start, 1);
  }
  report["verdict"] = "extracted";
  report["atoms"] = result.measure.atoms.size();
  report["residual"] = result.residual;
  report["commutation_defect"] = result.commutation_defect;
  if (!result.flat) report["warning"] = "model is not flat; extraction is best-effort";
  std::string measure_text = psatz::to_json(result);
  if (!out_path.empty()) {
    write_file(out_path, measure_text);
    report["measure_file"] = out_path;
  } else {
    report["measure"] = json::parse(measure_text);
  }
  return emit(report, start, 0);
}

int run_archimedean(const std::string& cone_path, unsigned degree) {
  auto start = Clock::now();
  json report = base_report("archimedean");
  report["inputs"] = {{"cone", cone_path}, {"degree", degree}};
  auto cone = psatz::cone_spec_from_json(read_file(cone_path));
  report["inputs"]["kind"] = psatz::kind_name(cone.kind);
  auto result = psatz::archimedean_witness_search(cone, degree);
  json variables = json::array();
  for (std::size_t k = 0; k < result.per_variable.size(); ++k) {
    json entry{{"variable", k + 1}};
    const auto& witness = result.per_variable[k];
    if (witness) {
      entry["status"] = "witness";
      entry["lambda"] = psatz::to_string(witness->lambda);
      json certs = json::array();
      for (const auto& cert : witness->certificates) {
        certs.push_back(certificate_to_value(cert));
      }
      entry["certificates"] = std::move(certs);
    } else {
      entry["status"] = "inconclusive";
    }
    variables.push_back(std::move(entry));
  }
  report["variables"] = std::move(variables);
  report["verdict"] = result.all_witnessed ? "witnessed" : "inconclusive";
  return emit(report, start, result.all_witnessed ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Positivity certificates and moment-sequence analysis on compact "
               "semi-algebraic sets"};
  app.require_subcommand(1);
  int exit_code = 0;

  auto guarded = [&exit_code](auto&& body) {
    try {
      exit_code = body();
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      exit_code = 2;
    }
  };

  // hankel
  auto* hankel = app.add_subcommand(
      "hankel", "Check localized Hankel matrices H(s), H(g_j s) for positive semidefiniteness");
  auto hankel_seq = std::make_shared<std::string>();
  auto hankel_gens = std::make_shared<std::string>();
  auto hankel_level = std::make_shared<unsigned>(0);
  auto hankel_tol = std::make_shared<double>(1e-9);
  hankel->add_option("sequence", *hankel_seq, "Moment sequence JSON file")->required();
  hankel->add_option("--generators", *hankel_gens, "JSON file with localizer polynomials");
  hankel->add_option("--level", *hankel_level, "Hankel block level n")->required();
  hankel->add_option("--tol", *hankel_tol, "Relative PSD tolerance");
  hankel->callback([=, &exit_code, &guarded] {
    guarded([&] { return run_hankel(*hankel_seq, *hankel_gens, *hankel_level, *hankel_tol); });
  });

  // hausdorff
  auto* hausdorff = app.add_subcommand(
      "hausdorff", "Alternating-difference criterion for moment sequences on [0,1]^d");
  auto hausdorff_seq = std::make_shared<std::string>();
  auto hausdorff_up_to = std::make_shared<int>(-1);
  hausdorff->add_option("sequence", *hausdorff_seq, "Moment sequence JSON file")->required();
  hausdorff->add_option("--up-to", *hausdorff_up_to, "Total |m|+|n| budget (default max_degree)");
  hausdorff->callback([=, &exit_code, &guarded] {
    guarded([&] {
      std::optional<unsigned> budget;
      if (*hausdorff_up_to >= 0) budget = static_cast<unsigned>(*hausdorff_up_to);
      return run_hausdorff(*hausdorff_seq, budget);
    });
  });

  // certify
  auto* certify = app.add_subcommand("certify", "Construct a positivity certificate");
  auto certify_opt = std::make_shared<CertifyOptions>();
  auto certify_degree = std::make_shared<int>(-1);
  auto certify_dim = std::make_shared<int>(-1);
  certify->add_option("--method", certify_opt->method, "farkas|handelman|smodule|polya|bernstein")
      ->required()
      ->check(CLI::IsMember({"farkas", "handelman", "smodule", "polya", "bernstein"}));
  certify->add_option("--target", certify_opt->target, "Target polynomial (text grammar)");
  certify->add_option("--constraints", certify_opt->constraints_path,
                      "JSON file with constraint polynomials");
  certify->add_option("--multipliers", certify_opt->multipliers_path,
                      "JSON file with smodule multipliers");
  certify->add_option("--degree", *certify_degree,
                      "Degree bound (default 2*deg target; polya: max power, default 30)");
  certify->add_option("--k", certify_opt->bernstein_k, "Bernstein identity order (k >= 2)");
  certify->add_option("--dim", *certify_dim, "Ambient dimension of the target");
  certify->add_option("--out", certify_opt->out_path, "Write the certificate JSON here");
  certify->callback([=, &exit_code, &guarded] {
    guarded([&] {
      if (*certify_degree >= 0) certify_opt->degree = static_cast<unsigned>(*certify_degree);
      if (*certify_dim > 0) certify_opt->dim = static_cast<unsigned>(*certify_dim);
      return run_certify(*certify_opt);
    });
  });

  // extract
  auto* extract = app.add_subcommand(
      "extract", "Extract an atomic representing measure via the truncated GNS construction");
  auto extract_seq = std::make_shared<std::string>();
  auto extract_level = std::make_shared<unsigned>(0);
  auto extract_seed = std::make_shared<std::uint64_t>(psatz::kDefaultExtractionSeed);
  auto extract_tol = std::make_shared<double>(1e-8);
  auto extract_rank_tol = std::make_shared<double>(1e-10);
  auto extract_out = std::make_shared<std::string>();
  extract->add_option("sequence", *extract_seq, "Moment sequence JSON file")->required();
  extract->add_option("--level", *extract_level, "GNS truncation level n")->required();
  extract->add_option("--seed", *extract_seed, "Seed for the random matrix combination");
  extract->add_option("--tol", *extract_tol, "Commutation and weight tolerance");
  extract->add_option("--rank-tol", *extract_rank_tol, "Relative numerical-rank threshold");
  extract->add_option("--out", *extract_out, "Write the measure JSON here");
  extract->callback([=, &exit_code, &guarded] {
    guarded([&] {
      return run_extract(*extract_seq, *extract_level, *extract_seed, *extract_tol,
                         *extract_rank_tol, *extract_out);
    });
  });

  // archimedean
  auto* archimedean = app.add_subcommand(
      "archimedean", "Search for bounded-variable witnesses lambda +- x_k or lambda - x_k^2");
  auto arch_cone = std::make_shared<std::string>();
  auto arch_degree = std::make_shared<unsigned>(2);
  archimedean->add_option("cone", *arch_cone, "Cone spec JSON file")->required();
  archimedean->add_option("--degree", *arch_degree, "Degree bound for the witness search")
      ->required();
  archimedean->callback([=, &exit_code, &guarded] {
    guarded([&] { return run_archimedean(*arch_cone, *arch_degree); });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  return exit_code;
}
