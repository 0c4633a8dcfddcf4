#include "psatz/json_io.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

namespace psatz {

using nlohmann::json;

namespace {

json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a decimal string");
}

json rational_fields(const Rational& q) {
  json out;
  out["num"] = integer_to_json(q.get_num());
  out["den"] = integer_to_json(q.get_den());
  return out;
}

Rational rational_from_fields(const json& j) {
  Integer num = integer_from_json(j.at("num"));
  Integer den = integer_from_json(j.at("den"));
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

MultiIndex exp_from_json(const json& j, std::size_t dim) {
  if (!j.is_array() || j.size() != dim) {
    throw std::invalid_argument("exponent list must have length dim");
  }
  MultiIndex alpha(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    long long e = j[i].get<long long>();
    if (e < 0) throw std::invalid_argument("exponents must be nonnegative");
    alpha[i] = static_cast<unsigned>(e);
  }
  return alpha;
}

json polynomial_to_value(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [alpha, c] : p.terms()) {
    json term = rational_fields(c);
    term["exp"] = alpha.exponents();
    terms.push_back(std::move(term));
  }
  return json{{"dim", p.dimension()}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_value(const json& j) {
  std::size_t dim = j.at("dim").get<std::size_t>();
  Polynomial p(dim);
  for (const auto& term : j.at("terms")) {
    p.add_term(exp_from_json(term.at("exp"), dim), rational_from_fields(term));
  }
  return p;
}

std::vector<Polynomial> polynomial_list_from_value(const json& j) {
  std::vector<Polynomial> out;
  for (const auto& item : j) out.push_back(polynomial_from_value(item));
  return out;
}

json polynomial_list_to_value(const std::vector<Polynomial>& list) {
  json out = json::array();
  for (const auto& p : list) out.push_back(polynomial_to_value(p));
  return out;
}

json measure_to_value(const AtomicMeasure& m) {
  json atoms = json::array();
  for (const auto& atom : m.atoms) {
    json point = json::array();
    for (const auto& coord : atom.point) point.push_back(to_string(coord));
    atoms.push_back(json{{"point", std::move(point)}, {"weight", to_string(atom.weight)}});
  }
  return json{{"dim", m.dimension}, {"atoms", std::move(atoms)}};
}

AtomicMeasure measure_from_value(const json& j) {
  AtomicMeasure m;
  m.dimension = j.at("dim").get<std::size_t>();
  for (const auto& item : j.at("atoms")) {
    AtomicMeasure::Atom atom;
    for (const auto& coord : item.at("point")) {
      atom.point.push_back(rational_from_string(coord.get<std::string>()));
    }
    atom.weight = rational_from_string(item.at("weight").get<std::string>());
    m.atoms.push_back(std::move(atom));
  }
  m.validate();
  return m;
}

json parse_document(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("malformed JSON");
  return j;
}

template <typename F>
auto wrap_errors(const F& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON document: ") + e.what());
  }
}

}  // namespace

std::string to_json(const Polynomial& p) { return polynomial_to_value(p).dump(); }

Polynomial polynomial_from_json(const std::string& text) {
  return wrap_errors([&] { return polynomial_from_value(parse_document(text)); });
}

std::string to_json(const MomentSequence& s) {
  json values = json::array();
  for (const auto& [alpha, v] : s.values()) {
    json item = rational_fields(v);
    item["exp"] = alpha.exponents();
    values.push_back(std::move(item));
  }
  json out{{"dim", s.dimension()}, {"max_degree", s.max_degree()}, {"values", std::move(values)}};
  return out.dump();
}

MomentSequence moment_sequence_from_json(const std::string& text) {
  return wrap_errors([&] {
    json j = parse_document(text);
    std::size_t dim = j.at("dim").get<std::size_t>();
    unsigned max_degree = j.at("max_degree").get<unsigned>();
    MomentSequence::ValueMap values;
    for (const auto& item : j.at("values")) {
      MultiIndex alpha = exp_from_json(item.at("exp"), dim);
      if (!values.emplace(alpha, rational_from_fields(item)).second) {
        throw std::invalid_argument("duplicate moment index");
      }
    }
    return MomentSequence::from_values(dim, max_degree, std::move(values));
  });
}

std::string to_json(const AtomicMeasure& m) { return measure_to_value(m).dump(); }

AtomicMeasure atomic_measure_from_json(const std::string& text) {
  return wrap_errors([&] { return measure_from_value(parse_document(text)); });
}

std::string_view kind_name(ConeKind kind) {
  switch (kind) {
    case ConeKind::QuadraticModule: return "quadratic_module";
    case ConeKind::Preordering: return "preordering";
    case ConeKind::Semiring: return "semiring";
    case ConeKind::SModule: return "smodule";
  }
  return "unknown";
}

std::string_view kind_name(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::Farkas: return "farkas";
    case CertificateKind::Handelman: return "handelman";
    case CertificateKind::SModule: return "smodule";
    case CertificateKind::Polya: return "polya";
    case CertificateKind::Bernstein: return "bernstein";
  }
  return "unknown";
}

std::string to_json(const ConeSpec& c) {
  json out{{"kind", kind_name(c.kind)},
           {"f", polynomial_list_to_value(c.generators)},
           {"g", polynomial_list_to_value(c.multipliers)}};
  return out.dump();
}

ConeSpec cone_spec_from_json(const std::string& text) {
  return wrap_errors([&] {
    json j = parse_document(text);
    std::string kind_text = j.at("kind").get<std::string>();
    ConeKind kind;
    if (kind_text == "quadratic_module") {
      kind = ConeKind::QuadraticModule;
    } else if (kind_text == "preordering") {
      kind = ConeKind::Preordering;
    } else if (kind_text == "semiring") {
      kind = ConeKind::Semiring;
    } else if (kind_text == "smodule") {
      kind = ConeKind::SModule;
    } else {
      throw std::invalid_argument("unknown cone kind: " + kind_text);
    }
    std::vector<Polynomial> generators = polynomial_list_from_value(j.at("f"));
    std::vector<Polynomial> multipliers;
    if (j.contains("g")) multipliers = polynomial_list_from_value(j.at("g"));
    if (kind != ConeKind::SModule) {
      if (!multipliers.empty()) {
        throw std::invalid_argument("multipliers apply only to smodule cones");
      }
      return make_cone(kind, std::move(generators));
    }
    return make_cone(kind, std::move(generators), std::move(multipliers));
  });
}

std::string to_json(const Certificate& c) {
  json terms = json::array();
  for (const auto& term : c.terms) {
    terms.push_back(json{{"coeff", to_string(term.coefficient)},
                         {"exponents", term.exponents},
                         {"multiplier_index", term.multiplier_index}});
  }
  json extra = json::object();
  if (c.kind == CertificateKind::Polya) extra["polya_n"] = c.polya_power;
  if (c.kind == CertificateKind::Bernstein) extra["bernstein_k"] = c.bernstein_order;
  json out{{"variant", kind_name(c.kind)},
           {"target", polynomial_to_value(c.target)},
           {"generators", polynomial_list_to_value(c.generators)},
           {"multipliers", polynomial_list_to_value(c.multipliers)},
           {"terms", std::move(terms)},
           {"extra", std::move(extra)}};
  return out.dump();
}

Certificate certificate_from_json(const std::string& text) {
  return wrap_errors([&] {
    json j = parse_document(text);
    Certificate c;
    std::string variant = j.at("variant").get<std::string>();
    if (variant == "farkas") {
      c.kind = CertificateKind::Farkas;
    } else if (variant == "handelman") {
      c.kind = CertificateKind::Handelman;
    } else if (variant == "smodule") {
      c.kind = CertificateKind::SModule;
    } else if (variant == "polya") {
      c.kind = CertificateKind::Polya;
    } else if (variant == "bernstein") {
      c.kind = CertificateKind::Bernstein;
    } else {
      throw std::invalid_argument("unknown certificate variant: " + variant);
    }
    c.target = polynomial_from_value(j.at("target"));
    c.generators = polynomial_list_from_value(j.at("generators"));
    c.multipliers = polynomial_list_from_value(j.at("multipliers"));
    const json& extra = j.at("extra");
    if (extra.contains("polya_n")) c.polya_power = extra.at("polya_n").get<unsigned>();
    if (extra.contains("bernstein_k")) c.bernstein_order = extra.at("bernstein_k").get<unsigned>();
    for (const auto& item : j.at("terms")) {
      CertificateTerm term;
      term.coefficient = rational_from_string(item.at("coeff").get<std::string>());
      for (const auto& e : item.at("exponents")) {
        term.exponents.push_back(e.get<unsigned>());
      }
      term.multiplier_index = item.at("multiplier_index").get<std::size_t>();
      if (term.exponents.size() != c.generators.size()) {
        throw std::invalid_argument("certificate term exponent length mismatch");
      }
      if (term.multiplier_index >= c.multipliers.size()) {
        throw std::invalid_argument("certificate multiplier index out of range");
      }
      term.value = c.multipliers[term.multiplier_index];
      for (std::size_t i = 0; i < term.exponents.size(); ++i) {
        if (term.exponents[i] > 0) term.value = term.value * c.generators[i].pow(term.exponents[i]);
      }
      c.terms.push_back(std::move(term));
    }
    return c;
  });
}

std::string to_json(const ExtractionResult& r) {
  json out = measure_to_value(r.measure);
  out["residual"] = r.residual;
  out["flat"] = r.flat;
  return out.dump();
}

}  // namespace psatz
