#include "psatz/cones.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "psatz/lp.hpp"

namespace psatz {

std::size_t ConeSpec::dimension() const {
  if (generators.empty()) throw std::logic_error("cone has no generators");
  return generators.front().dimension();
}

ConeSpec make_cone(ConeKind kind, std::vector<Polynomial> generators,
                   std::vector<Polynomial> multipliers) {
  if (generators.empty()) throw std::invalid_argument("cone generators must be nonempty");
  const std::size_t dim = generators.front().dimension();
  for (const auto& f : generators) {
    if (f.dimension() != dim) throw std::invalid_argument("cone generator dimensions disagree");
  }
  if (kind != ConeKind::SModule) {
    if (!multipliers.empty()) {
      throw std::invalid_argument("multipliers apply only to smodule cones");
    }
    return {kind, std::move(generators), {}};
  }
  const Polynomial one = Polynomial::constant(dim, Rational(1));
  std::vector<Polynomial> normalized{one};
  for (auto& g : multipliers) {
    if (g.dimension() != dim) throw std::invalid_argument("cone multiplier dimensions disagree");
    if (!(g == one)) normalized.push_back(std::move(g));
  }
  return {kind, std::move(generators), std::move(normalized)};
}

namespace {

class BasisBuilder {
 public:
  BasisBuilder(std::size_t max_elements) : max_elements_(max_elements) {}

  void add(std::vector<unsigned> exponents, std::size_t multiplier_index, Polynomial value) {
    if (value.is_zero()) return;
    if (!seen_.insert(value.str()).second) return;
    if (elements_.size() >= max_elements_) {
      throw std::length_error("cone basis exceeds the configured element cap");
    }
    ConeBasisElement element;
    element.exponents = std::move(exponents);
    element.multiplier_index = multiplier_index;
    element.value = std::move(value);
    elements_.push_back(std::move(element));
  }

  ConeElementBasis take() { return {std::move(elements_)}; }

 private:
  std::size_t max_elements_;
  std::set<std::string> seen_;
  std::vector<ConeBasisElement> elements_;
};

// Products f^n with sum_i n_i * weight_i <= budget, where constant
// generators are weighted as degree 1 to keep the enumeration finite.
void enumerate_products(const std::vector<Polynomial>& generators,
                        const std::vector<unsigned>& weights, unsigned budget, std::size_t pos,
                        std::vector<unsigned>& exponents, const Polynomial& partial,
                        std::size_t multiplier_index, BasisBuilder& out) {
  if (pos == generators.size()) {
    out.add(exponents, multiplier_index, partial);
    return;
  }
  Polynomial accumulated = partial;
  for (unsigned e = 0;; ++e) {
    exponents[pos] = e;
    enumerate_products(generators, weights, budget - e * weights[pos], pos + 1, exponents,
                       accumulated, multiplier_index, out);
    if ((e + 1) * weights[pos] > budget) break;
    accumulated = accumulated * generators[pos];
  }
  exponents[pos] = 0;
}

// Squarefree mixed products f^e, e in {0,1}^k, pruned by the degree budget
// so large generator sets with small bounds stay tractable.
void enumerate_mixed_products(const std::vector<Polynomial>& generators, unsigned budget,
                              std::size_t pos, std::vector<unsigned>& exponents,
                              const Polynomial& partial, BasisBuilder& out) {
  if (pos == generators.size()) {
    out.add(exponents, 0, partial);
    return;
  }
  enumerate_mixed_products(generators, budget, pos + 1, exponents, partial, out);
  unsigned degree = static_cast<unsigned>(std::max(generators[pos].total_degree(), 0));
  if (degree <= budget) {
    exponents[pos] = 1;
    enumerate_mixed_products(generators, budget - degree, pos + 1, exponents,
                             partial * generators[pos], out);
    exponents[pos] = 0;
  }
}

unsigned effective_degree(const Polynomial& p) {
  return static_cast<unsigned>(std::max(p.total_degree(), 1));
}

}  // namespace

ConeElementBasis enumerate_basis(const ConeSpec& cone, unsigned degree_bound,
                                 std::size_t max_elements) {
  const std::size_t k = cone.generators.size();
  const std::size_t dim = cone.dimension();
  BasisBuilder builder(max_elements);

  switch (cone.kind) {
    case ConeKind::QuadraticModule: {
      builder.add(std::vector<unsigned>(k, 0), 0, Polynomial::constant(dim, Rational(1)));
      for (std::size_t j = 0; j < k; ++j) {
        if (cone.generators[j].total_degree() > static_cast<int>(degree_bound)) continue;
        std::vector<unsigned> exponents(k, 0);
        exponents[j] = 1;
        builder.add(std::move(exponents), 0, cone.generators[j]);
      }
      break;
    }
    case ConeKind::Preordering: {
      std::vector<unsigned> exponents(k, 0);
      enumerate_mixed_products(cone.generators, degree_bound, 0, exponents,
                               Polynomial::constant(dim, Rational(1)), builder);
      break;
    }
    case ConeKind::Semiring:
    case ConeKind::SModule: {
      std::vector<unsigned> weights(k);
      for (std::size_t j = 0; j < k; ++j) weights[j] = effective_degree(cone.generators[j]);
      std::vector<Polynomial> multipliers = cone.multipliers;
      if (cone.kind == ConeKind::Semiring) {
        multipliers = {Polynomial::constant(dim, Rational(1))};
      }
      for (std::size_t mi = 0; mi < multipliers.size(); ++mi) {
        int mdeg = multipliers[mi].total_degree();
        if (mdeg < 0 || mdeg > static_cast<int>(degree_bound)) continue;
        std::vector<unsigned> exponents(k, 0);
        enumerate_products(cone.generators, weights,
                           degree_bound - static_cast<unsigned>(mdeg), 0, exponents,
                           multipliers[mi], mi, builder);
      }
      break;
    }
  }
  return builder.take();
}

namespace {

// Matches target + lambda on the nonconstant coefficients: finds alpha >= 0
// with sum_j alpha_j columns_j = target + lambda for the implied constant
// lambda, then lifts lambda above zero through the constant-one column.
struct ShiftedMatch {
  std::vector<Rational> alphas;
  Rational lambda;
};

std::optional<ShiftedMatch> match_up_to_constant(const Polynomial& target,
                                                 const std::vector<Polynomial>& columns,
                                                 std::size_t one_column) {
  std::map<MultiIndex, std::size_t, GrlexLess> row_of;
  auto note_monomials = [&](const Polynomial& p) {
    for (const auto& [alpha, c] : p.terms()) {
      if (!alpha.is_zero()) row_of.emplace(alpha, 0);
    }
  };
  note_monomials(target);
  for (const auto& col : columns) note_monomials(col);
  std::size_t next = 0;
  for (auto& [alpha, index] : row_of) index = next++;

  LinearProgram lp;
  lp.variables.resize(columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) lp.variables[j] = "a" + std::to_string(j);
  lp.rows.assign(row_of.size(), std::vector<Rational>(columns.size(), Rational(0)));
  lp.rhs.assign(row_of.size(), Rational(0));
  for (const auto& [alpha, r] : row_of) lp.rhs[r] = target.coefficient(alpha);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (const auto& [alpha, c] : columns[j].terms()) {
      if (!alpha.is_zero()) lp.rows[row_of.at(alpha)][j] = c;
    }
  }
  auto solution = lp_solve(lp);
  if (solution.status != LpStatus::Feasible) return std::nullopt;

  ShiftedMatch match;
  match.alphas = std::move(solution.assignment);
  Rational constant(0);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    constant += match.alphas[j] * columns[j].constant_term();
  }
  match.lambda = constant - target.constant_term();
  if (match.lambda <= 0) {
    match.alphas[one_column] += Rational(1) - match.lambda;
    match.lambda = 1;
  }
  return match;
}

std::size_t find_one_column(const std::vector<Polynomial>& columns, std::size_t dim) {
  const Polynomial one = Polynomial::constant(dim, Rational(1));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j] == one) return j;
  }
  throw std::logic_error("cone basis does not contain the constant 1");
}

Certificate combination_certificate(CertificateKind kind, Polynomial target,
                                    const std::vector<Polynomial>& generators,
                                    const std::vector<Polynomial>& multipliers,
                                    const std::vector<ConeBasisElement>& elements,
                                    const std::vector<Rational>& alphas) {
  Certificate cert;
  cert.kind = kind;
  cert.target = std::move(target);
  cert.generators = generators;
  cert.multipliers = multipliers;
  for (std::size_t j = 0; j < elements.size(); ++j) {
    if (alphas[j] == 0) continue;
    cert.terms.push_back(
        {alphas[j], elements[j].exponents, elements[j].multiplier_index, elements[j].value});
  }
  return cert;
}

}  // namespace

ArchimedeanReport archimedean_witness_search(const ConeSpec& cone, unsigned degree_bound) {
  const std::size_t dim = cone.dimension();
  const Polynomial one = Polynomial::constant(dim, Rational(1));
  const bool quadratic_kind =
      cone.kind == ConeKind::QuadraticModule || cone.kind == ConeKind::Preordering;

  ConeElementBasis basis = enumerate_basis(cone, degree_bound);
  std::vector<Polynomial> columns;
  columns.reserve(basis.elements.size());
  for (const auto& element : basis.elements) columns.push_back(element.value);
  const std::size_t one_column = find_one_column(columns, dim);

  std::vector<Polynomial> certificate_multipliers =
      cone.kind == ConeKind::SModule ? cone.multipliers : std::vector<Polynomial>{one};
  CertificateKind linear_kind =
      cone.kind == ConeKind::SModule ? CertificateKind::SModule : CertificateKind::Handelman;

  // Columns for lambda - x_k^2: basis elements times diagonal squares
  // x^{2 beta}, described over the generator list extended by the
  // coordinate monomials.
  std::vector<ConeBasisElement> square_elements;
  std::vector<Polynomial> square_columns;
  std::vector<Polynomial> extended_generators;
  if (quadratic_kind) {
    extended_generators = cone.generators;
    for (std::size_t j = 0; j < dim; ++j) {
      extended_generators.push_back(Polynomial::variable(dim, j));
    }
    std::set<std::string> seen;
    for (const auto& element : basis.elements) {
      int base_degree = std::max(element.value.total_degree(), 0);
      if (base_degree > static_cast<int>(degree_bound)) continue;
      unsigned room = (degree_bound - static_cast<unsigned>(base_degree)) / 2;
      for (const auto& beta : monomials_up_to(dim, room)) {
        MultiIndex two_beta(dim);
        for (std::size_t j = 0; j < dim; ++j) two_beta[j] = 2 * beta[j];
        Polynomial value = element.value * Polynomial::monomial(two_beta, Rational(1));
        if (!seen.insert(value.str()).second) continue;
        ConeBasisElement extended;
        extended.exponents = element.exponents;
        for (std::size_t j = 0; j < dim; ++j) extended.exponents.push_back(two_beta[j]);
        extended.multiplier_index = element.multiplier_index;
        extended.value = value;
        square_elements.push_back(std::move(extended));
        square_columns.push_back(std::move(value));
      }
    }
  }

  ArchimedeanReport report;
  report.all_witnessed = true;
  for (std::size_t k = 0; k < dim; ++k) {
    const Polynomial xk = Polynomial::variable(dim, k);
    std::optional<ArchimedeanWitness> witness;

    auto lower = match_up_to_constant(-xk, columns, one_column);
    std::optional<ShiftedMatch> upper;
    if (lower) upper = match_up_to_constant(xk, columns, one_column);
    if (lower && upper) {
      // One lambda for both sides; top up through the constant column.
      Rational lambda = std::max(lower->lambda, upper->lambda);
      lower->alphas[one_column] += lambda - lower->lambda;
      upper->alphas[one_column] += lambda - upper->lambda;
      ArchimedeanWitness w;
      w.variable = k;
      w.lambda = lambda;
      w.certificates.push_back(
          combination_certificate(linear_kind, Polynomial::constant(dim, lambda) - xk,
                                  cone.generators, certificate_multipliers, basis.elements,
                                  lower->alphas));
      w.certificates.push_back(
          combination_certificate(linear_kind, Polynomial::constant(dim, lambda) + xk,
                                  cone.generators, certificate_multipliers, basis.elements,
                                  upper->alphas));
      witness = std::move(w);
    } else if (quadratic_kind) {
      std::size_t square_one = find_one_column(square_columns, dim);
      auto match = match_up_to_constant(-(xk * xk), square_columns, square_one);
      if (match) {
        ArchimedeanWitness w;
        w.variable = k;
        w.lambda = match->lambda;
        w.certificates.push_back(combination_certificate(
            CertificateKind::Handelman, Polynomial::constant(dim, match->lambda) - xk * xk,
            extended_generators, {one}, square_elements, match->alphas));
        witness = std::move(w);
      }
    }

    if (witness) {
      for (const auto& cert : witness->certificates) {
        if (!verify(cert)) throw std::logic_error("archimedean witness failed verification");
      }
      report.per_variable.push_back(std::move(witness));
    } else {
      report.per_variable.push_back(std::nullopt);
      report.all_witnessed = false;
    }
  }
  return report;
}

BoundedElementIdentities bounded_element_identities(const Rational& lambda, const Polynomial& a) {
  if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
  const std::size_t dim = a.dimension();
  const Polynomial lam = Polynomial::constant(dim, lambda);
  const Rational half_over_lambda = Rational(1) / (2 * lambda);

  BoundedElementIdentities out;
  out.sum = lam + a;
  out.difference = lam - a;
  out.square_difference = Polynomial::constant(dim, lambda * lambda) - a * a;
  out.sum_expansion = half_over_lambda * (out.square_difference + out.sum * out.sum);
  out.difference_expansion =
      half_over_lambda * (out.square_difference + out.difference * out.difference);
  out.square_difference_expansion =
      half_over_lambda *
      (out.sum * out.sum * out.difference + out.difference * out.difference * out.sum);
  out.verified = out.sum == out.sum_expansion && out.difference == out.difference_expansion &&
                 out.square_difference == out.square_difference_expansion;
  return out;
}

MembershipEvaluation membership_by_evaluation(const ConeSpec& cone, const Polynomial& h,
                                              const std::vector<std::vector<Rational>>& samples) {
  MembershipEvaluation result;
  for (const auto& point : samples) {
    bool feasible = true;
    for (const auto& f : cone.generators) {
      if (f.eval(point) < 0) {
        feasible = false;
        break;
      }
    }
    if (feasible && cone.kind == ConeKind::SModule) {
      for (const auto& g : cone.multipliers) {
        if (g.eval(point) < 0) {
          feasible = false;
          break;
        }
      }
    }
    if (!feasible) continue;
    ++result.feasible_samples;
    Rational value = h.eval(point);
    if (value < 0) {
      result.refuted = true;
      result.refuting_point = point;
      result.value_at_point = value;
      return result;
    }
  }
  return result;
}

}  // namespace psatz
