#include "psatz/certificates.hpp"

#include <map>
#include <stdexcept>

#include "psatz/cones.hpp"
#include "psatz/lp.hpp"

namespace psatz {

namespace {

Polynomial recompute_value(const Certificate& c, const CertificateTerm& term) {
  Polynomial value = c.multipliers.at(term.multiplier_index);
  for (std::size_t i = 0; i < term.exponents.size(); ++i) {
    if (term.exponents[i] > 0) value = value * c.generators[i].pow(term.exponents[i]);
  }
  return value;
}

Polynomial coordinate_sum(std::size_t dim) {
  Polynomial sum(dim);
  for (std::size_t j = 0; j < dim; ++j) sum += Polynomial::variable(dim, j);
  return sum;
}

// Solves target = sum_j alpha_j * columns_j with alpha >= 0 by exact
// coefficient matching over every monomial present in the system.
std::optional<std::vector<Rational>> match_combination(const Polynomial& target,
                                                       const std::vector<Polynomial>& columns) {
  std::map<MultiIndex, std::size_t, GrlexLess> row_of;
  auto note_monomials = [&](const Polynomial& p) {
    for (const auto& [alpha, c] : p.terms()) row_of.emplace(alpha, 0);
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
    for (const auto& [alpha, c] : columns[j].terms()) lp.rows[row_of.at(alpha)][j] = c;
  }
  auto solution = lp_solve(lp);
  if (solution.status != LpStatus::Feasible) return std::nullopt;
  return solution.assignment;
}

void require_linear(const Polynomial& p, const char* what) {
  if (p.total_degree() > 1) {
    throw std::invalid_argument(std::string(what) + " must have total degree <= 1");
  }
}

Certificate from_basis_combination(CertificateKind kind, const Polynomial& target,
                                   std::vector<Polynomial> generators,
                                   std::vector<Polynomial> multipliers,
                                   const ConeElementBasis& basis,
                                   const std::vector<Rational>& alphas) {
  Certificate cert;
  cert.kind = kind;
  cert.target = target;
  cert.generators = std::move(generators);
  cert.multipliers = std::move(multipliers);
  for (std::size_t j = 0; j < basis.elements.size(); ++j) {
    if (alphas[j] == 0) continue;
    const auto& element = basis.elements[j];
    cert.terms.push_back({alphas[j], element.exponents, element.multiplier_index, element.value});
  }
  return cert;
}

}  // namespace

bool verify(const Certificate& c) {
  try {
    Polynomial sum(c.target.dimension());
    for (const auto& term : c.terms) {
      if (term.coefficient < 0) return false;
      if (term.exponents.size() != c.generators.size()) return false;
      if (term.multiplier_index >= c.multipliers.size()) return false;
      sum += term.coefficient * recompute_value(c, term);
    }
    if (c.kind == CertificateKind::Polya) {
      Polynomial lhs = coordinate_sum(c.target.dimension()).pow(c.polya_power) * c.target;
      return sum == lhs;
    }
    return sum == c.target;
  } catch (const std::exception&) {
    return false;
  }
}

std::optional<Certificate> farkas_certify(const Polynomial& h,
                                          const std::vector<Polynomial>& constraints) {
  require_linear(h, "farkas target");
  for (const auto& f : constraints) require_linear(f, "farkas constraint");

  std::vector<Polynomial> columns{Polynomial::constant(h.dimension(), Rational(1))};
  columns.insert(columns.end(), constraints.begin(), constraints.end());
  auto alphas = match_combination(h, columns);
  if (!alphas) return std::nullopt;

  Certificate cert;
  cert.kind = CertificateKind::Farkas;
  cert.target = h;
  cert.generators = constraints;
  cert.multipliers = {Polynomial::constant(h.dimension(), Rational(1))};
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if ((*alphas)[j] == 0) continue;
    std::vector<unsigned> exponents(constraints.size(), 0);
    if (j > 0) exponents[j - 1] = 1;
    cert.terms.push_back({(*alphas)[j], exponents, 0, columns[j]});
  }
  return cert;
}

std::optional<Certificate> handelman_certify(const Polynomial& h,
                                             const std::vector<Polynomial>& constraints,
                                             unsigned degree_bound) {
  for (const auto& f : constraints) require_linear(f, "handelman constraint");
  if (h.total_degree() > static_cast<int>(degree_bound)) {
    throw std::invalid_argument("degree bound below deg h");
  }
  ConeSpec cone = make_cone(ConeKind::Semiring, constraints);
  ConeElementBasis basis = enumerate_basis(cone, degree_bound);
  std::vector<Polynomial> columns;
  columns.reserve(basis.elements.size());
  for (const auto& element : basis.elements) columns.push_back(element.value);
  auto alphas = match_combination(h, columns);
  if (!alphas) return std::nullopt;
  return from_basis_combination(CertificateKind::Handelman, h, constraints,
                                {Polynomial::constant(h.dimension(), Rational(1))}, basis,
                                *alphas);
}

std::optional<Certificate> smodule_certify(const Polynomial& h,
                                           const std::vector<Polynomial>& constraints,
                                           const std::vector<Polynomial>& multipliers,
                                           unsigned degree_bound) {
  for (const auto& f : constraints) require_linear(f, "smodule constraint");
  ConeSpec cone = make_cone(ConeKind::SModule, constraints, multipliers);
  ConeElementBasis basis = enumerate_basis(cone, degree_bound);
  std::vector<Polynomial> columns;
  columns.reserve(basis.elements.size());
  for (const auto& element : basis.elements) columns.push_back(element.value);
  auto alphas = match_combination(h, columns);
  if (!alphas) return std::nullopt;
  return from_basis_combination(CertificateKind::SModule, h, constraints, cone.multipliers,
                                basis, *alphas);
}

std::optional<Certificate> polya_certify(const Polynomial& f, unsigned max_power) {
  if (!f.is_homogeneous() || f.is_zero()) {
    throw std::invalid_argument("polya target must be homogeneous and nonzero");
  }
  const std::size_t dim = f.dimension();
  Polynomial sum = coordinate_sum(dim);
  Polynomial expansion = f;
  for (unsigned n = 0; n <= max_power; ++n, expansion = expansion * sum) {
    bool nonnegative = true;
    for (const auto& [alpha, c] : expansion.terms()) {
      if (c < 0) {
        nonnegative = false;
        break;
      }
    }
    if (!nonnegative) continue;

    Certificate cert;
    cert.kind = CertificateKind::Polya;
    cert.target = f;
    cert.polya_power = n;
    cert.multipliers = {Polynomial::constant(dim, Rational(1))};
    for (std::size_t j = 0; j < dim; ++j) cert.generators.push_back(Polynomial::variable(dim, j));
    for (const auto& [alpha, c] : expansion.terms()) {
      cert.terms.push_back(
          {c, alpha.exponents(), 0, Polynomial::monomial(alpha, Rational(1))});
    }
    return cert;
  }
  return std::nullopt;
}

Certificate bernstein_identity(unsigned k) {
  if (k < 2) throw std::invalid_argument("bernstein identity requires k >= 2");
  const Polynomial one = Polynomial::constant(1, Rational(1));
  const Polynomial x = Polynomial::variable(1, 0);

  Certificate cert;
  cert.kind = CertificateKind::Bernstein;
  cert.bernstein_order = k;
  cert.target = x * x + Polynomial::constant(1, Rational(1, static_cast<long>(k) - 1));
  cert.generators = {one + x, one - x};
  cert.multipliers = {one};

  Rational scale(Integer(1), Integer(1) << k);
  scale /= Integer(k) * Integer(k - 1);
  for (unsigned l = 0; l <= k; ++l) {
    long centered = 2 * static_cast<long>(l) - static_cast<long>(k);
    if (centered == 0) continue;
    Rational coeff = scale * binomial(k, l) * Integer(centered * centered);
    Polynomial value = cert.generators[0].pow(k - l) * cert.generators[1].pow(l);
    cert.terms.push_back({coeff, {k - l, l}, 0, std::move(value)});
  }
  if (!verify(cert)) throw std::logic_error("bernstein identity failed exact verification");
  return cert;
}

}  // namespace psatz
