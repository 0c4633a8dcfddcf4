#include "psatz/hankel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "psatz/jacobi.hpp"

namespace psatz {

HankelBlock localized_hankel(const MomentSequence& s, const Polynomial& g, unsigned level) {
  if (g.dimension() != s.dimension()) {
    throw std::invalid_argument("localizer dimension does not match sequence");
  }
  int gdeg = std::max(g.total_degree(), 0);
  if (2 * level + static_cast<unsigned>(gdeg) > s.max_degree()) {
    throw std::invalid_argument("truncation insufficient: need 2*level + deg g <= max_degree");
  }
  HankelBlock block{monomials_up_to(s.dimension(), level), {}, g};
  const std::size_t n = block.row_basis.size();
  block.matrix.assign(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Rational entry(0);
      MultiIndex base = block.row_basis[i] + block.row_basis[j];
      for (const auto& [gamma, c] : g.terms()) entry += c * s.value(base + gamma);
      block.matrix[i][j] = entry;
      block.matrix[j][i] = entry;
    }
  }
  return block;
}

PsdVerdict psd_check(const HankelBlock& block, double tol) {
  const std::size_t n = block.size();
  PsdVerdict verdict;
  if (n == 0) {
    verdict.psd = true;
    return verdict;
  }
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  double max_diag = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = to_double(block.matrix[i][j]);
    max_diag = std::max(max_diag, std::abs(a[i][i]));
  }
  auto eig = jacobi_eigen(std::move(a));
  verdict.min_eigenvalue = eig.eigenvalues.front();
  verdict.psd = verdict.min_eigenvalue >= -tol * max_diag;
  if (!verdict.psd) verdict.witness = eig.eigenvectors.front();
  return verdict;
}

ConePositivityReport cone_positivity_check(const MomentSequence& s,
                                           const std::vector<Polynomial>& generators,
                                           unsigned level, double tol) {
  ConePositivityReport report;
  report.all_psd = true;
  // The constant localizer is implied: H(s) itself must be PSD.
  std::vector<Polynomial> localizers{Polynomial::constant(s.dimension(), Rational(1))};
  localizers.insert(localizers.end(), generators.begin(), generators.end());
  for (const auto& g : localizers) {
    auto verdict = psd_check(localized_hankel(s, g, level), tol);
    report.all_psd = report.all_psd && verdict.psd;
    report.blocks.push_back({g, std::move(verdict)});
  }
  return report;
}

HausdorffVerdict hausdorff_check(const MomentSequence& s, unsigned up_to) {
  const std::size_t d = s.dimension();
  const unsigned budget = std::min(up_to, s.max_degree());
  HausdorffVerdict verdict;
  auto indices = monomials_up_to(d, budget);
  for (const auto& m : indices) {
    for (const auto& n : indices) {
      if (m.total_degree() + n.total_degree() > budget) continue;
      Rational sum(0);
      // All j with j <= n componentwise.
      MultiIndex j(d);
      while (true) {
        Integer coeff(1);
        unsigned jdeg = 0;
        for (std::size_t i = 0; i < d; ++i) {
          coeff *= binomial(n[i], j[i]);
          jdeg += j[i];
        }
        Rational term(coeff);
        if (jdeg % 2 == 1) term = -term;
        sum += term * s.value(m + j);
        std::size_t pos = 0;
        while (pos < d && j[pos] == n[pos]) {
          j[pos] = 0;
          ++pos;
        }
        if (pos == d) break;
        ++j[pos];
      }
      if (sum < 0) {
        verdict.accepted = false;
        verdict.violating_m = m;
        verdict.violating_n = n;
        verdict.violating_value = sum;
        return verdict;
      }
    }
  }
  return verdict;
}

SupportGrowthReport support_growth_diagnostic(const MomentSequence& s, const Polynomial& g,
                                              const Rational& c) {
  if (c <= 0) throw std::invalid_argument("growth bound c must be positive");
  int gdeg = g.total_degree();
  SupportGrowthReport report;
  report.note =
      "finite-horizon diagnostic: bounded ratios over the computed range do not "
      "prove the bound for all n";
  unsigned max_n;
  if (gdeg >= 1) {
    if (2 * static_cast<unsigned>(gdeg) > s.max_degree()) {
      throw std::invalid_argument("g^2 exceeds the truncation");
    }
    max_n = s.max_degree() / (2 * static_cast<unsigned>(gdeg));
  } else {
    max_n = 8;   // constant localizers fit at every n; sample a fixed horizon
  }
  Polynomial g2 = g * g;
  Polynomial power = Polynomial::constant(g.dimension(), Rational(1));
  Rational c2 = c * c;
  Rational cpow(1);
  for (unsigned n = 1; n <= max_n; ++n) {
    power = power * g2;
    cpow *= c2;
    report.ratios.push_back(apply(s, power) / cpow);
  }
  const auto& r = report.ratios;
  if (r.size() >= 2) {
    std::size_t tail_start = (r.size() - 1) / 2;
    bool strictly_increasing = true;
    for (std::size_t i = tail_start; i + 1 < r.size(); ++i) {
      if (!(r[i + 1] > r[i])) {
        strictly_increasing = false;
        break;
      }
    }
    report.growing = strictly_increasing;
  }
  return report;
}

AnnihilationVerdict ideal_annihilation_check(const MomentSequence& s, const Polynomial& h,
                                             unsigned level) {
  if (h.total_degree() + static_cast<int>(level) > static_cast<int>(s.max_degree())) {
    throw std::invalid_argument("truncation insufficient: need deg h + level <= max_degree");
  }
  AnnihilationVerdict verdict;
  for (const auto& alpha : monomials_up_to(s.dimension(), level)) {
    Rational value = apply(s, h * Polynomial::monomial(alpha, Rational(1)));
    if (value != 0) {
      verdict.annihilated = false;
      verdict.violating_alpha = alpha;
      verdict.violating_value = value;
      return verdict;
    }
  }
  return verdict;
}

}  // namespace psatz
