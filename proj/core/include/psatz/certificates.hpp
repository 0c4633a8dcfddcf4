#pragma once

#include <optional>
#include <vector>

#include "psatz/polynomial.hpp"

namespace psatz {

enum class CertificateKind { Farkas, Handelman, SModule, Polya, Bernstein };

/// One summand of a certificate: coefficient * multiplier * prod_i f_i^{e_i}.
/// The value field caches the product; verification always recomputes it
/// from the factor description.
struct CertificateTerm {
  Rational coefficient;                 // >= 0
  std::vector<unsigned> exponents;      // over the certificate's generators
  std::size_t multiplier_index = 0;     // into multipliers; index 0 is the constant 1
  Polynomial value;
};

/// A verifiable algebraic identity witnessing cone membership of `target`.
/// For every variant except Polya the claim is
///     target = sum_t coefficient_t * multiplier_t * f^{exponents_t},
/// exactly. For Polya the claim is that (x1+...+xd)^polya_power * target
/// expands with only nonnegative coefficients, the terms being that
/// expansion (generators are the coordinate monomials).
struct Certificate {
  CertificateKind kind = CertificateKind::Farkas;
  Polynomial target;
  std::vector<Polynomial> generators;
  std::vector<Polynomial> multipliers;   // always starts with the constant 1
  std::vector<CertificateTerm> terms;
  unsigned polya_power = 0;      // kind == Polya
  unsigned bernstein_order = 0;  // kind == Bernstein

  Certificate() : target(1) {}
};

/// Recomputes every product from its factor description, sums with the
/// coefficients, and compares against the target exactly. Nonnegativity of
/// the coefficients is part of the check.
bool verify(const Certificate& c);

/// Writes a nonnegative-coefficient identity h = l0 + l1 f1 + ... + lk fk
/// for linear h and linear constraints f (Farkas). Returns nullopt when the
/// matching system is infeasible. Throws on nonlinear input.
std::optional<Certificate> farkas_certify(const Polynomial& h,
                                          const std::vector<Polynomial>& constraints);

/// Searches for h as a nonnegative combination of products f^n with
/// deg <= degree_bound (Handelman / semiring membership over a compact
/// polyhedron). nullopt means not found at this degree bound; the theorem
/// guarantees some bound works whenever h > 0 on the nonempty compact K(f).
std::optional<Certificate> handelman_certify(const Polynomial& h,
                                             const std::vector<Polynomial>& constraints,
                                             unsigned degree_bound);

/// Like handelman_certify over the module basis g_j * f^n (the constant
/// multiplier 1 is implied).
std::optional<Certificate> smodule_certify(const Polynomial& h,
                                           const std::vector<Polynomial>& constraints,
                                           const std::vector<Polynomial>& multipliers,
                                           unsigned degree_bound);

/// Least n <= max_power such that (x1+...+xd)^n * f has only nonnegative
/// coefficients, with the full expansion as the certificate. Requires f
/// homogeneous.
std::optional<Certificate> polya_certify(const Polynomial& f, unsigned max_power);

/// The explicit identity
///   x^2 + 1/(k-1) = 1/(2^k k (k-1)) * sum_l C(k,l) (k-2l)^2 (1+x)^{k-l} (1-x)^l,
/// built symbolically and checked exactly. Requires k >= 2.
Certificate bernstein_identity(unsigned k);

}  // namespace psatz
