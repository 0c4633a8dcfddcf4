#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "psatz/certificates.hpp"
#include "psatz/polynomial.hpp"

namespace psatz {

enum class ConeKind { QuadraticModule, Preordering, Semiring, SModule };

/// Symbolic description of a cone of polynomials by its generators:
/// the quadratic module Q(f), the preordering T(f), the semiring S(f),
/// or the S(f)-module generated by multipliers g (with g0 = 1 implied).
struct ConeSpec {
  ConeKind kind = ConeKind::QuadraticModule;
  std::vector<Polynomial> generators;    // f, nonempty
  std::vector<Polynomial> multipliers;   // g; only meaningful for SModule

  std::size_t dimension() const;
};

/// Normalizes and validates: dimensions must agree, generators nonempty,
/// and for SModule the constant multiplier 1 is inserted when missing.
ConeSpec make_cone(ConeKind kind, std::vector<Polynomial> generators,
                   std::vector<Polynomial> multipliers = {});

struct ConeBasisElement {
  std::vector<unsigned> exponents;    // over the generators
  std::size_t multiplier_index = 0;   // into multipliers; 0 is the constant 1
  Polynomial value;                   // multiplier * prod f_i^{e_i}, recomputable

  ConeBasisElement() : value(1) {}
};

struct ConeElementBasis {
  std::vector<ConeBasisElement> elements;
};

/// Enumerates the LP-representable generating products of the cone up to
/// the degree bound:
///   Preordering     -> squarefree mixed products f^e, e in {0,1}^k
///   Semiring        -> all products f^n, n in N_0^k
///   SModule         -> each multiplier g_j times the semiring products
///   QuadraticModule -> the constant 1 and the generators themselves
/// Duplicate values are dropped. Throws std::length_error beyond
/// max_elements.
ConeElementBasis enumerate_basis(const ConeSpec& cone, unsigned degree_bound,
                                 std::size_t max_elements = 20000);

/// A verified proof that the variable x_k is bounded with respect to the
/// cone: either certificates for both lambda - x_k and lambda + x_k, or a
/// single certificate for lambda - x_k^2.
struct ArchimedeanWitness {
  std::size_t variable = 0;
  Rational lambda;
  std::vector<Certificate> certificates;
};

struct ArchimedeanReport {
  /// One entry per variable; nullopt means Inconclusive (the search proves
  /// nothing in that direction, it does not mean "not Archimedean").
  std::vector<std::optional<ArchimedeanWitness>> per_variable;
  bool all_witnessed = false;
};

/// Sound, incomplete witness search via exact LPs. For every kind it tries
/// lambda +- x_k as a nonnegative combination of the enumerated basis; for
/// the quadratic kinds it additionally tries lambda - x_k^2 over the basis
/// multiplied by diagonal squares x^{2beta}. Every returned witness passes
/// exact certificate verification.
ArchimedeanReport archimedean_witness_search(const ConeSpec& cone, unsigned degree_bound);

/// Both directions of the bounded-element identity at a concrete lambda:
///   lambda +- a = (1/2 lambda) [ (lambda^2 - a^2) + (lambda +- a)^2 ]
///   lambda^2 - a^2 = (1/2 lambda) [ (lambda+a)^2 (lambda-a) + (lambda-a)^2 (lambda+a) ]
struct BoundedElementIdentities {
  Polynomial sum;                 // lambda + a
  Polynomial sum_expansion;
  Polynomial difference;          // lambda - a
  Polynomial difference_expansion;
  Polynomial square_difference;   // lambda^2 - a^2
  Polynomial square_difference_expansion;
  bool verified = false;          // exact equality of all three pairs
};

/// Throws std::invalid_argument when lambda <= 0.
BoundedElementIdentities bounded_element_identities(const Rational& lambda, const Polynomial& a);

/// Evaluates h at the sample points lying in K(f) (all generators >= 0;
/// for SModule also all multipliers >= 0). A negative value refutes
/// membership of h in any cone over these generators; otherwise only a
/// necessary condition passed.
struct MembershipEvaluation {
  bool refuted = false;
  std::vector<Rational> refuting_point;
  Rational value_at_point;
  std::size_t feasible_samples = 0;
};

MembershipEvaluation membership_by_evaluation(const ConeSpec& cone, const Polynomial& h,
                                              const std::vector<std::vector<Rational>>& samples);

}  // namespace psatz
