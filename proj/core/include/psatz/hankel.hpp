#pragma once

#include <string>
#include <vector>

#include "psatz/moment_sequence.hpp"

namespace psatz {

/// Localized Hankel matrix H(gs) on the monomials of degree <= level:
/// matrix[i][j] = sum_gamma g_gamma s_{alpha_i + alpha_j + gamma}, exactly.
struct HankelBlock {
  std::vector<MultiIndex> row_basis;            // graded-lex monomials
  std::vector<std::vector<Rational>> matrix;    // symmetric, exact
  Polynomial localizer;

  std::size_t size() const { return row_basis.size(); }
};

/// Requires 2*level + deg g <= s.max_degree().
HankelBlock localized_hankel(const MomentSequence& s, const Polynomial& g, unsigned level);

struct PsdVerdict {
  bool psd = false;
  double min_eigenvalue = 0.0;
  /// Eigenvector of the most negative eigenvalue; empty when psd.
  std::vector<double> witness;
};

/// Floating check of positive semidefiniteness via the Jacobi eigensolver.
/// The threshold is tol relative to the largest |diagonal| entry; only this
/// step leaves exact arithmetic.
PsdVerdict psd_check(const HankelBlock& block, double tol = 1e-9);

struct ConePositivityReport {
  struct BlockVerdict {
    Polynomial localizer;
    PsdVerdict verdict;
  };
  std::vector<BlockVerdict> blocks;   // H(s) first, then one block per generator
  bool all_psd = false;
};

/// Builds H(s) and H(g_j s) at the given level and checks each block.
/// The truncated test of the condition L(g p^2) >= 0 for the quadratic
/// module generated by the g_j: all blocks PSD is necessary for s to come
/// from a measure on {g_j >= 0}.
ConePositivityReport cone_positivity_check(const MomentSequence& s,
                                           const std::vector<Polynomial>& generators,
                                           unsigned level, double tol = 1e-9);

struct HausdorffVerdict {
  bool accepted = true;
  MultiIndex violating_m, violating_n;   // first violation when rejected
  Rational violating_value;
};

/// Multidimensional Hausdorff difference criterion on [0,1]^d: evaluates
/// sum_{j<=n} (-1)^{|j|} C(n,j) s_{m+j} for all |m|+|n| <= min(N, up_to)
/// and accepts iff every value is >= 0. Exact.
HausdorffVerdict hausdorff_check(const MomentSequence& s, unsigned up_to);

struct SupportGrowthReport {
  std::vector<Rational> ratios;   // L_s(g^{2n}) / c^{2n} for n = 1, 2, ...
  bool growing = false;           // strictly increasing ratio tail
  std::string note;               // marks the finite-horizon heuristic
};

/// Finite-sample diagnostic of the support bound L_s(g^{2n}) <= M c^{2n}:
/// reports the ratio sequence and flags a strictly increasing tail. A
/// BOUNDED verdict is evidence, never a proof, since the condition
/// quantifies over all n.
SupportGrowthReport support_growth_diagnostic(const MomentSequence& s, const Polynomial& g,
                                              const Rational& c);

struct AnnihilationVerdict {
  bool annihilated = true;
  MultiIndex violating_alpha;   // valid when !annihilated
  Rational violating_value;
};

/// Accepts iff L_s(h * x^alpha) = 0 exactly for all |alpha| <= level.
AnnihilationVerdict ideal_annihilation_check(const MomentSequence& s, const Polynomial& h,
                                             unsigned level);

}  // namespace psatz
