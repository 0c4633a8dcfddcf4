#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "psatz/moment_sequence.hpp"

namespace psatz {

inline constexpr std::uint64_t kDefaultExtractionSeed = 0xC0FFEE;

/// Raised when the Gram matrix of a supposed positive functional has an
/// eigenvalue below -tol * ||G||.
class GramNotPsdError : public std::runtime_error {
 public:
  GramNotPsdError(double eigenvalue, std::vector<double> witness);
  double eigenvalue() const { return eigenvalue_; }
  const std::vector<double>& witness() const { return witness_; }

 private:
  double eigenvalue_;
  std::vector<double> witness_;
};

/// Truncated GNS data built from a moment sequence: the exact Gram matrix
/// G_{alpha,beta} = s_{alpha+beta} on monomials of degree <= level, its
/// numerical-rank quotient, and the compressed multiplication matrices
/// X_j = P^T S_j P with (S_j)_{alpha,beta} = s_{alpha+beta+e_j}.
///
/// `compression` is P (columns are null-space-orthogonal eigenvectors
/// scaled by inverse square-root eigenvalues, so P^T G P = I);
/// `coordinates` is P^T G, the isometry sending a polynomial's monomial
/// coefficient vector to its quotient coordinates.
struct GnsModel {
  std::size_t dimension = 0;
  unsigned level = 0;
  std::vector<MultiIndex> basis;
  std::vector<std::vector<Rational>> gram;
  std::size_t rank = 0;
  bool flat = false;   // rank of the degree-(level-1) block equals rank
  std::vector<std::vector<double>> compression;
  std::vector<std::vector<double>> coordinates;
  std::vector<std::vector<std::vector<double>>> mult;
  std::vector<double> unit;   // quotient coordinates of the monomial 1
  MomentSequence moments{1, 0};   // source moments, truncated to 2*level
};

/// Requires 2*level + 1 <= s.max_degree(). Eigenvalues <= tol * (largest
/// eigenvalue) count as null; an eigenvalue below -tol * ||G|| raises
/// GramNotPsdError.
GnsModel gns_build(const MomentSequence& s, unsigned level, double tol = 1e-10);

struct CommutationReport {
  double max_defect = 0.0;   // max entry of |X_j X_k - X_k X_j| over j < k
  bool within_tol = true;
};

/// Compression to the quotient can break exact commutation when the model
/// is not flat; a defect above tol warns that extraction is best-effort.
CommutationReport check_commutation(const GnsModel& m, double tol = 1e-8);

struct ExtractionResult {
  AtomicMeasure measure;
  double residual = 0.0;            // max |recomputed moment - s_alpha|, |alpha| <= 2*level
  bool flat = false;
  double commutation_defect = 0.0;
};

/// Simultaneous diagonalization of the X_j through a seeded random linear
/// combination: each eigenvector v yields the atom (v^T X_1 v, ..., v^T X_d v)
/// with weight (v . unit)^2. Atoms with weight < tol are dropped. Throws
/// when the commutation defect exceeds tol, and after three reseeds if the
/// combined matrix keeps colliding eigenvalues.
ExtractionResult gns_extract(const GnsModel& m, double tol = 1e-8,
                             std::uint64_t seed = kDefaultExtractionSeed);

struct RepresentationReport {
  double max_mismatch = 0.0;
  MultiIndex worst;
};

/// Exact moments of the extracted measure compared against s up to the
/// given degree.
RepresentationReport verify_representation(const ExtractionResult& r, const MomentSequence& s,
                                           unsigned degree);

}  // namespace psatz
