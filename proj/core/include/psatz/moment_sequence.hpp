#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "psatz/polynomial.hpp"

namespace psatz {

/// Finitely many weighted point masses with exact rational data.
struct AtomicMeasure {
  struct Atom {
    std::vector<Rational> point;
    Rational weight;
  };

  std::size_t dimension = 0;
  std::vector<Atom> atoms;

  /// Checks weights > 0, point lengths, and pairwise distinct points.
  void validate() const;
};

/// Truncated d-sequence s = (s_alpha): one exact rational value for every
/// multi-index with |alpha| <= max_degree, and for no other index. This is
/// the data of the linear functional L_s on polynomials of degree <= N.
class MomentSequence {
 public:
  using ValueMap = std::map<MultiIndex, Rational, GrlexLess>;

  /// All-zero sequence.
  MomentSequence(std::size_t dim, unsigned max_degree);

  /// Builds from explicit values; throws unless the map contains exactly
  /// the indices with |alpha| <= max_degree.
  static MomentSequence from_values(std::size_t dim, unsigned max_degree, ValueMap values);

  std::size_t dimension() const { return dim_; }
  unsigned max_degree() const { return max_degree_; }
  const ValueMap& values() const { return values_; }

  /// s_alpha; throws std::out_of_range beyond the truncation.
  const Rational& value(const MultiIndex& alpha) const;
  void set_value(const MultiIndex& alpha, const Rational& v);

 private:
  std::size_t dim_;
  unsigned max_degree_;
  ValueMap values_;
};

/// Moment sequence of an atomic measure: s_alpha = sum_i w_i * point_i^alpha.
MomentSequence moments_of(const AtomicMeasure& measure, unsigned max_degree);

/// L_s(p) = sum_alpha p_alpha s_alpha. Throws when deg p exceeds the truncation.
Rational apply(const MomentSequence& s, const Polynomial& p);

/// The localized sequence g(E)s with (g(E)s)_alpha = sum_gamma g_gamma s_{alpha+gamma},
/// truncated to max_degree N - deg g. This is the d-sequence of the localized
/// functional L_g(p) = L(g p).
MomentSequence shift(const MomentSequence& s, const Polynomial& g);

}  // namespace psatz
