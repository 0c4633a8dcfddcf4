#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace psatz {

/// Exponent vector of a monomial in d variables.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t dim) : exps_(dim, 0u) {}
  MultiIndex(std::initializer_list<unsigned> exps) : exps_(exps) {}
  explicit MultiIndex(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

  std::size_t dimension() const { return exps_.size(); }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<unsigned>& exponents() const { return exps_; }

  unsigned total_degree() const;
  bool is_zero() const;

  /// Componentwise sum. Throws std::invalid_argument on dimension mismatch.
  MultiIndex operator+(const MultiIndex& other) const;

  bool operator==(const MultiIndex&) const = default;

 private:
  std::vector<unsigned> exps_;
};

/// Graded lexicographic order: lower total degree first; within a degree,
/// earlier variables sort first (1, x1, x2, x1^2, x1*x2, x2^2, ...).
bool grlex_less(const MultiIndex& a, const MultiIndex& b);

struct GrlexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    return grlex_less(a, b);
  }
};

/// All monomials of the given dimension with total degree <= max_degree,
/// listed in graded-lex order. The constant monomial comes first.
std::vector<MultiIndex> monomials_up_to(std::size_t dim, unsigned max_degree);

}  // namespace psatz
