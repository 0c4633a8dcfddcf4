#include "psatz/multi_index.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace psatz {

unsigned MultiIndex::total_degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

bool MultiIndex::is_zero() const {
  return std::all_of(exps_.begin(), exps_.end(), [](unsigned e) { return e == 0; });
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (dimension() != other.dimension()) {
    throw std::invalid_argument("multi-index dimension mismatch");
  }
  MultiIndex sum(dimension());
  for (std::size_t i = 0; i < dimension(); ++i) sum[i] = exps_[i] + other[i];
  return sum;
}

bool grlex_less(const MultiIndex& a, const MultiIndex& b) {
  unsigned da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  // Within a degree the lexicographically larger exponent vector comes
  // first, so x1^2 precedes x1*x2 precedes x2^2.
  return std::lexicographical_compare(b.exponents().begin(), b.exponents().end(),
                                      a.exponents().begin(), a.exponents().end());
}

namespace {

void fill_degree(std::size_t dim, std::size_t pos, unsigned remaining, MultiIndex& scratch,
                 std::vector<MultiIndex>& out) {
  if (pos + 1 == dim) {
    scratch[pos] = remaining;
    out.push_back(scratch);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    scratch[pos] = e;
    fill_degree(dim, pos + 1, remaining - e, scratch, out);
  }
}

}  // namespace

std::vector<MultiIndex> monomials_up_to(std::size_t dim, unsigned max_degree) {
  if (dim == 0) throw std::invalid_argument("dimension must be positive");
  std::vector<MultiIndex> out;
  MultiIndex scratch(dim);
  for (unsigned t = 0; t <= max_degree; ++t) fill_degree(dim, 0, t, scratch, out);
  return out;
}

}  // namespace psatz
