#include "psatz/moment_sequence.hpp"

#include <stdexcept>

namespace psatz {

void AtomicMeasure::validate() const {
  for (const auto& atom : atoms) {
    if (atom.point.size() != dimension) {
      throw std::invalid_argument("atom point length does not match dimension");
    }
    if (atom.weight <= 0) throw std::invalid_argument("atom weights must be positive");
  }
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t j = i + 1; j < atoms.size(); ++j) {
      if (atoms[i].point == atoms[j].point) {
        throw std::invalid_argument("atom points must be pairwise distinct");
      }
    }
  }
}

MomentSequence::MomentSequence(std::size_t dim, unsigned max_degree)
    : dim_(dim), max_degree_(max_degree) {
  if (dim_ == 0) throw std::invalid_argument("moment sequence dimension must be positive");
  for (const auto& alpha : monomials_up_to(dim_, max_degree_)) {
    values_.emplace(alpha, Rational(0));
  }
}

MomentSequence MomentSequence::from_values(std::size_t dim, unsigned max_degree,
                                           ValueMap values) {
  MomentSequence s(dim, max_degree);
  for (auto& [alpha, v] : values) {
    if (alpha.dimension() != dim || alpha.total_degree() > max_degree) {
      throw std::invalid_argument("moment value outside the truncation");
    }
    s.values_[alpha] = v;
  }
  if (values.size() != s.values_.size()) {
    throw std::invalid_argument("moment values must cover every |alpha| <= max_degree");
  }
  return s;
}

const Rational& MomentSequence::value(const MultiIndex& alpha) const {
  auto it = values_.find(alpha);
  if (it == values_.end()) {
    throw std::out_of_range("moment index beyond truncation: |alpha| > " +
                            std::to_string(max_degree_));
  }
  return it->second;
}

void MomentSequence::set_value(const MultiIndex& alpha, const Rational& v) {
  auto it = values_.find(alpha);
  if (it == values_.end()) {
    throw std::out_of_range("moment index beyond truncation");
  }
  it->second = v;
}

MomentSequence moments_of(const AtomicMeasure& measure, unsigned max_degree) {
  measure.validate();
  std::size_t dim = measure.dimension;
  MomentSequence s(dim, max_degree);
  for (const auto& alpha : monomials_up_to(dim, max_degree)) {
    Rational total(0);
    for (const auto& atom : measure.atoms) {
      Rational value = atom.weight;
      for (std::size_t i = 0; i < dim; ++i) {
        for (unsigned e = 0; e < alpha[i]; ++e) value *= atom.point[i];
      }
      total += value;
    }
    s.set_value(alpha, total);
  }
  return s;
}

Rational apply(const MomentSequence& s, const Polynomial& p) {
  if (p.dimension() != s.dimension()) {
    throw std::invalid_argument("polynomial dimension does not match sequence");
  }
  if (p.total_degree() > static_cast<int>(s.max_degree())) {
    throw std::invalid_argument("polynomial degree exceeds the truncation");
  }
  Rational sum(0);
  for (const auto& [alpha, c] : p.terms()) sum += c * s.value(alpha);
  return sum;
}

MomentSequence shift(const MomentSequence& s, const Polynomial& g) {
  if (g.dimension() != s.dimension()) {
    throw std::invalid_argument("localizer dimension does not match sequence");
  }
  int deg = g.total_degree();
  if (deg > static_cast<int>(s.max_degree())) {
    throw std::invalid_argument("localizer degree exceeds the truncation");
  }
  unsigned new_degree = s.max_degree() - static_cast<unsigned>(std::max(deg, 0));
  MomentSequence out(s.dimension(), new_degree);
  for (const auto& alpha : monomials_up_to(s.dimension(), new_degree)) {
    Rational value(0);
    for (const auto& [gamma, c] : g.terms()) value += c * s.value(alpha + gamma);
    out.set_value(alpha, value);
  }
  return out;
}

}  // namespace psatz
