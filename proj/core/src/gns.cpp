#include "psatz/gns.hpp"

#include <algorithm>
#include <cmath>

#include "psatz/jacobi.hpp"

namespace psatz {

namespace {

using Matrix = std::vector<std::vector<double>>;

Matrix to_doubles(const std::vector<std::vector<Rational>>& m) {
  Matrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    out[i].resize(m[i].size());
    for (std::size_t j = 0; j < m[i].size(); ++j) out[i][j] = to_double(m[i][j]);
  }
  return out;
}

std::size_t numerical_rank(const std::vector<double>& eigenvalues, double tol) {
  double largest = eigenvalues.empty() ? 0.0 : eigenvalues.back();
  if (largest <= 0.0) return 0;
  std::size_t rank = 0;
  for (double w : eigenvalues) {
    if (w > tol * largest) ++rank;
  }
  return rank;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t rows = a.size();
  const std::size_t inner = b.size();
  const std::size_t cols = inner == 0 ? 0 : b[0].size();
  Matrix out(rows, std::vector<double>(cols, 0.0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      double aik = a[i][k];
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += aik * b[k][j];
    }
  }
  return out;
}

// Deterministic uniform draw in [1/2, 1); independent of the standard
// library's distribution implementation.
double next_coefficient(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  z ^= z >> 31;
  return 0.5 + 0.5 * static_cast<double>(z >> 11) * 0x1.0p-53;
}

}  // namespace

GramNotPsdError::GramNotPsdError(double eigenvalue, std::vector<double> witness)
    : std::runtime_error("gram matrix is not positive semidefinite (eigenvalue " +
                         std::to_string(eigenvalue) + ")"),
      eigenvalue_(eigenvalue),
      witness_(std::move(witness)) {}

GnsModel gns_build(const MomentSequence& s, unsigned level, double tol) {
  if (2 * level + 1 > s.max_degree()) {
    throw std::invalid_argument("truncation insufficient: need 2*level + 1 <= max_degree");
  }
  GnsModel model;
  model.dimension = s.dimension();
  model.level = level;
  model.basis = monomials_up_to(s.dimension(), level);
  const std::size_t n = model.basis.size();

  model.gram.assign(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Rational& v = s.value(model.basis[i] + model.basis[j]);
      model.gram[i][j] = v;
      model.gram[j][i] = v;
    }
  }

  auto eig = jacobi_eigen(to_doubles(model.gram));
  double norm = 0.0;
  for (double w : eig.eigenvalues) norm = std::max(norm, std::abs(w));
  if (!eig.eigenvalues.empty() && eig.eigenvalues.front() < -tol * norm) {
    throw GramNotPsdError(eig.eigenvalues.front(), eig.eigenvectors.front());
  }
  model.rank = numerical_rank(eig.eigenvalues, tol);

  // Columns of P: kept eigenvectors scaled by 1/sqrt(eigenvalue), largest
  // eigenvalue first, so that P^T G P = I on the quotient.
  const std::size_t r = model.rank;
  model.compression.assign(n, std::vector<double>(r, 0.0));
  for (std::size_t c = 0; c < r; ++c) {
    std::size_t idx = eig.eigenvalues.size() - 1 - c;
    double scale = 1.0 / std::sqrt(eig.eigenvalues[idx]);
    for (std::size_t row = 0; row < n; ++row) {
      model.compression[row][c] = scale * eig.eigenvectors[idx][row];
    }
  }

  Matrix gram_d = to_doubles(model.gram);
  model.coordinates.assign(r, std::vector<double>(n, 0.0));
  for (std::size_t c = 0; c < r; ++c) {
    for (std::size_t j = 0; j < n; ++j) {
      double sum = 0.0;
      for (std::size_t i = 0; i < n; ++i) sum += model.compression[i][c] * gram_d[i][j];
      model.coordinates[c][j] = sum;
    }
  }
  model.unit.assign(r, 0.0);
  for (std::size_t c = 0; c < r; ++c) model.unit[c] = model.coordinates[c][0];

  for (std::size_t axis = 0; axis < model.dimension; ++axis) {
    MultiIndex shift_index(model.dimension);
    shift_index[axis] = 1;
    Matrix shifted(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        double v = to_double(s.value(model.basis[i] + model.basis[j] + shift_index));
        shifted[i][j] = v;
        shifted[j][i] = v;
      }
    }
    // X = P^T S P, symmetrized against round-off.
    Matrix x(r, std::vector<double>(r, 0.0));
    Matrix sp = multiply(shifted, model.compression);
    for (std::size_t a = 0; a < r; ++a) {
      for (std::size_t b = 0; b < r; ++b) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) sum += model.compression[i][a] * sp[i][b];
        x[a][b] = sum;
      }
    }
    for (std::size_t a = 0; a < r; ++a) {
      for (std::size_t b = a + 1; b < r; ++b) {
        double mean = 0.5 * (x[a][b] + x[b][a]);
        x[a][b] = mean;
        x[b][a] = mean;
      }
    }
    model.mult.push_back(std::move(x));
  }

  if (level == 0) {
    model.flat = model.rank <= 1;
  } else {
    std::size_t sub = monomials_up_to(model.dimension, level - 1).size();
    std::vector<std::vector<Rational>> block(sub, std::vector<Rational>(sub));
    for (std::size_t i = 0; i < sub; ++i) {
      for (std::size_t j = 0; j < sub; ++j) block[i][j] = model.gram[i][j];
    }
    auto sub_eig = jacobi_eigen(to_doubles(block));
    model.flat = numerical_rank(sub_eig.eigenvalues, tol) == model.rank;
  }

  MomentSequence truncated(s.dimension(), 2 * level);
  for (const auto& alpha : monomials_up_to(s.dimension(), 2 * level)) {
    truncated.set_value(alpha, s.value(alpha));
  }
  model.moments = std::move(truncated);
  return model;
}

CommutationReport check_commutation(const GnsModel& m, double tol) {
  CommutationReport report;
  for (std::size_t j = 0; j < m.mult.size(); ++j) {
    for (std::size_t k = j + 1; k < m.mult.size(); ++k) {
      Matrix jk = multiply(m.mult[j], m.mult[k]);
      Matrix kj = multiply(m.mult[k], m.mult[j]);
      for (std::size_t a = 0; a < jk.size(); ++a) {
        for (std::size_t b = 0; b < jk.size(); ++b) {
          report.max_defect = std::max(report.max_defect, std::abs(jk[a][b] - kj[a][b]));
        }
      }
    }
  }
  report.within_tol = report.max_defect <= tol;
  return report;
}

ExtractionResult gns_extract(const GnsModel& m, double tol, std::uint64_t seed) {
  auto commutation = check_commutation(m, tol);
  if (!commutation.within_tol) {
    throw std::runtime_error("multiplication matrices do not commute within tolerance (defect " +
                             std::to_string(commutation.max_defect) +
                             "); the model is not flat enough for extraction");
  }

  ExtractionResult result;
  result.flat = m.flat;
  result.commutation_defect = commutation.max_defect;
  result.measure.dimension = m.dimension;

  const std::size_t r = m.rank;
  std::vector<std::vector<double>> raw_atoms;
  std::vector<double> raw_weights;
  if (r > 0) {
    std::uint64_t state = seed;
    SymmetricEigen eig;
    bool separated = false;
    for (int attempt = 0; attempt < 4 && !separated; ++attempt) {
      Matrix y(r, std::vector<double>(r, 0.0));
      for (std::size_t axis = 0; axis < m.dimension; ++axis) {
        double c = next_coefficient(state);
        for (std::size_t a = 0; a < r; ++a) {
          for (std::size_t b = 0; b < r; ++b) y[a][b] += c * m.mult[axis][a][b];
        }
      }
      eig = jacobi_eigen(std::move(y));
      double norm = 0.0;
      for (double w : eig.eigenvalues) norm = std::max(norm, std::abs(w));
      separated = true;
      for (std::size_t i = 0; i + 1 < r; ++i) {
        if (eig.eigenvalues[i + 1] - eig.eigenvalues[i] < 1e-8 * norm) {
          separated = false;
          break;
        }
      }
    }
    if (!separated) {
      throw std::runtime_error("repeated eigenvalue collision after 3 reseeds");
    }

    for (std::size_t i = 0; i < r; ++i) {
      const auto& v = eig.eigenvectors[i];
      double dot = 0.0;
      for (std::size_t c = 0; c < r; ++c) dot += v[c] * m.unit[c];
      double weight = dot * dot;
      if (weight < tol) continue;
      std::vector<double> point(m.dimension, 0.0);
      for (std::size_t axis = 0; axis < m.dimension; ++axis) {
        double value = 0.0;
        for (std::size_t a = 0; a < r; ++a) {
          double va = v[a];
          if (va == 0.0) continue;
          for (std::size_t b = 0; b < r; ++b) value += va * m.mult[axis][a][b] * v[b];
        }
        point[axis] = value;
      }
      raw_atoms.push_back(std::move(point));
      raw_weights.push_back(weight);
    }
  }

  for (std::size_t i = 0; i < raw_atoms.size(); ++i) {
    AtomicMeasure::Atom atom;
    atom.weight = rational_from_double(raw_weights[i]);
    for (double coord : raw_atoms[i]) atom.point.push_back(rational_from_double(coord));
    result.measure.atoms.push_back(std::move(atom));
  }

  double residual = 0.0;
  for (const auto& [alpha, value] : m.moments.values()) {
    double recomputed = 0.0;
    for (std::size_t i = 0; i < raw_atoms.size(); ++i) {
      double term = raw_weights[i];
      for (std::size_t axis = 0; axis < m.dimension; ++axis) {
        for (unsigned e = 0; e < alpha[axis]; ++e) term *= raw_atoms[i][axis];
      }
      recomputed += term;
    }
    residual = std::max(residual, std::abs(recomputed - to_double(value)));
  }
  result.residual = residual;
  return result;
}

RepresentationReport verify_representation(const ExtractionResult& r, const MomentSequence& s,
                                           unsigned degree) {
  if (degree > s.max_degree()) {
    throw std::invalid_argument("comparison degree exceeds the truncation");
  }
  if (r.measure.dimension != s.dimension()) {
    throw std::invalid_argument("measure dimension does not match sequence");
  }
  RepresentationReport report;
  report.worst = MultiIndex(s.dimension());
  for (const auto& alpha : monomials_up_to(s.dimension(), degree)) {
    Rational recomputed(0);
    for (const auto& atom : r.measure.atoms) {
      Rational term = atom.weight;
      for (std::size_t axis = 0; axis < s.dimension(); ++axis) {
        for (unsigned e = 0; e < alpha[axis]; ++e) term *= atom.point[axis];
      }
      recomputed += term;
    }
    Rational diff = recomputed - s.value(alpha);
    double mismatch = std::abs(to_double(diff));
    if (mismatch > report.max_mismatch) {
      report.max_mismatch = mismatch;
      report.worst = alpha;
    }
  }
  return report;
}

}  // namespace psatz
