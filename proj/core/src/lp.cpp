#include "psatz/lp.hpp"

#include <stdexcept>

namespace psatz {

namespace {

// Tableau rows t[0..m-1] over columns [structural | artificial | rhs],
// plus a reduced-cost row. Bland's rule: entering column = lowest index
// with negative reduced cost; leaving row = lowest basis index among the
// minimum-ratio rows.
class Simplex {
 public:
  Simplex(const LinearProgram& lp) : n_(lp.variables.size()), m_(lp.rows.size()) {
    for (const auto& row : lp.rows) {
      if (row.size() != n_) throw std::invalid_argument("LP row width mismatch");
    }
    if (lp.rhs.size() != m_) throw std::invalid_argument("LP rhs length mismatch");
    if (lp.objective && lp.objective->size() != n_) {
      throw std::invalid_argument("LP objective length mismatch");
    }
    width_ = n_ + m_ + 1;
    t_.assign(m_, std::vector<Rational>(width_, Rational(0)));
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      bool flip = lp.rhs[i] < 0;
      for (std::size_t j = 0; j < n_; ++j) t_[i][j] = flip ? -lp.rows[i][j] : lp.rows[i][j];
      t_[i][n_ + i] = 1;
      t_[i][width_ - 1] = flip ? -lp.rhs[i] : lp.rhs[i];
      basis_[i] = n_ + i;
    }
  }

  LpSolution run(const LinearProgram& lp) {
    // Phase one: minimize the sum of artificials. Reduced costs of the
    // artificial objective relative to the artificial basis.
    cost_.assign(width_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i) cost_[n_ + i] = 1;
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < width_; ++j) cost_[j] -= t_[i][j];
    }
    iterate();
    LpSolution result;
    if (-cost_[width_ - 1] > 0) {
      result.status = LpStatus::Infeasible;
      return result;
    }
    drop_artificials();

    if (lp.objective) {
      cost_.assign(width_, Rational(0));
      for (std::size_t j = 0; j < n_; ++j) cost_[j] = (*lp.objective)[j];
      for (std::size_t i = 0; i < m_; ++i) {
        if (basis_[i] < n_) {
          Rational c = (*lp.objective)[basis_[i]];
          if (c != 0) {
            for (std::size_t j = 0; j < width_; ++j) cost_[j] -= c * t_[i][j];
          }
        }
      }
      if (!iterate()) {
        result.status = LpStatus::Unbounded;
        return result;
      }
    }

    result.status = LpStatus::Feasible;
    result.assignment.assign(n_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) result.assignment[basis_[i]] = t_[i][width_ - 1];
    }
    if (lp.objective) {
      Rational value(0);
      for (std::size_t j = 0; j < n_; ++j) value += (*lp.objective)[j] * result.assignment[j];
      result.objective_value = value;
    }
    return result;
  }

 private:
  // Bland loop over the structural columns (artificials start basic and
  // never re-enter). Returns false when the objective is unbounded below.
  bool iterate() {
    while (true) {
      std::size_t entering = width_;
      for (std::size_t j = 0; j < n_; ++j) {
        if (cost_[j] < 0) {
          entering = j;
          break;
        }
      }
      if (entering == width_) return true;

      std::size_t leaving = m_;
      for (std::size_t i = 0; i < m_; ++i) {
        if (t_[i][entering] <= 0) continue;
        if (leaving == m_) {
          leaving = i;
          continue;
        }
        Rational lhs = t_[i][width_ - 1] * t_[leaving][entering];
        Rational rhs = t_[leaving][width_ - 1] * t_[i][entering];
        if (lhs < rhs || (lhs == rhs && basis_[i] < basis_[leaving])) leaving = i;
      }
      if (leaving == m_) return false;
      pivot(leaving, entering);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    Rational p = t_[row][col];
    for (auto& v : t_[row]) v /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row || t_[i][col] == 0) continue;
      Rational factor = t_[i][col];
      for (std::size_t j = 0; j < width_; ++j) t_[i][j] -= factor * t_[row][j];
    }
    if (cost_[col] != 0) {
      Rational factor = cost_[col];
      for (std::size_t j = 0; j < width_; ++j) cost_[j] -= factor * t_[row][j];
    }
    basis_[row] = col;
  }

  // After phase one any artificial still basic sits at zero; pivot it out
  // on a structural column or drop the (redundant) row.
  void drop_artificials() {
    for (std::size_t i = 0; i < m_;) {
      if (basis_[i] < n_) {
        ++i;
        continue;
      }
      std::size_t col = n_;
      for (std::size_t j = 0; j < n_; ++j) {
        if (t_[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col < n_) {
        pivot(i, col);
        ++i;
      } else {
        t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        --m_;
      }
    }
  }

  std::size_t n_, m_, width_;
  std::vector<std::vector<Rational>> t_;
  std::vector<Rational> cost_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpSolution lp_solve(const LinearProgram& lp) { return Simplex(lp).run(lp); }

}  // namespace psatz
