#include "psatz/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace psatz {

namespace {

double off_diagonal_norm(const std::vector<std::vector<double>>& a) {
  double sum = 0.0;
  for (std::size_t p = 0; p < a.size(); ++p) {
    for (std::size_t q = p + 1; q < a.size(); ++q) sum += 2.0 * a[p][q] * a[p][q];
  }
  return std::sqrt(sum);
}

double frobenius_norm(const std::vector<std::vector<double>>& a) {
  double sum = 0.0;
  for (const auto& row : a) {
    for (double v : row) sum += v * v;
  }
  return std::sqrt(sum);
}

}  // namespace

SymmetricEigen jacobi_eigen(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;

  const double norm = frobenius_norm(a);
  constexpr int kMaxSweeps = 100;
  if (norm > 0.0) {
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
      if (off_diagonal_norm(a) < 1e-14 * norm) break;
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
          double apq = a[p][q];
          if (std::abs(apq) <= 1e-300) continue;
          double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
          double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          double c = 1.0 / std::sqrt(t * t + 1.0);
          double s = t * c;
          double tau = s / (1.0 + c);

          double app = a[p][p], aqq = a[q][q];
          a[p][p] = app - t * apq;
          a[q][q] = aqq + t * apq;
          a[p][q] = a[q][p] = 0.0;
          for (std::size_t r = 0; r < n; ++r) {
            if (r != p && r != q) {
              double arp = a[r][p], arq = a[r][q];
              a[r][p] = a[p][r] = arp - s * (arq + tau * arp);
              a[r][q] = a[q][r] = arq + s * (arp - tau * arq);
            }
            double vrp = v[r][p], vrq = v[r][q];
            v[r][p] = vrp - s * (vrq + tau * vrp);
            v[r][q] = vrq + s * (vrp - tau * vrq);
          }
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a[i][i] < a[j][j]; });

  SymmetricEigen result;
  result.eigenvalues.resize(n);
  result.eigenvectors.assign(n, std::vector<double>(n));
  for (std::size_t k = 0; k < n; ++k) {
    result.eigenvalues[k] = a[order[k]][order[k]];
    for (std::size_t r = 0; r < n; ++r) result.eigenvectors[k][r] = v[r][order[k]];
  }
  return result;
}

double spectral_norm(const std::vector<std::vector<double>>& a) {
  if (a.empty()) return 0.0;
  auto eig = jacobi_eigen(a);
  double norm = 0.0;
  for (double w : eig.eigenvalues) norm = std::max(norm, std::abs(w));
  return norm;
}

}  // namespace psatz
