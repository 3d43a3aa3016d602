#include "dihedra/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dihedra {
namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) sum += a[i * n + j] * a[i * n + j];
  }
  return std::sqrt(2.0 * sum);
}

// Applies the rotation that annihilates a[p][q] (Rutishauser's update).
void rotate(std::vector<double>& a, std::size_t n, std::size_t p, std::size_t q) {
  const double apq = a[p * n + q];
  const double app = a[p * n + p];
  const double aqq = a[q * n + q];
  const double theta = (aqq - app) / (2.0 * apq);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const double tau = s / (1.0 + c);

  // Rows p and q are updated contiguously, then mirrored into the columns.
  double* row_p = &a[p * n];
  double* row_q = &a[q * n];
  row_p[p] = row_p[q] = row_q[p] = row_q[q] = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double akp = row_p[k];
    const double akq = row_q[k];
    row_p[k] = akp - s * (akq + tau * akp);
    row_q[k] = akq + s * (akp - tau * akq);
  }
  row_p[p] = app - t * apq;
  row_q[q] = aqq + t * apq;
  for (std::size_t k = 0; k < n; ++k) {
    a[k * n + p] = row_p[k];
    a[k * n + q] = row_q[k];
  }
}

}  // namespace

std::vector<double> jacobi_eigenvalues(std::span<const double> matrix,
                                       std::size_t n,
                                       const JacobiOptions& options) {
  if (matrix.size() != n * n) {
    throw std::invalid_argument("jacobi_eigenvalues: matrix is not N x N");
  }
  std::vector<double> a(matrix.begin(), matrix.end());

  for (int sweep = 0; off_diagonal_norm(a, n) >= options.off_diagonal_tolerance;
       ++sweep) {
    if (sweep >= options.max_sweeps) {
      throw std::runtime_error("jacobi_eigenvalues: no convergence");
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        // Entries that no longer register against both diagonal terms are
        // dropped instead of rotated.
        const double g = 100.0 * std::abs(apq);
        if (sweep > 3 && std::abs(a[p * n + p]) + g == std::abs(a[p * n + p]) &&
            std::abs(a[q * n + q]) + g == std::abs(a[q * n + q])) {
          a[p * n + q] = 0.0;
          a[q * n + p] = 0.0;
          continue;
        }
        rotate(a, n, p, q);
      }
    }
  }

  std::vector<double> eigenvalues(n);
  for (std::size_t i = 0; i < n; ++i) eigenvalues[i] = a[i * n + i];
  std::sort(eigenvalues.begin(), eigenvalues.end());
  return eigenvalues;
}

}  // namespace dihedra
