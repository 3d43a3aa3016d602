#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace dihedra {

struct JacobiOptions {
  double off_diagonal_tolerance = 1e-12;  // Frobenius norm of the off-diagonal
  int max_sweeps = 100;
};

/// Eigenvalues of a real symmetric N x N matrix (row-major) by cyclic Jacobi
/// rotations, sorted ascending. Sweeps visit (p, q) pairs in row order, so
/// the result is deterministic. Throws std::invalid_argument for a
/// non-square input and std::runtime_error if max_sweeps is exhausted.
std::vector<double> jacobi_eigenvalues(std::span<const double> matrix,
                                       std::size_t dimension,
                                       const JacobiOptions& options = {});

}  // namespace dihedra
