#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/SparseCore>

#include "aluthge/diagram.hpp"
#include "aluthge/tolerances.hpp"

namespace aluthge {

using SparseMatrix = Eigen::SparseMatrix<double>;

/// Finite section of (T1, T2) on span{e_k : k1, k2 <= level}.
/// T1 e_k = alpha_k e_{k+e1} when k1 < level, else 0; T2 likewise in k2.
struct TruncatedPair {
  std::size_t level = 0;
  SparseMatrix t1;
  SparseMatrix t2;
  /// sqrt(alpha_k^2 + beta_k^2) from the weights (not from the cut-off matrices).
  std::vector<double> p_diag;

  std::size_t dimension() const { return (level + 1) * (level + 1); }
  std::size_t index(std::size_t k1, std::size_t k2) const { return k1 * (level + 1) + k2; }
  std::size_t index(LatticePoint k) const { return index(k.k1, k.k2); }
  LatticePoint point(std::size_t i) const { return {i / (level + 1), i % (level + 1)}; }
};

/// Requires level >= 1.
TruncatedPair truncate(const WeightDiagram& w, std::size_t level);

SparseMatrix diagonal_matrix(const std::vector<double>& d);

/// Largest singular value by power iteration on M^T M.
double operator_norm(const SparseMatrix& m, double tol = kNormTolerance,
                     int max_iterations = kNormMaxIterations);

}  // namespace aluthge
