#include "aluthge/truncation.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "aluthge/error.hpp"

namespace aluthge {

TruncatedPair truncate(const WeightDiagram& w, std::size_t level) {
  if (level < 1) throw WindowError("truncation level must be at least 1");
  TruncatedPair tp;
  tp.level = level;
  const auto n = static_cast<Eigen::Index>(tp.dimension());
  std::vector<Eigen::Triplet<double>> e1;
  std::vector<Eigen::Triplet<double>> e2;
  tp.p_diag.resize(tp.dimension());
  for (std::size_t k1 = 0; k1 <= level; ++k1) {
    for (std::size_t k2 = 0; k2 <= level; ++k2) {
      const double a = w.alpha(k1, k2);
      const double b = w.beta(k1, k2);
      const auto col = static_cast<Eigen::Index>(tp.index(k1, k2));
      if (k1 < level) e1.emplace_back(static_cast<Eigen::Index>(tp.index(k1 + 1, k2)), col, a);
      if (k2 < level) e2.emplace_back(static_cast<Eigen::Index>(tp.index(k1, k2 + 1)), col, b);
      tp.p_diag[tp.index(k1, k2)] = std::sqrt(a * a + b * b);
    }
  }
  tp.t1.resize(n, n);
  tp.t2.resize(n, n);
  tp.t1.setFromTriplets(e1.begin(), e1.end());
  tp.t2.setFromTriplets(e2.begin(), e2.end());
  return tp;
}

SparseMatrix diagonal_matrix(const std::vector<double>& d) {
  const auto n = static_cast<Eigen::Index>(d.size());
  SparseMatrix m(n, n);
  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(d.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (d[static_cast<std::size_t>(i)] != 0.0) entries.emplace_back(i, i, d[static_cast<std::size_t>(i)]);
  }
  m.setFromTriplets(entries.begin(), entries.end());
  return m;
}

double operator_norm(const SparseMatrix& m, double tol, int max_iterations) {
  if (m.nonZeros() == 0) return 0.0;
  // Deterministic start with every coordinate non-zero and pairwise distinct,
  // so it is not orthogonal to the top singular vector of a shift-like matrix.
  Eigen::VectorXd v(m.cols());
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = 1.0 + 1e-3 * static_cast<double>(i % 97);
  v.normalize();
  double estimate = 0.0;
  for (int it = 0; it < max_iterations; ++it) {
    Eigen::VectorXd mv = m * v;
    Eigen::VectorXd next = m.transpose() * mv;
    estimate = v.dot(next);  // Rayleigh quotient of M^T M
    if (estimate <= 0.0) return 0.0;
    // Eigen-residual stop: the Rayleigh quotient error is then below tol relative.
    if ((next - estimate * v).norm() <= tol * estimate) break;
    v = next / next.norm();
  }
  return std::sqrt(std::max(estimate, 0.0));
}

}  // namespace aluthge
