#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "aluthge/diagram.hpp"
#include "aluthge/one_var.hpp"
#include "aluthge/tolerances.hpp"

namespace aluthge {

struct PsdVerdict {
  bool is_psd = false;
  double min_eigenvalue = 0.0;
  double tolerance = kPsdTolerance;
  std::size_t dimension = 0;
  double norm = 0.0;  // spectral norm, max |eigenvalue|
};

/// Symmetric eigensolver verdict: PSD iff min eigenvalue >= -tol * max(1, ||M||).
/// Throws ShapeError for non-square or non-symmetric input.
PsdVerdict psd_check(const Eigen::MatrixXd& m, double tol = kPsdTolerance);

struct SixPointResult {
  Eigen::Matrix2d matrix;
  PsdVerdict verdict;
};

/// M(k) = [[a_{k+e1}^2 - a_k^2, a_{k+e2} b_{k+e1} - a_k b_k],
///         [a_{k+e2} b_{k+e1} - a_k b_k, b_{k+e2}^2 - b_k^2]].
SixPointResult six_point_test(const WeightDiagram& w, LatticePoint k,
                              double tol = kPsdTolerance);

struct Witness {
  LatticePoint at{};
  Eigen::MatrixXd matrix;
  double min_eigenvalue = 0.0;
};

struct HypoReport {
  std::pair<bool, bool> componentwise{false, false};
  bool joint = false;
  double joint_min_eigenvalue = 0.0;
  std::map<int, bool> k_hypo;
  std::map<int, double> k_min_eigenvalue;
  std::optional<Witness> worst_witness;
};

enum class CrossCheck { None, Operator };

/// Six-point scan over k in [0,level]^2. With CrossCheck::Operator the order-1
/// block commutator of the truncated pair is compressed onto exactly the vectors
/// the scan covers and its verdict must agree (InternalConsistencyError otherwise).
HypoReport joint_hyponormal(const WeightDiagram& w, std::size_t level,
                            CrossCheck check = CrossCheck::Operator,
                            double tol = kPsdTolerance);

/// Multi-indices p with 1 <= |p| <= k, graded, then p1 descending.
std::vector<std::pair<std::size_t, std::size_t>> multi_indices(int k);

struct KHypoResult {
  bool holds = false;
  PsdVerdict verdict;
};

/// ([(T^q)*, T^p])_{1<=|p|,|q|<=k} on a level-N truncation, compressed to basis
/// vectors with k1, k2 <= N - (2k + 1). Requires N >= 4k + 2 (WindowError).
/// A smaller interior bound can be passed so that tests of several orders share
/// one interior; the order-(k-1) matrix is then a principal submatrix.
KHypoResult k_hyponormal(const WeightDiagram& w, int k, std::size_t level,
                         double tol = kPsdTolerance,
                         std::optional<std::size_t> interior = std::nullopt);

struct OneVarHypoResult {
  bool holds = false;
  double min_eigenvalue = 0.0;  // of the normalised Hankel matrices
  std::size_t worst_n = 0;
};

/// Hankel test: (gamma_{n+i+j})_{0<=i,j<=k} PSD for 0 <= n <= nmax. Each matrix
/// is congruence-scaled by diag(gamma_{n+2i})^{-1/2} before the eigen solve.
OneVarHypoResult one_var_k_hyponormal(const OneVarWeights& omega, int k, std::size_t nmax,
                                      double tol = kPsdTolerance);

/// ([(T^j)*, T^i])_{1<=i,j<=k} of the 1-variable shift truncated at level,
/// compressed to indices <= level - (2k + 1).
PsdVerdict one_var_operator_k_hyponormal(const OneVarWeights& omega, int k, std::size_t level,
                                         double tol = kPsdTolerance);

/// (alpha nondecreasing in k1, beta nondecreasing in k2) on [0,level]^2.
std::pair<bool, bool> componentwise_hyponormal(const WeightDiagram& w, std::size_t level);

/// Componentwise, joint (level), and k-hyponormality for k = 1..max_k on one
/// truncation of level max(level, 4 max_k + 2) with the interior of order max_k.
/// The hierarchy k => k-1 is asserted.
HypoReport hypo_report(const WeightDiagram& w, int max_k, std::size_t level,
                       double tol = kPsdTolerance);

}  // namespace aluthge
