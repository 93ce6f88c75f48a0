#include "aluthge/positivity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "aluthge/error.hpp"
#include "aluthge/truncation.hpp"

namespace aluthge {
namespace {

SparseMatrix sparse_power(const SparseMatrix& t, std::size_t e) {
  SparseMatrix out(t.rows(), t.cols());
  out.setIdentity();
  for (std::size_t i = 0; i < e; ++i) out = SparseMatrix(t * out);
  return out;
}

// [A*, B] = A^T B - B A^T for real matrices.
SparseMatrix commutator_with_adjoint(const SparseMatrix& a, const SparseMatrix& b) {
  return SparseMatrix(a.transpose() * b) - SparseMatrix(b * a.transpose());
}

// Copies block rows/cols selected by row_pos/col_pos (-1 = dropped) into dense m.
void scatter(const SparseMatrix& block, const std::vector<Eigen::Index>& row_pos,
             const std::vector<Eigen::Index>& col_pos, Eigen::Index row_off,
             Eigen::Index col_off, Eigen::MatrixXd& m) {
  for (int outer = 0; outer < block.outerSize(); ++outer) {
    for (SparseMatrix::InnerIterator it(block, outer); it; ++it) {
      const auto r = row_pos[static_cast<std::size_t>(it.row())];
      const auto c = col_pos[static_cast<std::size_t>(it.col())];
      if (r >= 0 && c >= 0) m(row_off + r, col_off + c) += it.value();
    }
  }
}

// Index map onto the lattice box [0,max1] x [0,max2] of a level-L truncation.
std::vector<Eigen::Index> box_positions(const TruncatedPair& tp, std::size_t max1,
                                        std::size_t max2, Eigen::Index& count) {
  std::vector<Eigen::Index> pos(tp.dimension(), -1);
  count = 0;
  for (std::size_t i = 0; i < tp.dimension(); ++i) {
    const auto k = tp.point(i);
    if (k.k1 <= max1 && k.k2 <= max2) pos[i] = count++;
  }
  return pos;
}

}  // namespace

PsdVerdict psd_check(const Eigen::MatrixXd& m, double tol) {
  if (m.rows() != m.cols()) throw ShapeError("psd_check: matrix is not square");
  PsdVerdict v;
  v.tolerance = tol;
  v.dimension = static_cast<std::size_t>(m.rows());
  if (m.size() == 0) {
    v.is_psd = true;
    return v;
  }
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw ShapeError("psd_check: matrix is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  v.min_eigenvalue = ev.minCoeff();
  v.norm = std::max(std::abs(ev.minCoeff()), std::abs(ev.maxCoeff()));
  v.is_psd = v.min_eigenvalue >= -tol * std::max(1.0, v.norm);
  return v;
}

SixPointResult six_point_test(const WeightDiagram& w, LatticePoint k, double tol) {
  const double a = w.alpha(k);
  const double b = w.beta(k);
  const double a1 = w.alpha(k.shifted1());
  const double a2 = w.alpha(k.shifted2());
  const double b1 = w.beta(k.shifted1());
  const double b2 = w.beta(k.shifted2());
  SixPointResult r;
  const double off = a2 * b1 - a * b;
  r.matrix << a1 * a1 - a * a, off, off, b2 * b2 - b * b;
  r.verdict = psd_check(r.matrix, tol);
  return r;
}

HypoReport joint_hyponormal(const WeightDiagram& w, std::size_t level, CrossCheck check,
                            double tol) {
  HypoReport report;
  report.componentwise = componentwise_hyponormal(w, level);
  report.joint = true;
  report.joint_min_eigenvalue = std::numeric_limits<double>::infinity();
  for (std::size_t k1 = 0; k1 <= level; ++k1) {
    for (std::size_t k2 = 0; k2 <= level; ++k2) {
      const auto r = six_point_test(w, {k1, k2}, tol);
      if (!r.verdict.is_psd) report.joint = false;
      if (r.verdict.min_eigenvalue < report.joint_min_eigenvalue) {
        report.joint_min_eigenvalue = r.verdict.min_eigenvalue;
        report.worst_witness = Witness{{k1, k2}, r.matrix, r.verdict.min_eigenvalue};
      }
    }
  }
  if (report.joint && !(report.componentwise.first && report.componentwise.second)) {
    throw InternalConsistencyError("joint hyponormality without componentwise hyponormality");
  }

  if (check == CrossCheck::Operator) {
    // T1-component vectors e_m, m in [0,level+1] x [0,level]; T2-component
    // e_m, m in [0,level] x [0,level+1]. Together they are exactly the pairs
    // (e_{k+e1}, e_{k+e2}) for k in [0,level]^2 plus decoupled boundary vectors.
    const TruncatedPair tp = truncate(w, level + 2);
    Eigen::Index n1 = 0;
    Eigen::Index n2 = 0;
    const auto pos1 = box_positions(tp, level + 1, level, n1);
    const auto pos2 = box_positions(tp, level, level + 1, n2);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n1 + n2, n1 + n2);
    // Entry (i,j) of the block matrix is [T_j*, T_i].
    scatter(commutator_with_adjoint(tp.t1, tp.t1), pos1, pos1, 0, 0, m);
    scatter(commutator_with_adjoint(tp.t2, tp.t1), pos1, pos2, 0, n1, m);
    scatter(commutator_with_adjoint(tp.t1, tp.t2), pos2, pos1, n1, 0, m);
    scatter(commutator_with_adjoint(tp.t2, tp.t2), pos2, pos2, n1, n1, m);
    const auto op = psd_check(m, tol);
    if (op.is_psd != report.joint) {
      std::ostringstream os;
      os << "joint hyponormality: six-point scan says " << report.joint
         << " (min eigenvalue " << report.joint_min_eigenvalue
         << "), operator-level test says " << op.is_psd << " (min eigenvalue "
         << op.min_eigenvalue << ")";
      throw InternalConsistencyError(os.str());
    }
  }
  report.k_hypo[1] = report.joint;
  report.k_min_eigenvalue[1] = report.joint_min_eigenvalue;
  return report;
}

std::vector<std::pair<std::size_t, std::size_t>> multi_indices(int k) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (int d = 1; d <= k; ++d) {
    for (int p1 = d; p1 >= 0; --p1) {
      out.emplace_back(static_cast<std::size_t>(p1), static_cast<std::size_t>(d - p1));
    }
  }
  return out;
}

KHypoResult k_hyponormal(const WeightDiagram& w, int k, std::size_t level, double tol,
                         std::optional<std::size_t> interior) {
  if (k < 1) throw DomainError("k_hyponormal: k must be at least 1");
  const auto uk = static_cast<std::size_t>(k);
  if (level < 4 * uk + 2) {
    std::ostringstream os;
    os << "k_hyponormal: level " << level << " is below 4k + 2 = " << 4 * uk + 2;
    throw WindowError(os.str());
  }
  const TruncatedPair tp = truncate(w, level);
  std::size_t margin = level - (2 * uk + 1);
  if (interior) {
    if (*interior > margin) throw WindowError("k_hyponormal: interior exceeds level - (2k + 1)");
    margin = *interior;
  }
  Eigen::Index ni = 0;
  const auto pos = box_positions(tp, margin, margin, ni);

  std::vector<SparseMatrix> p1(uk + 1), p2(uk + 1);
  for (std::size_t e = 0; e <= uk; ++e) {
    p1[e] = sparse_power(tp.t1, e);
    p2[e] = sparse_power(tp.t2, e);
  }
  const auto idx = multi_indices(k);
  std::vector<SparseMatrix> mono;
  mono.reserve(idx.size());
  for (auto [a, b] : idx) mono.push_back(SparseMatrix(p1[a] * p2[b]));

  const auto blocks = static_cast<Eigen::Index>(idx.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(blocks * ni, blocks * ni);
  for (Eigen::Index p = 0; p < blocks; ++p) {
    for (Eigen::Index q = 0; q < blocks; ++q) {
      scatter(commutator_with_adjoint(mono[static_cast<std::size_t>(q)],
                                      mono[static_cast<std::size_t>(p)]),
              pos, pos, p * ni, q * ni, m);
    }
  }
  KHypoResult r;
  r.verdict = psd_check(m, tol);
  r.holds = r.verdict.is_psd;
  return r;
}

OneVarHypoResult one_var_k_hyponormal(const OneVarWeights& omega, int k, std::size_t nmax,
                                      double tol) {
  if (k < 1) throw DomainError("one_var_k_hyponormal: k must be at least 1");
  const auto uk = static_cast<std::size_t>(k);
  const auto gamma = one_var_moments(omega, nmax + 2 * uk);
  OneVarHypoResult r;
  r.holds = true;
  r.min_eigenvalue = std::numeric_limits<double>::infinity();
  for (std::size_t n = 0; n <= nmax; ++n) {
    Eigen::MatrixXd h(k + 1, k + 1);
    for (std::size_t i = 0; i <= uk; ++i) {
      for (std::size_t j = 0; j <= uk; ++j) {
        h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            gamma[n + i + j] / std::sqrt(gamma[n + 2 * i] * gamma[n + 2 * j]);
      }
    }
    const auto v = psd_check(h, tol);
    if (v.min_eigenvalue < r.min_eigenvalue) {
      r.min_eigenvalue = v.min_eigenvalue;
      r.worst_n = n;
    }
    if (!v.is_psd) r.holds = false;
  }
  return r;
}

PsdVerdict one_var_operator_k_hyponormal(const OneVarWeights& omega, int k, std::size_t level,
                                         double tol) {
  if (k < 1) throw DomainError("k must be at least 1");
  const auto uk = static_cast<std::size_t>(k);
  if (level < 4 * uk + 2) throw WindowError("one-variable operator test needs level >= 4k + 2");
  const auto n = static_cast<Eigen::Index>(level + 1);
  SparseMatrix s(n, n);
  std::vector<Eigen::Triplet<double>> e;
  for (std::size_t j = 0; j < level; ++j) {
    e.emplace_back(static_cast<Eigen::Index>(j + 1), static_cast<Eigen::Index>(j), omega(j));
  }
  s.setFromTriplets(e.begin(), e.end());
  const std::size_t margin = level - (2 * uk + 1);
  std::vector<Eigen::Index> pos(level + 1, -1);
  for (std::size_t j = 0; j <= margin; ++j) pos[j] = static_cast<Eigen::Index>(j);
  const auto ni = static_cast<Eigen::Index>(margin + 1);
  std::vector<SparseMatrix> pw(uk + 1);
  for (std::size_t i = 0; i <= uk; ++i) pw[i] = sparse_power(s, i);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(k * ni, k * ni);
  for (std::size_t i = 1; i <= uk; ++i) {
    for (std::size_t j = 1; j <= uk; ++j) {
      scatter(commutator_with_adjoint(pw[j], pw[i]), pos, pos,
              static_cast<Eigen::Index>(i - 1) * ni, static_cast<Eigen::Index>(j - 1) * ni, m);
    }
  }
  return psd_check(m, tol);
}

std::pair<bool, bool> componentwise_hyponormal(const WeightDiagram& w, std::size_t level) {
  bool first = true;
  bool second = true;
  for (std::size_t k1 = 0; k1 <= level; ++k1) {
    for (std::size_t k2 = 0; k2 <= level; ++k2) {
      if (w.alpha(k1, k2) > w.alpha(k1 + 1, k2) + kWeightTolerance) first = false;
      if (w.beta(k1, k2) > w.beta(k1, k2 + 1) + kWeightTolerance) second = false;
    }
  }
  return {first, second};
}

HypoReport hypo_report(const WeightDiagram& w, int max_k, std::size_t level, double tol) {
  HypoReport report = joint_hyponormal(w, level, CrossCheck::Operator, tol);
  const auto top = static_cast<std::size_t>(std::max(max_k, 1));
  const std::size_t lk = std::max(level, 4 * top + 2);
  const std::size_t interior = lk - (2 * top + 1);
  for (int k = 1; k <= max_k; ++k) {
    const auto r = k_hyponormal(w, k, lk, tol, interior);
    report.k_hypo[k] = r.holds;
    report.k_min_eigenvalue[k] = r.verdict.min_eigenvalue;
    if (k >= 2 && r.holds && !report.k_hypo[k - 1]) {
      std::ostringstream os;
      os << k << "-hyponormal but not " << (k - 1) << "-hyponormal";
      throw InternalConsistencyError(os.str());
    }
  }
  return report;
}

}  // namespace aluthge
