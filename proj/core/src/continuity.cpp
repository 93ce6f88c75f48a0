#include <algorithm>
#include <cmath>

#include "aluthge/transforms.hpp"

namespace aluthge {

double continuity_cutoff(double t, unsigned long n) {
  return std::sqrt(std::max(1.0 / static_cast<double>(n), t));
}

double ContinuityProbe::min_slack() const {
  double s = bounds[0].slack();
  for (const auto& b : bounds) s = std::min(s, b.slack());
  return s;
}

ContinuityProbe continuity_probe(const WeightDiagram& w, std::size_t level, unsigned long n) {
  const TruncatedPair tp = truncate(w, level);
  const std::size_t dim = tp.dimension();

  // Joint polar decomposition of the finite pair; U_i vanishes on ker P.
  const SparseMatrix p2 =
      SparseMatrix(tp.t1.transpose() * tp.t1) + SparseMatrix(tp.t2.transpose() * tp.t2);
  std::vector<double> p(dim), p_half(dim), p_pinv(dim), a(dim), a_inv(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const auto ii = static_cast<Eigen::Index>(i);
    p[i] = std::sqrt(std::max(0.0, p2.coeff(ii, ii)));
    p_half[i] = std::sqrt(p[i]);
    p_pinv[i] = p[i] > 0.0 ? 1.0 / p[i] : 0.0;
    a[i] = continuity_cutoff(p[i], n);
    a_inv[i] = 1.0 / a[i];
  }
  const SparseMatrix pm = diagonal_matrix(p);
  const SparseMatrix ph = diagonal_matrix(p_half);
  const SparseMatrix am = diagonal_matrix(a);
  const SparseMatrix ai = diagonal_matrix(a_inv);
  const SparseMatrix pp = diagonal_matrix(p_pinv);

  const double rn = 1.0 / std::sqrt(static_cast<double>(n));
  const double norm_p = operator_norm(pm);
  const SparseMatrix p_ainv = pm * ai;

  ContinuityProbe probe;
  probe.n = n;
  probe.level = level;
  probe.a_n_diag = a;
  probe.bounds[0] = {"i", operator_norm(am), std::max(rn, std::sqrt(norm_p))};
  probe.bounds[1] = {"ii", operator_norm(p_ainv), std::sqrt(norm_p)};
  probe.bounds[2] = {"iii", operator_norm(SparseMatrix(am - ph)), rn};
  probe.bounds[3] = {"iv", operator_norm(SparseMatrix(p_ainv - ph)), 0.25 * rn};

  BoundCheck worst{"v", 0.0, 0.0};
  bool first = true;
  for (const SparseMatrix* t : {&tp.t1, &tp.t2}) {
    const SparseMatrix u = (*t) * pp;
    const SparseMatrix lhs = SparseMatrix(am * (*t) * ai) - SparseMatrix(ph * u * ph);
    BoundCheck b{"v", operator_norm(lhs), 1.25 * rn * std::sqrt(operator_norm(*t))};
    if (first || b.slack() < worst.slack()) worst = b;
    first = false;
  }
  probe.bounds[4] = worst;
  return probe;
}

}  // namespace aluthge
