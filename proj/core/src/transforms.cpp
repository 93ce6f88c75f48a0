#include "aluthge/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "aluthge/error.hpp"
#include "aluthge/tolerances.hpp"

namespace aluthge {
namespace {

double scaled_gap(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

double polar_norm(const WeightDiagram& w, LatticePoint k) {
  const double a = w.alpha(k);
  const double b = w.beta(k);
  return std::sqrt(a * a + b * b);
}

}  // namespace

ToralCondition toral_commutativity_test(const WeightDiagram& w, std::size_t window) {
  ToralCondition c;
  double worst = -1.0;
  for (std::size_t k1 = 0; k1 <= window; ++k1) {
    for (std::size_t k2 = 0; k2 <= window; ++k2) {
      const double ra = scaled_gap(w.alpha(k1, k2 + 1) * w.alpha(k1 + 1, k2 + 1),
                                   w.alpha(k1 + 1, k2) * w.alpha(k1, k2 + 2));
      const double rb = scaled_gap(w.beta(k1 + 1, k2) * w.beta(k1 + 1, k2 + 1),
                                   w.beta(k1, k2 + 1) * w.beta(k1 + 2, k2));
      c.alpha_residual = std::max(c.alpha_residual, ra);
      c.beta_residual = std::max(c.beta_residual, rb);
      if (std::max(ra, rb) > worst) {
        worst = std::max(ra, rb);
        c.worst = {k1, k2};
      }
    }
  }
  c.holds = c.alpha_residual <= kWeightTolerance && c.beta_residual <= kWeightTolerance;

  // Direct route: commutativity residual of the transformed weights.
  for (std::size_t k1 = 0; k1 <= window; ++k1) {
    for (std::size_t k2 = 0; k2 <= window; ++k2) {
      auto at = [&w](std::size_t i, std::size_t j) {
        return std::sqrt(w.alpha(i, j) * w.alpha(i + 1, j));
      };
      auto bt = [&w](std::size_t i, std::size_t j) {
        return std::sqrt(w.beta(i, j) * w.beta(i, j + 1));
      };
      c.candidate_residual = std::max(
          c.candidate_residual,
          scaled_gap(at(k1, k2) * bt(k1 + 1, k2), bt(k1, k2) * at(k1, k2 + 1)));
    }
  }
  c.candidate_commutes = c.candidate_residual <= kWeightTolerance;
  if (c.candidate_commutes != c.holds) {
    std::ostringstream os;
    os << "toral commutativity: closed-form condition (residual "
       << std::max(c.alpha_residual, c.beta_residual) << ") and direct scan (residual "
       << c.candidate_residual << ") disagree";
    throw InternalConsistencyError(os.str());
  }
  return c;
}

ToralResult toral_transform(const WeightDiagram& w, std::size_t window) {
  DiagramParams p;
  p.note = "toral transform";
  WeightDiagram candidate(
      DiagramKind::Derived,
      [w](LatticePoint k) { return std::sqrt(w.alpha(k) * w.alpha(k.shifted1())); },
      [w](LatticePoint k) { return std::sqrt(w.beta(k) * w.beta(k.shifted2())); },
      std::move(p));
  auto cond = toral_commutativity_test(w, window);
  return ToralResult{std::move(candidate), cond.holds, cond};
}

SphericalPolarData spherical_polar_data(const WeightDiagram& w, std::size_t window) {
  SphericalPolarData d;
  d.window = window;
  const std::size_t n = (window + 1) * (window + 1);
  d.p.resize(n);
  d.u1.resize(n);
  d.u2.resize(n);
  for (std::size_t k1 = 0; k1 <= window; ++k1) {
    for (std::size_t k2 = 0; k2 <= window; ++k2) {
      const std::size_t i = k1 * (window + 1) + k2;
      const double p = polar_norm(w, {k1, k2});
      if (!(p > 0.0)) {
        std::ostringstream os;
        os << "P vanishes at k = " << LatticePoint{k1, k2};
        throw DegeneratePolarError(os.str());
      }
      d.p[i] = p;
      d.u1[i] = w.alpha(k1, k2) / p;
      d.u2[i] = w.beta(k1, k2) / p;
    }
  }
  return d;
}

WeightDiagram spherical_transform(const WeightDiagram& w, std::size_t window) {
  for (std::size_t k1 = 0; k1 <= window + 1; ++k1) {
    for (std::size_t k2 = 0; k2 <= window + 1; ++k2) {
      if (!(polar_norm(w, {k1, k2}) > 0.0)) {
        std::ostringstream os;
        os << "P vanishes at k = " << LatticePoint{k1, k2};
        throw DegeneratePolarError(os.str());
      }
    }
  }
  DiagramParams p;
  p.note = "spherical transform";
  WeightDiagram out(
      DiagramKind::Derived,
      [w](LatticePoint k) {
        return w.alpha(k) * std::sqrt(polar_norm(w, k.shifted1()) / polar_norm(w, k));
      },
      [w](LatticePoint k) {
        return w.beta(k) * std::sqrt(polar_norm(w, k.shifted2()) / polar_norm(w, k));
      },
      std::move(p));
  const auto r = commutativity_residual(out, window);
  if (r.worst > kWeightTolerance * std::max(1.0, weight_bound(w, window + 1))) {
    std::ostringstream os;
    os << "spherical transform fails to commute: residual " << r.worst << " at k = " << r.at;
    throw InternalConsistencyError(os.str());
  }
  return out;
}

PartialIsometryReport joint_partial_isometry_check(const WeightDiagram& w, std::size_t level) {
  const TruncatedPair tp = truncate(w, level);
  std::vector<double> p_inv(tp.p_diag.size());
  std::vector<double> p_sq(tp.p_diag.size());
  for (std::size_t i = 0; i < p_inv.size(); ++i) {
    if (!(tp.p_diag[i] > 0.0)) throw DegeneratePolarError("P vanishes on the truncation");
    p_inv[i] = 1.0 / tp.p_diag[i];
    p_sq[i] = tp.p_diag[i] * tp.p_diag[i];
  }
  const SparseMatrix p = diagonal_matrix(tp.p_diag);
  const SparseMatrix u1 = tp.t1 * diagonal_matrix(p_inv);
  const SparseMatrix u2 = tp.t2 * diagonal_matrix(p_inv);
  const SparseMatrix q2 = SparseMatrix(u1.transpose() * u1) + SparseMatrix(u2.transpose() * u2);
  const SparseMatrix lhs = p * q2 * p;
  const Eigen::MatrixXd diff = Eigen::MatrixXd(lhs) - Eigen::MatrixXd(diagonal_matrix(p_sq));

  PartialIsometryReport r;
  r.q2_min = std::numeric_limits<double>::infinity();
  r.q2_max = -std::numeric_limits<double>::infinity();
  auto interior = [&tp](std::size_t i) {
    const auto k = tp.point(i);
    return k.k1 < tp.level && k.k2 < tp.level;
  };
  for (std::size_t i = 0; i < tp.dimension(); ++i) {
    if (!interior(i)) continue;
    const double q = q2.coeff(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i));
    r.q2_min = std::min(r.q2_min, q);
    r.q2_max = std::max(r.q2_max, q);
    for (std::size_t j = 0; j < tp.dimension(); ++j) {
      if (!interior(j)) continue;
      r.residual = std::max(
          r.residual,
          std::abs(diff(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))));
    }
  }
  return r;
}

std::string_view to_string(TransformKind kind) {
  return kind == TransformKind::Toral ? "toral" : "spherical";
}

TransformKind transform_kind_from_string(std::string_view name) {
  if (name == "toral") return TransformKind::Toral;
  if (name == "spherical") return TransformKind::Spherical;
  throw DomainError("transform kind must be toral or spherical, got '" + std::string(name) +
                    "'");
}

WeightDiagram apply_transform(const WeightDiagram& w, TransformKind kind, std::size_t window) {
  if (kind == TransformKind::Toral) return toral_transform(w, window).candidate;
  return spherical_transform(w, window);
}

double pair_norm(const TruncatedPair& tp) {
  return std::max(operator_norm(tp.t1), operator_norm(tp.t2));
}

double transform_distance(const WeightDiagram& w, const WeightDiagram& w2, TransformKind which,
                          std::size_t level) {
  const auto a = truncate(apply_transform(w, which, level), level);
  const auto b = truncate(apply_transform(w2, which, level), level);
  return std::max(operator_norm(SparseMatrix(a.t1 - b.t1)),
                  operator_norm(SparseMatrix(a.t2 - b.t2)));
}

}  // namespace aluthge
