#include "aluthge/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "aluthge/builders.hpp"
#include "aluthge/error.hpp"
#include "aluthge/moments.hpp"
#include "aluthge/tolerances.hpp"
#include "aluthge/transforms.hpp"
#include "aluthge/truncation.hpp"

namespace aluthge {

StampfliData stampfli_data(double a, double b, double c) {
  if (!(a > 0.0 && a < b && b < c) || !std::isfinite(c)) {
    std::ostringstream os;
    os << "Stampfli data needs 0 < a < b < c (got " << a << ", " << b << ", " << c << ")";
    throw DomainError(os.str());
  }
  StampfliData d{a, b, c};
  d.phi0 = -a * b * (c - b) / (b - a);
  d.phi1 = b * (c - a) / (b - a);
  const double disc = d.phi1 * d.phi1 + 4.0 * d.phi0;
  if (!(disc > 0.0)) {
    throw InternalConsistencyError("Stampfli discriminant is not positive for a < b < c");
  }
  const double root = std::sqrt(disc);
  d.s0 = (d.phi1 - root) / 2.0;
  d.s1 = (d.phi1 + root) / 2.0;
  d.rho0 = (d.s1 - a) / (d.s1 - d.s0);
  d.rho1 = (a - d.s0) / (d.s1 - d.s0);
  if (!(d.s0 > 0.0) || !(d.rho0 > 0.0) || !(d.rho1 > 0.0)) {
    throw InternalConsistencyError("Stampfli atoms or masses out of range");
  }
  return d;
}

StampfliShift stampfli(double a, double b, double c) {
  return {stampfli_data(a, b, c), OneVarWeights::stampfli(a, b, c)};
}

AtomicMeasure2D::AtomicMeasure2D(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw DomainError("measure has no atoms");
  double total = 0.0;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const auto& a = atoms_[i];
    if (!(a.rho > 0.0) || !(a.s >= 0.0) || !(a.t >= 0.0)) {
      throw DomainError("atoms need non-negative coordinates and positive mass");
    }
    total += a.rho;
    for (std::size_t j = 0; j < i; ++j) {
      if (atoms_[j].s == a.s && atoms_[j].t == a.t) throw DomainError("repeated atom");
    }
  }
  if (std::abs(total - 1.0) > 1e-12) {
    std::ostringstream os;
    os << "atom masses sum to " << total << ", not 1";
    throw DomainError(os.str());
  }
}

double AtomicMeasure2D::moment(std::size_t m, std::size_t n) const {
  double sum = 0.0;
  for (const auto& a : atoms_) {
    sum += a.rho * std::pow(a.s, static_cast<double>(m)) * std::pow(a.t, static_cast<double>(n));
  }
  return sum;
}

QuasinormalVerdict is_spherically_quasinormal(const WeightDiagram& w, std::size_t window) {
  QuasinormalVerdict v;
  auto p2 = [&w](std::size_t k1, std::size_t k2) {
    const double a = w.alpha(k1, k2);
    const double b = w.beta(k1, k2);
    return a * a + b * b;
  };
  const double c = p2(0, 0);
  const double scale = std::max(1.0, c);
  v.quasinormal = true;
  for (std::size_t k1 = 0; k1 <= window && v.quasinormal; ++k1) {
    for (std::size_t k2 = 0; k2 <= window; ++k2) {
      if (std::abs(p2(k1, k2) - c) > kWeightTolerance * scale) {
        v.quasinormal = false;
        break;
      }
    }
  }
  if (v.quasinormal) {
    v.constant = c;
    v.spherical_isometry = std::abs(c - 1.0) <= kWeightTolerance;
  }

  const auto hat = spherical_transform(w, window);
  v.fixed_point = max_weight_deviation(hat, w, window).worst <=
                  kWeightTolerance * std::max(1.0, weight_bound(w, window));

  // Operator route: diagonal of T1*T1 + T2*T2, away from the cut-off edges.
  const TruncatedPair tp = truncate(w, window);
  const SparseMatrix q =
      SparseMatrix(tp.t1.transpose() * tp.t1) + SparseMatrix(tp.t2.transpose() * tp.t2);
  const double q0 = q.coeff(0, 0);
  v.constant_diagonal = true;
  for (std::size_t k1 = 0; k1 < window; ++k1) {
    for (std::size_t k2 = 0; k2 < window; ++k2) {
      const auto i = static_cast<Eigen::Index>(tp.index(k1, k2));
      if (std::abs(q.coeff(i, i) - q0) > kWeightTolerance * std::max(1.0, q0)) {
        v.constant_diagonal = false;
      }
    }
  }

  if (v.quasinormal != v.fixed_point || v.quasinormal != v.constant_diagonal) {
    std::ostringstream os;
    os << "spherical quasinormality: constant-C " << v.quasinormal << ", fixed point "
       << v.fixed_point << ", constant diagonal " << v.constant_diagonal;
    throw InternalConsistencyError(os.str());
  }
  return v;
}

WeightDiagram quasinormal_completion(const OneVarWeights& row0, double constant,
                                     std::size_t window) {
  if (!(constant > 0.0) || !std::isfinite(constant)) {
    throw InfeasibleConstantError("completion constant must be positive");
  }
  struct Grid {
    std::size_t window;
    std::vector<double> alpha;
    std::vector<double> beta;
  };
  auto grid = std::make_shared<Grid>();
  grid->window = window;
  grid->alpha.resize((window + 1) * (window + 1));
  grid->beta.resize((window + 1) * (window + 1));
  auto infeasible = [constant](double a2, LatticePoint k) {
    std::ostringstream os;
    os << "completion constant " << constant << " does not exceed alpha^2 = " << a2
       << " at k = " << k;
    return InfeasibleConstantError(os.str());
  };

  if (const OneVarAtoms* mu = row0.atoms()) {
    // gamma_(m,n) = sum rho_i s_i^m (C - s_i)^n; weights as ratios evaluated in
    // log space so that neither direction overflows.
    const double smax = *std::max_element(mu->s.begin(), mu->s.end());
    if (constant <= smax) throw infeasible(smax, {0, 0});
    std::vector<double> ls, lc, lr;
    for (std::size_t i = 0; i < mu->s.size(); ++i) {
      ls.push_back(std::log(mu->s[i]));
      lc.push_back(std::log(constant - mu->s[i]));
      lr.push_back(std::log(mu->rho[i]));
    }
    std::vector<double> e(mu->s.size());
    for (std::size_t k1 = 0; k1 <= window; ++k1) {
      for (std::size_t k2 = 0; k2 <= window; ++k2) {
        double top = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < e.size(); ++i) {
          e[i] = lr[i] + static_cast<double>(k1) * ls[i] + static_cast<double>(k2) * lc[i];
          top = std::max(top, e[i]);
        }
        double num = 0.0;
        double den = 0.0;
        for (std::size_t i = 0; i < e.size(); ++i) {
          const double p = std::exp(e[i] - top);
          num += p * mu->s[i];
          den += p;
        }
        const double a2 = num / den;
        const std::size_t at = k1 * (window + 1) + k2;
        grid->alpha[at] = std::sqrt(a2);
        grid->beta[at] = std::sqrt(constant - a2);
      }
    }
  } else {
    const std::size_t span = 2 * window + 1;  // row 0 entries needed for [0,window]^2
    row0.validate(span);
    // Row r of the triangle holds k1 = 0..span - r.
    std::vector<std::vector<double>> alpha(window + 1), beta(window + 1);
    alpha[0].resize(span + 1);
    for (std::size_t k1 = 0; k1 <= span; ++k1) alpha[0][k1] = row0(k1);

    auto fill_beta = [&](std::size_t r) {
      beta[r].resize(alpha[r].size());
      for (std::size_t k1 = 0; k1 < alpha[r].size(); ++k1) {
        const double gap = constant - alpha[r][k1] * alpha[r][k1];
        if (!(gap > 0.0)) throw infeasible(alpha[r][k1] * alpha[r][k1], {k1, r});
        beta[r][k1] = std::sqrt(gap);
      }
    };
    fill_beta(0);
    for (std::size_t r = 1; r <= window; ++r) {
      alpha[r].resize(alpha[r - 1].size() - 1);
      for (std::size_t k1 = 0; k1 < alpha[r].size(); ++k1) {
        alpha[r][k1] = alpha[r - 1][k1] * beta[r - 1][k1 + 1] / beta[r - 1][k1];
      }
      fill_beta(r);
    }
    for (std::size_t k2 = 0; k2 <= window; ++k2) {
      for (std::size_t k1 = 0; k1 <= window; ++k1) {
        grid->alpha[k1 * (window + 1) + k2] = alpha[k2][k1];
        grid->beta[k1 * (window + 1) + k2] = beta[k2][k1];
      }
    }
  }
  auto locate = [g = std::shared_ptr<const Grid>(grid)](LatticePoint k) {
    if (k.k1 > g->window || k.k2 > g->window) {
      std::ostringstream os;
      os << "quasinormal completion materialised on [0," << g->window << "]^2, read at k = "
         << k;
      throw WindowError(os.str());
    }
    return k.k1 * (g->window + 1) + k.k2;
  };
  DiagramParams p;
  p.omega = row0;
  p.constant = constant;
  p.window = window;
  return WeightDiagram(
      DiagramKind::QuasinormalCompletion,
      [grid, locate](LatticePoint k) { return grid->alpha[locate(k)]; },
      [grid, locate](LatticePoint k) { return grid->beta[locate(k)]; }, std::move(p));
}

AtomicMeasure2D quasinormal2_measure(double a, double b, double c) {
  const auto d = stampfli_data(a, b, c);
  return AtomicMeasure2D({{d.s0, d.s1, d.rho0}, {d.s1, d.s0, d.rho1}});
}

double berger_atomic_verify(const WeightDiagram& w, const AtomicMeasure2D& mu,
                            std::size_t maxdeg) {
  const MomentTable g = moments(w, maxdeg);
  double worst = 0.0;
  for (std::size_t m = 0; m <= maxdeg; ++m) {
    for (std::size_t n = 0; m + n <= maxdeg; ++n) {
      const double expected = mu.moment(m, n);
      worst = std::max(worst, std::abs(g(m, n) - expected) /
                                  std::max(std::abs(expected), kMomentFloor));
    }
  }
  return worst;
}

std::vector<double> qt_power_diagonal(const WeightDiagram& w, std::size_t n, std::size_t level) {
  if (n > level) throw WindowError("Q_T power exceeds the truncation level");
  // Q_T(D)_k = alpha_k^2 D_{k+e1} + beta_k^2 D_{k+e2}; entries with
  // k1, k2 <= level - j are exact after j steps.
  std::size_t side = level + 1;
  std::vector<double> d(side * side, 1.0);
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t next_side = side - 1;
    std::vector<double> next(next_side * next_side);
    for (std::size_t k1 = 0; k1 < next_side; ++k1) {
      for (std::size_t k2 = 0; k2 < next_side; ++k2) {
        const double a = w.alpha(k1, k2);
        const double b = w.beta(k1, k2);
        next[k1 * next_side + k2] =
            a * a * d[(k1 + 1) * side + k2] + b * b * d[k1 * side + k2 + 1];
      }
    }
    d = std::move(next);
    side = next_side;
  }
  return d;
}

double qt_power_identity_check(const WeightDiagram& w, std::size_t nmax, std::size_t level) {
  const auto q1 = qt_power_diagonal(w, 1, level);
  const std::size_t side1 = level;
  double worst = 0.0;
  for (std::size_t n = 0; n <= nmax; ++n) {
    const auto qn = qt_power_diagonal(w, n, level);
    const std::size_t side = level + 1 - n;
    for (std::size_t k1 = 0; k1 < side && k1 < side1; ++k1) {
      for (std::size_t k2 = 0; k2 < side && k2 < side1; ++k2) {
        const double power = std::pow(q1[k1 * side1 + k2], static_cast<double>(n));
        worst = std::max(worst,
                         std::abs(qn[k1 * side + k2] - power) / std::max(1.0, std::abs(power)));
      }
    }
  }
  return worst;
}

Thm1ProbeReport thm1_measure_probe(const OneVarWeights& omega, double y, std::size_t maxdeg) {
  Thm1ProbeReport r;
  r.a = omega(0);
  r.y = y;
  const WeightDiagram w = build_thm1(omega, y);
  const MomentTable g = moments(w, maxdeg);
  const auto one = one_var_moments(omega, maxdeg);
  const double ratio = y / r.a;
  for (std::size_t m = 0; m <= maxdeg; ++m) {
    for (std::size_t n = 0; m + n <= maxdeg; ++n) {
      Thm1DegreeRow row;
      row.m = m;
      row.n = n;
      row.weight_moment = g(m, n);
      row.diagonal_moment = one[m + n];
      row.ratio = row.weight_moment / row.diagonal_moment;
      row.predicted_sqrt = std::pow(std::sqrt(ratio), static_cast<double>(n));
      row.predicted_square = std::pow(ratio, 2.0 * static_cast<double>(n));
      r.max_dev_sqrt = std::max(r.max_dev_sqrt, std::abs(row.ratio / row.predicted_sqrt - 1.0));
      r.max_dev_square =
          std::max(r.max_dev_square, std::abs(row.ratio / row.predicted_square - 1.0));
      r.rows.push_back(row);
    }
  }
  return r;
}

}  // namespace aluthge
