#include "aluthge/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <memory>
#include <sstream>

#include "aluthge/builders.hpp"
#include "aluthge/error.hpp"
#include "aluthge/measures.hpp"
#include "aluthge/positivity.hpp"
#include "aluthge/regions.hpp"
#include "aluthge/transforms.hpp"

namespace aluthge {

namespace {

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

CriterionResult finish(int id, std::string name, bool passed, const std::ostringstream& detail,
                       const Stopwatch& clock) {
  return {id, std::move(name), passed, detail.str(), clock.seconds()};
}

/// Square grid of moments gamma(m,n), m, n <= side, computed along row 0 and
/// then up each column.
struct MomentGrid {
  std::size_t side = 0;
  std::vector<double> g;
  double operator()(std::size_t m, std::size_t n) const { return g[m * (side + 1) + n]; }
  double& at(std::size_t m, std::size_t n) { return g[m * (side + 1) + n]; }
};

MomentGrid moment_grid(const WeightDiagram& w, std::size_t side) {
  MomentGrid grid{side, std::vector<double>((side + 1) * (side + 1))};
  for (std::size_t m = 0; m <= side; ++m) {
    grid.at(m, 0) = m == 0 ? 1.0 : grid(m - 1, 0) * w.alpha(m - 1, 0) * w.alpha(m - 1, 0);
    for (std::size_t n = 1; n <= side; ++n) {
      grid.at(m, n) = grid(m, n - 1) * w.beta(m, n - 1) * w.beta(m, n - 1);
    }
  }
  return grid;
}

WeightDiagram table_from_grid(std::shared_ptr<const MomentGrid> grid, std::string note) {
  const std::size_t side = grid->side;
  const WeightDiagram lazy = diagram_from_moments(
      [grid, side](LatticePoint k) {
        return (*grid)(std::min(k.k1, side), std::min(k.k2, side));
      },
      std::move(note));
  return build_table(materialize(lazy, side - 1));
}

std::string point_str(double x, double y) {
  std::ostringstream os;
  os << '(' << x << ", " << y << ')';
  return os.str();
}

OneVarWeights random_stampfli(Rng& rng, double* phi1) {
  const double a = uniform(rng, 0.3, 1.5);
  const double b = a + uniform(rng, 0.1, 1.0);
  const double c = b + uniform(rng, 0.1, 1.0);
  if (phi1) *phi1 = stampfli_data(a, b, c).phi1;
  return OneVarWeights::stampfli(a, b, c);
}

}  // namespace

// ---------------------------------------------------------------------------
// Generators

OneVarWeights random_monotone_omega(Rng& rng, std::size_t head) {
  std::vector<double> w{uniform(rng, 0.3, 1.0)};
  while (w.size() < std::max<std::size_t>(head, 1)) w.push_back(w.back() + uniform(rng, 0.02, 0.4));
  return OneVarWeights::flat_tail(std::move(w));
}

OneVarWeights random_atomic_omega(Rng& rng) {
  const std::size_t count = pick(rng, 2, 3);
  std::vector<double> atoms;
  while (atoms.size() < count) {
    const double s = uniform(rng, 0.2, 2.0);
    const bool apart = std::all_of(atoms.begin(), atoms.end(),
                                   [s](double t) { return std::abs(s - t) > 0.05; });
    if (apart) atoms.push_back(s);
  }
  std::vector<double> masses;
  for (std::size_t i = 0; i < count; ++i) masses.push_back(uniform(rng, 0.1, 1.0));
  return OneVarWeights::atomic(std::move(atoms), std::move(masses));
}

WeightDiagram random_commuting_table(Rng& rng, std::size_t size, double noise) {
  if (size < 2) throw DomainError("random_commuting_table: size must be >= 2");
  std::vector<double> a(size + 1), b(size + 1);
  for (auto& v : a) v = uniform(rng, -0.6, 0.6);
  for (auto& v : b) v = uniform(rng, -0.6, 0.6);
  auto grid = std::make_shared<MomentGrid>();
  grid->side = size;
  grid->g.resize((size + 1) * (size + 1));
  for (std::size_t m = 0; m <= size; ++m) {
    double row = 0.0;
    for (std::size_t i = 0; i < m; ++i) row += a[i];
    for (std::size_t n = 0; n <= size; ++n) {
      double col = 0.0;
      for (std::size_t j = 0; j < n; ++j) col += b[j];
      const double u = (m == 0 && n == 0) ? 0.0 : uniform(rng, -1.0, 1.0);
      grid->at(m, n) = std::exp(row + col + noise * u);
    }
  }
  return table_from_grid(grid, "random commuting table");
}

WeightDiagram random_monotone_table(Rng& rng, std::size_t size) {
  const std::size_t knee = pick(rng, 3, 5);
  const double lambda = uniform(rng, 0.0, 0.15);
  auto increments = [&] {
    std::vector<double> v(size + 1);
    v[0] = uniform(rng, -0.5, 0.0);
    for (std::size_t i = 1; i <= size; ++i) v[i] = v[i - 1] + (i < knee ? uniform(rng, 0.0, 0.3) : 0.0);
    return v;
  };
  const auto big_a = increments();
  const auto big_b = increments();
  auto grid = std::make_shared<MomentGrid>();
  grid->side = size;
  grid->g.resize((size + 1) * (size + 1));
  for (std::size_t m = 0; m <= size; ++m) {
    for (std::size_t n = 0; n <= size; ++n) {
      double lg = 0.0;
      for (std::size_t i = 0; i < m; ++i) lg += big_a[i];
      for (std::size_t j = 0; j < n; ++j) lg += big_b[j];
      lg -= lambda * static_cast<double>(std::min(m, knee) * std::min(n, knee));
      grid->at(m, n) = std::exp(lg);
    }
  }
  return table_from_grid(grid, "random monotone table");
}

WeightDiagram perturbed_at(const WeightDiagram& w, LatticePoint at, double eps, std::size_t size) {
  auto grid = std::make_shared<MomentGrid>(moment_grid(w, size));
  if (at.k1 > size || at.k2 > size) throw WindowError("perturbed_at: point outside the grid");
  grid->at(at.k1, at.k2) *= 1.0 + eps;
  return table_from_grid(grid, "moment perturbation");
}

namespace {

/// gamma(m,n) exp(delta u(m,n)) with a fixed u drawn once per base diagram.
WeightDiagram perturbed_everywhere(const WeightDiagram& w, const std::vector<double>& u,
                                   double delta, std::size_t size) {
  auto grid = std::make_shared<MomentGrid>(moment_grid(w, size));
  for (std::size_t i = 1; i < grid->g.size(); ++i) grid->g[i] *= std::exp(delta * u[i]);
  return table_from_grid(grid, "moment perturbation");
}

}  // namespace

// ---------------------------------------------------------------------------
// Criteria

CriterionResult crossing_point_criterion() {
  Stopwatch clock;
  const double q = crossing_q();
  const double elapsed = clock.seconds();
  std::ostringstream d;
  d.precision(10);
  d << "q = " << q << " (target 0.52138 +- 1e-4), " << elapsed << " s";
  return finish(1, "crossing point q", std::abs(q - 0.52138) <= 1e-4 && elapsed < 1.0, d, clock);
}

CriterionResult prop2_agreement_criterion() {
  Stopwatch clock;
  std::size_t total = 0, ok_h = 0, ok_ca = 0, ok_pa = 0, errors = 0;
  std::string first_pa, first_error;
  for (int i = 1; i <= 9; ++i) {
    const double y = i / 10.0;
    for (double x : probe_ladder(y, 20)) {
      ++total;
      try {
        const RegionReport r = classify(x, y, 12, 1);
        ok_h += r.agrees_h;
        ok_ca += r.agrees_ca;
        ok_pa += r.agrees_pa;
        if (!r.agrees_pa && first_pa.empty()) {
          std::ostringstream os;
          os << point_str(x, y) << " numeric " << r.spherical_hypo << " vs PA "
             << r.spherical_hypo_by_pa << " (PA = " << r.curves.pa << ")";
          first_pa = os.str();
        }
      } catch (const InternalConsistencyError& e) {
        ++errors;
        if (first_error.empty()) first_error = e.what();
      }
    }
  }
  const bool passed = errors == 0 && ok_h == total && ok_ca == total && ok_pa == total &&
                      clock.seconds() < 30.0;
  std::ostringstream d;
  d << "h " << ok_h << "/" << total << ", CA " << ok_ca << "/" << total << ", PA " << ok_pa << "/"
    << total;
  if (errors) d << "; " << errors << " internal-consistency errors, first: " << first_error;
  if (!first_pa.empty()) d << "; first PA mismatch at " << first_pa;
  return finish(2, "prop2 h/CA/PA grid agreement", passed, d, clock);
}

CriterionResult prop2_counterexample_criterion() {
  Stopwatch clock;
  const RegionReport a = classify(0.72, 0.4);
  const RegionReport b = classify(0.84, 0.6);
  const bool passed = a.joint_hypo && !a.toral_hypo && !b.joint_hypo && b.spherical_hypo;
  std::ostringstream d;
  d << "(0.72,0.4): W hypo " << a.joint_hypo << ", toral hypo " << a.toral_hypo
    << "; (0.84,0.6): W hypo " << b.joint_hypo << ", spherical hypo " << b.spherical_hypo;
  return finish(3, "prop2 counterexample regions", passed, d, clock);
}

CriterionResult prop2_subnormal_evidence_criterion(std::uint64_t seed) {
  Stopwatch clock;
  Rng rng(seed ^ 0x4);
  std::size_t ok = 0;
  std::string first_fail;
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double y = uniform(rng, 0.05, 0.95);
    const double x = uniform(rng, 0.05, thresholds(y).s);
    const HypoReport r = hypo_report(build_prop2(x, y), 3, 14);
    const bool all = r.k_hypo.at(1) && r.k_hypo.at(2) && r.k_hypo.at(3);
    for (const auto& [k, v] : r.k_min_eigenvalue) worst = std::min(worst, v);
    ok += all;
    if (!all && first_fail.empty()) first_fail = point_str(x, y);
  }
  std::ostringstream d;
  d << ok << "/20 sampled x <= s(y) are k-hyponormal for k = 1,2,3 at N = 14; min eigenvalue "
    << worst;
  if (!first_fail.empty()) d << "; first failure " << first_fail;
  return finish(4, "prop2 k-hyponormal below s(y)", ok == 20, d, clock);
}

CriterionResult prop1_criterion(std::uint64_t seed) {
  Stopwatch clock;
  Rng rng(seed ^ 0x5);
  constexpr std::size_t kSize = 16;
  constexpr std::size_t kWindow = 12;
  std::size_t commute_ok = 0, toral_ok = 0, toral_true = 0, mono_ok = 0;
  double worst_residual = 0.0;
  std::string first_fail;
  for (int i = 0; i < 50; ++i) {
    const double noise = i < 25 ? 0.0 : uniform(rng, 0.05, 0.3);
    const WeightDiagram w = random_commuting_table(rng, kSize, noise);
    try {
      const WeightDiagram s = spherical_transform(w, kWindow);
      const double res = commutativity_residual(s, kWindow).worst;
      worst_residual = std::max(worst_residual, res);
      commute_ok += res <= 1e-12;
    } catch (const Error& e) {
      if (first_fail.empty()) first_fail = std::string("spherical: ") + e.what();
    }
    try {
      const ToralCondition c = toral_commutativity_test(w, kWindow);
      toral_ok += c.holds == c.candidate_commutes;
      toral_true += c.holds;
    } catch (const InternalConsistencyError& e) {
      if (first_fail.empty()) first_fail = std::string("toral: ") + e.what();
    }
  }
  for (int i = 0; i < 50; ++i) {
    const WeightDiagram w = random_monotone_table(rng, kSize);
    const auto base = componentwise_hyponormal(w, kWindow);
    const auto toral = componentwise_hyponormal(toral_transform(w, kWindow).candidate, kWindow);
    const auto sph = componentwise_hyponormal(spherical_transform(w, kWindow), kWindow);
    const bool good = base.first && base.second && toral.first && toral.second && sph.first &&
                      sph.second;
    mono_ok += good;
    if (!good && first_fail.empty()) {
      std::ostringstream os;
      os << "monotone case " << i << ": base " << base.first << base.second << ", toral "
         << toral.first << toral.second << ", spherical " << sph.first << sph.second;
      first_fail = os.str();
    }
  }
  std::ostringstream d;
  d << "spherical commutes " << commute_ok << "/50 (worst residual " << worst_residual
    << "); toral condition agrees " << toral_ok << "/50 (" << toral_true
    << " commuting); componentwise preserved " << mono_ok << "/50";
  if (!first_fail.empty()) d << "; " << first_fail;
  return finish(5, "prop1 commutativity and preservation",
                commute_ok == 50 && toral_ok == 50 && mono_ok == 50, d, clock);
}

CriterionResult propscaling2_criterion(std::uint64_t seed) {
  Stopwatch clock;
  Rng rng(seed ^ 0x6);
  std::size_t agree = 0, positive = 0;
  std::string first_fail;
  for (int i = 0; i < 20; ++i) {
    const OneVarWeights omega = i % 2 ? random_atomic_omega(rng) : random_monotone_omega(rng, 4);
    const WeightDiagram theta = build_theta(omega);
    for (int k = 1; k <= 3; ++k) {
      const bool one = one_var_k_hyponormal(omega, k, 8).holds;
      const bool two = k_hyponormal(theta, k, 4 * static_cast<std::size_t>(k) + 4).holds;
      agree += one == two;
      positive += one;
      if (one != two && first_fail.empty()) {
        first_fail = omega.tag() + " k=" + std::to_string(k);
      }
    }
  }
  std::ostringstream d;
  d << agree << "/60 (omega, k) verdicts agree (" << positive << " k-hyponormal, "
    << 60 - positive << " not)";
  if (!first_fail.empty()) d << "; first disagreement " << first_fail;
  return finish(6, "propscaling2 theta lift k-hyponormality", agree == 60, d, clock);
}

CriterionResult prehypo_criterion(std::uint64_t seed) {
  Stopwatch clock;
  Rng rng(seed ^ 0x7);
  constexpr std::size_t kWindow = 12;
  std::size_t ok = 0;
  double worst = 0.0;
  std::string first_fail;
  for (int i = 0; i < 20; ++i) {
    const OneVarWeights omega = i % 2 ? random_atomic_omega(rng) : random_monotone_omega(rng, 5);
    const WeightDiagram theta = build_theta(omega);
    if (!joint_hyponormal(theta, 10).joint) {
      if (first_fail.empty()) first_fail = omega.tag() + ": theta lift not jointly hyponormal";
      continue;
    }
    const ToralResult toral = toral_transform(theta, kWindow);
    const WeightDiagram sph = spherical_transform(theta, kWindow);
    const double dev = max_weight_deviation(toral.candidate, sph, kWindow).worst;
    worst = std::max(worst, dev);
    const bool good = toral.commuting && dev <= 1e-12 &&
                      joint_hyponormal(toral.candidate, 10).joint &&
                      joint_hyponormal(sph, 10).joint;
    ok += good;
    if (!good && first_fail.empty()) first_fail = omega.tag();
  }
  std::ostringstream d;
  d << ok << "/20 theta lifts: transforms coincide (worst deviation " << worst
    << ") and are jointly hyponormal";
  if (!first_fail.empty()) d << "; first failure " << first_fail;
  return finish(7, "prehypo theta lift transforms", ok == 20, d, clock);
}

CriterionResult thm1_criterion(std::uint64_t seed) {
  Stopwatch clock;
  Rng rng(seed ^ 0x8);
  constexpr std::size_t kWindow = 12;
  std::size_t equal = 0, differ = 0;
  double worst_equal = 0.0, least_gap = INFINITY;
  for (int i = 0; i < 20; ++i) {
    const OneVarWeights omega = i % 2 ? random_atomic_omega(rng) : random_monotone_omega(rng, 4);
    const WeightDiagram w = build_thm1(omega, uniform(rng, 0.2, 2.0));
    const double dev = max_weight_deviation(toral_transform(w, kWindow).candidate,
                                            spherical_transform(w, kWindow), kWindow)
                           .worst;
    worst_equal = std::max(worst_equal, dev);
    equal += dev <= 1e-12;
  }
  for (int i = 0; i < 20; ++i) {
    const OneVarWeights omega = i % 2 ? random_atomic_omega(rng) : random_monotone_omega(rng, 4);
    const WeightDiagram base = build_thm1(omega, uniform(rng, 0.2, 2.0));
    const LatticePoint at{pick(rng, 0, 4), pick(rng, 0, 4)};
    const double eps = (rng() % 2 ? 1.0 : -1.0) * uniform(rng, 0.01, 0.1);
    const WeightDiagram w = perturbed_at(base, at, eps, 16);
    const double dev = max_weight_deviation(toral_transform(w, kWindow).candidate,
                                            spherical_transform(w, kWindow), kWindow)
                           .worst;
    least_gap = std::min(least_gap, dev);
    differ += dev > 1e-6;
  }
  std::ostringstream d;
  d << "thm1 instances equal " << equal << "/20 (worst " << worst_equal
    << "); perturbed instances differ " << differ << "/20 (smallest max deviation " << least_gap
    << ")";
  return finish(8, "thm1 equality class", equal == 20 && differ == 20, d, clock);
}

std::vector<QuasinormalCase> quasinormal_cases(std::uint64_t seed) {
  Rng rng(seed ^ 0x9);
  std::vector<QuasinormalCase> cases;
  for (int i = 0; i < 25; ++i) {
    OneVarWeights row = OneVarWeights::constant(1.0);
    double c = 0.0;
    switch (i % 3) {
      case 0:
        row = random_stampfli(rng, &c);
        break;
      case 1: {
        row = random_atomic_omega(rng);
        const OneVarAtoms* mu = row.atoms();
        c = *std::max_element(mu->s.begin(), mu->s.end()) * uniform(rng, 1.05, 2.0);
        break;
      }
      default: {
        const double w = uniform(rng, 0.3, 1.5);
        row = OneVarWeights::constant(w);
        c = w * w * uniform(rng, 1.1, 2.0);
        break;
      }
    }
    cases.push_back({quasinormal_completion(row, c), true, c, "completion " + row.tag()});
  }
  for (int i = 0; i < 25; ++i) {
    switch (i % 5) {
      case 0:
      case 1:
        cases.push_back({random_commuting_table(rng, 16, uniform(rng, 0.0, 0.3)), false, 0.0,
                         "random table"});
        break;
      case 2: {
        const double y = uniform(rng, 0.1, 0.9);
        const double x = uniform(rng, 0.1, 0.9);
        cases.push_back({build_prop2(x, y), false, 0.0, "prop2 " + point_str(x, y)});
        break;
      }
      case 3:
        cases.push_back({random_monotone_table(rng, 16), false, 0.0, "monotone table"});
        break;
      default: {
        // Theta lifts: quasinormal exactly when omega is constant.
        const OneVarWeights omega = i % 2 ? OneVarWeights::constant(uniform(rng, 0.3, 1.5))
                                          : random_monotone_omega(rng, 4);
        cases.push_back({build_theta(omega), false, 0.0, "theta " + omega.tag()});
        break;
      }
    }
  }
  return cases;
}

CriterionResult quasinormal3_criterion(std::uint64_t seed) {
  Stopwatch clock;
  std::size_t consistent = 0, expected = 0, flagged = 0;
  std::string first_fail;
  const auto cases = quasinormal_cases(seed);
  for (const auto& qc : cases) {
    try {
      const QuasinormalVerdict v = is_spherically_quasinormal(qc.w, 12);
      ++consistent;
      flagged += v.quasinormal;
      bool want = qc.completion;
      if (qc.w.kind() == DiagramKind::Theta) want = qc.label.rfind("theta const:", 0) == 0;
      bool good = v.quasinormal == want;
      if (qc.completion) good = good && v.constant && std::abs(*v.constant - qc.constant) <= 1e-10 * qc.constant;
      expected += good;
      if (!good && first_fail.empty()) first_fail = qc.label;
    } catch (const InternalConsistencyError& e) {
      if (first_fail.empty()) first_fail = qc.label + ": " + e.what();
    }
  }
  std::ostringstream d;
  d << "three characterisations agree on " << consistent << "/" << cases.size() << "; "
    << flagged << " flagged quasinormal; expected verdicts " << expected << "/" << cases.size();
  if (!first_fail.empty()) d << "; first failure " << first_fail;
  return finish(9, "quasinormal3 equivalences", consistent == cases.size() && expected == cases.size(),
                d, clock);
}

CriterionResult quasinormal2_criterion() {
  Stopwatch clock;
  const double triples[3][3] = {{1, 2, 3}, {1, 2, 4}, {2, 3, 5}};
  double worst = 0.0;
  for (const auto& t : triples) {
    const StampfliData sd = stampfli_data(t[0], t[1], t[2]);
    const WeightDiagram w = quasinormal_completion(OneVarWeights::stampfli(t[0], t[1], t[2]), sd.phi1);
    worst = std::max(worst, berger_atomic_verify(w, quasinormal2_measure(t[0], t[1], t[2]), 10));
  }
  const WeightDiagram w = quasinormal_completion(OneVarWeights::stampfli(1, 2, 3), 4.0);
  const double spot = std::max(std::abs(w.beta(0, 0) - std::sqrt(3.0)),
                               std::abs(w.alpha(0, 1) - std::sqrt(2.0 / 3.0)));
  std::ostringstream d;
  d << "max relative moment error " << worst << " (<= 1e-10); spot values beta(0,0) = "
    << w.beta(0, 0) << ", alpha(0,1) = " << w.alpha(0, 1) << " (error " << spot << ")";
  return finish(10, "quasinormal2 Berger measure", worst <= 1e-10 && spot <= 1e-12, d, clock);
}

CriterionResult quasinormal_subnormal_criterion(std::uint64_t seed) {
  Stopwatch clock;
  std::size_t total = 0, hypo_ok = 0, qt_ok = 0;
  double worst_qt = 0.0;
  std::string first_fail;
  for (const auto& qc : quasinormal_cases(seed)) {
    if (!qc.completion) continue;
    ++total;
    const HypoReport r = hypo_report(qc.w, 3, 14);
    const bool hypo = r.k_hypo.at(1) && r.k_hypo.at(2) && r.k_hypo.at(3);
    const double qt = qt_power_identity_check(qc.w, 5, 12);
    worst_qt = std::max(worst_qt, qt);
    hypo_ok += hypo;
    qt_ok += qt <= 1e-10;
    if ((!hypo || qt > 1e-10) && first_fail.empty()) first_fail = qc.label;
  }
  std::ostringstream d;
  d << "k-hyponormal (k <= 3) " << hypo_ok << "/" << total << "; Q_T identity " << qt_ok << "/"
    << total << " (worst residual " << worst_qt << ")";
  if (!first_fail.empty()) d << "; first failure " << first_fail;
  return finish(11, "quasinormal completions subnormal evidence",
                hypo_ok == total && qt_ok == total, d, clock);
}

CriterionResult re4_criterion(std::uint64_t seed) {
  Stopwatch clock;
  Rng rng(seed ^ 0xc);
  constexpr std::size_t kLevel = 10;
  constexpr std::size_t kSize = 16;
  const unsigned long ns[] = {1, 10, 100, 10000};
  std::size_t probes = 0, probes_ok = 0;
  double least = INFINITY;
  std::vector<WeightDiagram> bases;
  for (int i = 0; i < 10; ++i) {
    bases.push_back(random_commuting_table(rng, kSize, uniform(rng, 0.0, 0.3)));
    for (unsigned long n : ns) {
      const double slack = continuity_probe(bases.back(), kLevel, n).min_slack();
      least = std::min(least, slack);
      ++probes;
      probes_ok += slack >= -1e-10;
    }
  }
  std::size_t monotone = 0;
  double worst_small = 0.0;
  std::ostringstream dist;
  for (std::size_t b = 0; b < 3; ++b) {
    std::vector<double> u(kSize * kSize);
    for (auto& v : u) v = uniform(rng, -1.0, 1.0);
    double prev = INFINITY;
    bool dec = true;
    dist << (b ? "; " : "") << "[";
    for (double delta : {1e-2, 1e-3, 1e-4}) {
      const double d = transform_distance(bases[b], perturbed_everywhere(bases[b], u, delta, kSize - 1),
                                          TransformKind::Spherical, kLevel);
      dist << (delta == 1e-2 ? "" : ", ") << d;
      dec = dec && d < prev;
      prev = d;
    }
    dist << "]";
    worst_small = std::max(worst_small, prev);
    monotone += dec;
  }
  std::ostringstream d;
  d << "bounds hold in " << probes_ok << "/" << probes << " probes (min slack " << least
    << "); spherical distances at delta = 1e-2,1e-3,1e-4: " << dist.str();
  return finish(12, "re4 cutoff bounds and continuity",
                probes_ok == probes && monotone == 3 && worst_small < 1e-2, d, clock);
}

CriterionResult run_criterion(int id, std::uint64_t seed) {
  switch (id) {
    case 1: return crossing_point_criterion();
    case 2: return prop2_agreement_criterion();
    case 3: return prop2_counterexample_criterion();
    case 4: return prop2_subnormal_evidence_criterion(seed);
    case 5: return prop1_criterion(seed);
    case 6: return propscaling2_criterion(seed);
    case 7: return prehypo_criterion(seed);
    case 8: return thm1_criterion(seed);
    case 9: return quasinormal3_criterion(seed);
    case 10: return quasinormal2_criterion();
    case 11: return quasinormal_subnormal_criterion(seed);
    case 12: return re4_criterion(seed);
    default: throw DomainError("no acceptance criterion " + std::to_string(id));
  }
}

std::vector<CriterionResult> run_all_criteria(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 12; ++id) out.push_back(run_criterion(id, seed));
  return out;
}

const std::vector<std::string>& reproduce_targets() {
  static const std::vector<std::string> targets{"prop1",   "prop2",        "thm1", "prehypo",
                                                "quasinormal2", "re4", "propscaling2"};
  return targets;
}

std::vector<int> criteria_for_target(std::string_view target) {
  if (target == "prop2") return {1, 2, 3, 4};
  if (target == "prop1") return {5};
  if (target == "propscaling2") return {6};
  if (target == "prehypo") return {7};
  if (target == "thm1") return {8};
  if (target == "quasinormal2") return {9, 10, 11};
  if (target == "re4") return {12};
  throw DomainError("unknown reproduce target '" + std::string(target) + "'");
}

}  // namespace aluthge
