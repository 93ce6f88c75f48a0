#include <cmath>

#include <gtest/gtest.h>

#include "aluthge/builders.hpp"
#include "aluthge/error.hpp"
#include "aluthge/measures.hpp"
#include "aluthge/moments.hpp"
#include "aluthge/transforms.hpp"

using namespace aluthge;

TEST(Stampfli, DataFor123) {
  const auto d = stampfli_data(1, 2, 3);
  const double r2 = std::sqrt(2.0);
  EXPECT_NEAR(d.phi0, -2.0, 1e-15);
  EXPECT_NEAR(d.phi1, 4.0, 1e-15);
  EXPECT_NEAR(d.s0, 2.0 - r2, 1e-15);
  EXPECT_NEAR(d.s1, 2.0 + r2, 1e-15);
  EXPECT_NEAR(d.rho0, (1.0 + r2) / (2.0 * r2), 1e-15);
  EXPECT_NEAR(d.rho1, 0.146447, 1e-6);
  EXPECT_NEAR(d.rho0 + d.rho1, 1.0, 1e-15);
  EXPECT_NEAR(d.rho0 * d.s0 + d.rho1 * d.s1, 1.0, 1e-15);
  EXPECT_NEAR(d.rho0 * d.s0 * d.s0 + d.rho1 * d.s1 * d.s1, 2.0, 1e-14);
}

TEST(Stampfli, GeneralTriplesReproduceMoments) {
  for (auto [a, b, c] : {std::tuple{1.0, 2.0, 4.0}, {2.0, 3.0, 5.0}, {0.3, 0.5, 0.9}}) {
    const auto d = stampfli_data(a, b, c);
    // Closed forms written out again here.
    const double phi0 = -a * b * (c - b) / (b - a);
    const double phi1 = b * (c - a) / (b - a);
    EXPECT_NEAR(d.phi0, phi0, 1e-13);
    EXPECT_NEAR(d.phi1, phi1, 1e-13);
    auto g = [&](int j) { return d.rho0 * std::pow(d.s0, j) + d.rho1 * std::pow(d.s1, j); };
    EXPECT_NEAR(g(1), a, 1e-12);
    EXPECT_NEAR(g(2), a * b, 1e-12);
    EXPECT_NEAR(g(3), a * b * c, 1e-11);
    const auto s = stampfli(a, b, c);
    EXPECT_NEAR(s.weights(2), std::sqrt(c), 1e-12);
  }
}

TEST(Stampfli, DomainErrors) {
  EXPECT_THROW(stampfli_data(2, 1, 3), DomainError);
  EXPECT_THROW(stampfli_data(1, 2, 2), DomainError);
  EXPECT_THROW(stampfli_data(0, 1, 2), DomainError);
}

TEST(AtomicMeasure, Validation) {
  EXPECT_NO_THROW(AtomicMeasure2D({{1, 1, 0.5}, {2, 3, 0.5}}));
  EXPECT_THROW(AtomicMeasure2D({{1, 1, 0.5}, {2, 3, 0.4}}), DomainError);
  EXPECT_THROW(AtomicMeasure2D({{1, 1, 0.5}, {1, 1, 0.5}}), DomainError);
  EXPECT_THROW(AtomicMeasure2D({{-1, 1, 1.0}}), DomainError);
  const AtomicMeasure2D mu({{2, 3, 0.25}, {1, 1, 0.75}});
  EXPECT_DOUBLE_EQ(mu.moment(2, 1), 0.25 * 4 * 3 + 0.75);
}

TEST(Quasinormal2, MeasureFor123) {
  const auto mu = quasinormal2_measure(1, 2, 3);
  ASSERT_EQ(mu.atoms().size(), 2u);
  EXPECT_NEAR(mu.atoms()[0].s, 0.585786, 1e-6);
  EXPECT_NEAR(mu.atoms()[0].t, 3.414214, 1e-6);
  EXPECT_NEAR(mu.atoms()[0].rho, 0.853553, 1e-6);
  EXPECT_NEAR(mu.moment(0, 1), 3.0, 1e-14);
  EXPECT_NEAR(mu.moment(0, 0), 1.0, 1e-15);
}

TEST(Completion, SpotValues) {
  const auto w = quasinormal_completion(OneVarWeights::stampfli(1, 2, 3), 4.0);
  EXPECT_NEAR(w.beta(0, 0), std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(w.beta(1, 0), std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(w.alpha(0, 1), std::sqrt(2.0 / 3.0), 1e-14);
  for (std::size_t k1 = 0; k1 <= 40; ++k1)
    for (std::size_t k2 = 0; k2 <= 40; ++k2)
      EXPECT_NEAR(w.alpha(k1, k2) * w.alpha(k1, k2) + w.beta(k1, k2) * w.beta(k1, k2), 4.0, 1e-12);
  EXPECT_THROW(w.alpha(41, 0), WindowError);
}

TEST(Completion, ClosedFormMatchesRowRecursionNearOrigin) {
  const auto row = OneVarWeights::atomic({0.3, 1.1, 1.9}, {0.2, 0.5, 0.3});
  const double c = 2.6;
  const auto exact = quasinormal_completion(row, c, 10);
  // Same row without the atomic representation goes through the recursion.
  const auto plain = OneVarWeights::from_function([row](std::size_t j) { return row(j); }, "plain");
  const auto rec = quasinormal_completion(plain, c, 10);
  EXPECT_LT(max_weight_deviation(exact, rec, 6).worst, 1e-9);
  EXPECT_LT(commutativity_residual(exact, 9).worst, 1e-13);
}

TEST(Completion, ConstantRow) {
  const auto w = quasinormal_completion(OneVarWeights::constant(0.8), 2 * 0.64, 12);
  EXPECT_LT(max_weight_deviation(w, build_theta(OneVarWeights::constant(0.8)), 12).worst, 1e-15);
}

TEST(Completion, Infeasible) {
  EXPECT_THROW(quasinormal_completion(OneVarWeights::constant(2.0), 3.0, 8), InfeasibleConstantError);
  EXPECT_THROW(quasinormal_completion(OneVarWeights::stampfli(1, 2, 3), 3.0), InfeasibleConstantError);
  EXPECT_ANY_THROW(quasinormal_completion(OneVarWeights::constant(1.0), -1.0, 8));
}

TEST(QuasinormalCheck, Verdicts) {
  const auto w = quasinormal_completion(OneVarWeights::stampfli(1, 2, 3), 4.0);
  const auto v = is_spherically_quasinormal(w, 12);
  EXPECT_TRUE(v.quasinormal);
  EXPECT_TRUE(v.fixed_point);
  EXPECT_TRUE(v.constant_diagonal);
  ASSERT_TRUE(v.constant.has_value());
  EXPECT_NEAR(*v.constant, 4.0, 1e-12);
  EXPECT_FALSE(v.spherical_isometry);

  const auto p = is_spherically_quasinormal(build_prop2(0.5, 0.5), 12);
  EXPECT_FALSE(p.quasinormal);
  EXPECT_FALSE(p.constant.has_value());
  EXPECT_FALSE(p.fixed_point);

  const auto iso = quasinormal_completion(OneVarWeights::atomic({0.2, 0.7}, {0.5, 0.5}), 1.0);
  EXPECT_TRUE(is_spherically_quasinormal(iso, 12).spherical_isometry);
}

TEST(Berger, VerifyCompletion) {
  const auto w = quasinormal_completion(OneVarWeights::stampfli(1, 2, 3), 4.0);
  EXPECT_LE(berger_atomic_verify(w, quasinormal2_measure(1, 2, 3), 10), 1e-10);
  const auto d = stampfli_data(1, 2, 3);
  const AtomicMeasure2D swapped({{d.s0, d.s1, d.rho1}, {d.s1, d.s0, d.rho0}});
  EXPECT_GT(berger_atomic_verify(w, swapped, 10), 1e-2);
  EXPECT_LE(berger_atomic_verify(build_theta(OneVarWeights::constant(1.0)),
                                 AtomicMeasure2D({{1, 1, 1}}), 10),
            1e-15);
}

TEST(QtPowers, QuasinormalIdentity) {
  const auto w = quasinormal_completion(OneVarWeights::stampfli(1, 2, 3), 4.0);
  const auto q3 = qt_power_diagonal(w, 3, 8);
  for (double v : q3) EXPECT_NEAR(v, 64.0, 64.0 * 1e-12);
  EXPECT_LE(qt_power_identity_check(w, 5, 10), 1e-10);
  EXPECT_GT(qt_power_identity_check(build_prop2(0.5, 0.5), 2, 8), 1e-3);
  EXPECT_LE(qt_power_identity_check(build_prop2(0.5, 0.5), 0, 8), 1e-15);
}

TEST(Thm1Probe, DiagonalCase) {
  const auto st = OneVarWeights::stampfli(1, 2, 3);
  const auto r = thm1_measure_probe(st, 1.0, 6);
  EXPECT_LE(r.max_dev_sqrt, 1e-12);
  EXPECT_LE(r.max_dev_square, 1e-12);
  bool found = false;
  for (const auto& row : r.rows) {
    if (row.m == 1 && row.n == 1) {
      EXPECT_NEAR(row.weight_moment, 2.0, 1e-13);
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(Thm1Probe, GeneralYRatio) {
  const auto st = OneVarWeights::stampfli(1, 2, 3);
  const double y = 0.6;
  const auto r = thm1_measure_probe(st, y, 4);
  for (const auto& row : r.rows) {
    if (row.m == 0 && row.n == 1) EXPECT_NEAR(row.ratio, y * y, 1e-14);  // (y/a)^2 with a = 1
  }
}

TEST(QuasinormalCheck, FullMaterialisedWindow) {
  const auto w = quasinormal_completion(OneVarWeights::stampfli(1, 2, 3), 4.0);
  EXPECT_TRUE(is_spherically_quasinormal(w, kDefaultCompletionWindow - 1).quasinormal);
  EXPECT_THROW(is_spherically_quasinormal(w, kDefaultCompletionWindow), WindowError);
}
