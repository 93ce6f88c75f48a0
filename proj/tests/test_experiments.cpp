#include <cmath>

#include <gtest/gtest.h>

#include "aluthge/builders.hpp"
#include "aluthge/error.hpp"
#include "aluthge/experiments.hpp"
#include "aluthge/measures.hpp"
#include "aluthge/moments.hpp"

using namespace aluthge;

TEST(Generators, MonotoneOmega) {
  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    const auto w = random_monotone_omega(rng);
    EXPECT_GE(w(0), 0.3);
    EXPECT_LE(w(0), 1.0);
    for (std::size_t j = 0; j + 1 < 12; ++j) EXPECT_LE(w(j), w(j + 1));
    EXPECT_EQ(w(10), w(20));
    EXPECT_TRUE(w.reproducible());
  }
}

TEST(Generators, AtomicOmegaHasMeasure) {
  Rng rng(8);
  for (int t = 0; t < 20; ++t) {
    const auto w = random_atomic_omega(rng);
    ASSERT_NE(w.atoms(), nullptr);
    const auto& a = *w.atoms();
    EXPECT_GE(a.s.size(), 2u);
    EXPECT_LE(a.s.size(), 3u);
    double total = 0.0;
    for (double r : a.rho) total += r;
    EXPECT_NEAR(total, 1.0, 1e-12);
    const auto g = one_var_moments(w, 6);
    for (std::size_t j = 0; j < 6; ++j) {
      double m = 0.0;
      for (std::size_t i = 0; i < a.s.size(); ++i) m += a.rho[i] * std::pow(a.s[i], double(j));
      EXPECT_NEAR(g[j], m, 1e-12 * std::max(1.0, m));
    }
  }
}

TEST(Generators, CommutingTables) {
  Rng rng(9);
  for (double noise : {0.0, 0.2}) {
    const auto w = random_commuting_table(rng, 10, noise);
    EXPECT_LT(commutativity_residual(w, 8).worst, 1e-12);
  }
  const auto p = random_commuting_table(rng, 10, 0.0);
  for (std::size_t k1 = 0; k1 < 8; ++k1)
    for (std::size_t k2 = 0; k2 < 8; ++k2) {
      EXPECT_NEAR(p.alpha(k1, k2), p.alpha(k1, 0), 1e-13);
      EXPECT_NEAR(p.beta(k1, k2), p.beta(0, k2), 1e-13);
    }
}

TEST(Generators, MonotoneTables) {
  Rng rng(10);
  for (int t = 0; t < 10; ++t) {
    const auto w = random_monotone_table(rng, 12);
    EXPECT_LT(commutativity_residual(w, 10).worst, 1e-12);
    for (std::size_t k1 = 0; k1 + 1 < 11; ++k1)
      for (std::size_t k2 = 0; k2 < 11; ++k2) {
        EXPECT_LE(w.alpha(k1, k2), w.alpha(k1 + 1, k2) * (1 + 1e-12));
        EXPECT_LE(w.beta(k2, k1), w.beta(k2, k1 + 1) * (1 + 1e-12));
      }
  }
}

TEST(Generators, Deterministic) {
  Rng a(42), b(42);
  const auto w1 = random_commuting_table(a, 8, 0.1);
  const auto w2 = random_commuting_table(b, 8, 0.1);
  EXPECT_EQ(max_weight_deviation(w1, w2, 6).worst, 0.0);
}

TEST(Generators, PerturbedAtTouchesOneMoment) {
  const auto w = build_prop2(0.5, 0.5);
  const auto p = perturbed_at(w, {2, 3}, 1e-2, 8);
  const auto g = moments(w, 10);
  const auto h = moments(p, 10);
  for (std::size_t m = 0; m < 8; ++m)
    for (std::size_t n = 0; m + n <= 10 && n < 8; ++n) {
      const double expect = (m == 2 && n == 3) ? g(m, n) * 1.01 : g(m, n);
      EXPECT_NEAR(h(m, n), expect, 1e-13 * expect) << m << "," << n;
    }
  EXPECT_LT(commutativity_residual(p, 6).worst, 1e-13);
}

TEST(Targets, Mapping) {
  EXPECT_EQ(criteria_for_target("prop2"), (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(criteria_for_target("prop1"), (std::vector<int>{5}));
  EXPECT_EQ(criteria_for_target("propscaling2"), (std::vector<int>{6}));
  EXPECT_EQ(criteria_for_target("prehypo"), (std::vector<int>{7}));
  EXPECT_EQ(criteria_for_target("thm1"), (std::vector<int>{8}));
  EXPECT_EQ(criteria_for_target("quasinormal2"), (std::vector<int>{9, 10, 11}));
  EXPECT_EQ(criteria_for_target("re4"), (std::vector<int>{12}));
  EXPECT_THROW(criteria_for_target("nope"), DomainError);
  EXPECT_EQ(reproduce_targets().size(), 7u);
}

TEST(Criteria, CheapOnesAreDeterministic) {
  const auto a = run_criterion(10);
  const auto b = run_criterion(10);
  EXPECT_TRUE(a.passed);
  EXPECT_EQ(a.detail, b.detail);
  EXPECT_EQ(run_criterion(1).id, 1);
  EXPECT_THROW(run_criterion(13), DomainError);
}

TEST(QuasinormalCases, Split) {
  const auto cases = quasinormal_cases(kDefaultSeed);
  ASSERT_EQ(cases.size(), 50u);
  for (std::size_t i = 0; i < 25; ++i) EXPECT_TRUE(cases[i].completion);
  for (std::size_t i = 25; i < 50; ++i) EXPECT_FALSE(cases[i].completion);
}
