#include <cmath>

#include <gtest/gtest.h>

#include "aluthge/error.hpp"
#include "aluthge/one_var.hpp"
#include "oracles.hpp"

using namespace aluthge;

TEST(OneVar, ConstantPeriodicFlat) {
  const auto c = OneVarWeights::constant(0.7);
  EXPECT_DOUBLE_EQ(c(0), 0.7);
  EXPECT_DOUBLE_EQ(c(1000), 0.7);

  const auto p = OneVarWeights::periodic({0.5, 2.0});
  EXPECT_DOUBLE_EQ(p(0), 0.5);
  EXPECT_DOUBLE_EQ(p(1), 2.0);
  EXPECT_DOUBLE_EQ(p(7), 2.0);

  const auto f = OneVarWeights::flat_tail({0.3, 0.6, 0.9});
  EXPECT_DOUBLE_EQ(f(1), 0.6);
  EXPECT_DOUBLE_EQ(f(2), 0.9);
  EXPECT_DOUBLE_EQ(f(50), 0.9);
}

TEST(OneVar, StampfliFirstWeightsAreSqrtABC) {
  const auto s = OneVarWeights::stampfli(1, 2, 3);
  EXPECT_NEAR(s(0), 1.0, 1e-14);
  EXPECT_NEAR(s(1), std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(s(2), std::sqrt(3.0), 1e-14);
  // Increasing to sqrt(s1) = sqrt(2 + sqrt 2).
  for (std::size_t j = 0; j < 40; ++j) EXPECT_LT(s(j), s(j + 1) + 1e-15);
  EXPECT_NEAR(s(200), std::sqrt(2.0 + std::sqrt(2.0)), 1e-12);
}

TEST(OneVar, AtomicMatchesMomentRatios) {
  const auto w = OneVarWeights::atomic({0.5, 2.0}, {1.0, 3.0});
  // gamma_j = (0.5^j + 3 * 2^j) / 4
  auto gamma = [](double j) { return (std::pow(0.5, j) + 3.0 * std::pow(2.0, j)) / 4.0; };
  for (std::size_t j = 0; j < 30; ++j) {
    const double jd = static_cast<double>(j);
    EXPECT_NEAR(w(j) * w(j), gamma(jd + 1) / gamma(jd), 1e-12) << j;
  }
  ASSERT_NE(w.atoms(), nullptr);
  EXPECT_NEAR(w.atoms()->rho[0] + w.atoms()->rho[1], 1.0, 1e-15);
  EXPECT_EQ(OneVarWeights::constant(1.0).atoms(), nullptr);
}

TEST(OneVar, LargeIndicesStayFinite) {
  const auto w = OneVarWeights::atomic({1e-3, 50.0}, {0.999, 0.001});
  EXPECT_TRUE(std::isfinite(w(5000)));
  EXPECT_NEAR(w(5000), std::sqrt(50.0), 1e-10);
}

TEST(OneVar, ParseRoundTripsTags) {
  for (const char* text : {"const:1.5", "periodic:0.5,2", "flat:0.3,0.6,0.9", "stampfli:1,2,3",
                           "atomic:0.5@0.25,2@0.75"}) {
    const auto w = OneVarWeights::parse(text);
    EXPECT_TRUE(w.reproducible());
    const auto again = OneVarWeights::parse(w.tag());
    for (std::size_t j = 0; j < 10; ++j) EXPECT_DOUBLE_EQ(w(j), again(j)) << text;
  }
}

TEST(OneVar, ParseRejectsGarbage) {
  EXPECT_THROW(OneVarWeights::parse("bogus:1"), DomainError);
  EXPECT_THROW(OneVarWeights::parse("stampfli:1,2"), DomainError);
  EXPECT_THROW(OneVarWeights::parse("const:abc"), DomainError);
  EXPECT_THROW(OneVarWeights::parse("stampfli:2,1,3"), DomainError);
}

TEST(OneVar, ValidateRejectsNonPositive) {
  EXPECT_THROW(OneVarWeights::flat_tail({1.0, 0.0}), InvalidWeightsError);
  const auto bad = OneVarWeights::from_function([](std::size_t j) { return j == 3 ? -1.0 : 1.0; }, "bad");
  EXPECT_NO_THROW(bad.validate(2));
  EXPECT_THROW(bad.validate(3), InvalidWeightsError);
}

TEST(OneVar, DerivedSequencesAreNotReproducible) {
  const auto w = OneVarWeights::flat_tail({0.5, 1.0});
  const auto s = w.shifted(1);
  EXPECT_FALSE(s.reproducible());
  EXPECT_DOUBLE_EQ(s(0), 1.0);
  const auto c = w.scaled(2.0);
  EXPECT_DOUBLE_EQ(c(0), 1.0);
  EXPECT_EQ(c.atoms(), nullptr);
  EXPECT_THROW(w.scaled(0.0), InvalidWeightsError);
}

TEST(OneVar, MomentsMatchDirectProducts) {
  const auto w = OneVarWeights::stampfli(1, 2, 3);
  const auto mine = one_var_moments(w, 12);
  const auto ref = oracle::one_var_moments(w, 12);
  ASSERT_EQ(mine.size(), ref.size());
  for (std::size_t j = 0; j < ref.size(); ++j) EXPECT_NEAR(mine[j], ref[j], 1e-12 * ref[j]);
  // gamma_1 = a, gamma_2 = ab, gamma_3 = abc.
  EXPECT_NEAR(mine[1], 1.0, 1e-14);
  EXPECT_NEAR(mine[2], 2.0, 1e-13);
  EXPECT_NEAR(mine[3], 6.0, 1e-13);
}
