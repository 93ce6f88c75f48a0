#include <cmath>

#include <gtest/gtest.h>

#include "aluthge/builders.hpp"
#include "aluthge/error.hpp"
#include "aluthge/experiments.hpp"
#include "aluthge/measures.hpp"
#include "aluthge/positivity.hpp"
#include "aluthge/regions.hpp"
#include "oracles.hpp"

using namespace aluthge;

TEST(Psd, Basics) {
  const auto id = psd_check(Eigen::MatrixXd::Identity(3, 3));
  EXPECT_TRUE(id.is_psd);
  EXPECT_NEAR(id.min_eigenvalue, 1.0, 1e-15);

  Eigen::MatrixXd d = Eigen::Vector3d(1.0, 0.0, -1e-6).asDiagonal();
  EXPECT_FALSE(psd_check(d, 1e-10).is_psd);

  const auto ones = psd_check(Eigen::MatrixXd::Ones(2, 2));
  EXPECT_TRUE(ones.is_psd);
  EXPECT_NEAR(ones.min_eigenvalue, 0.0, 1e-15);
}

TEST(Psd, ShapeErrors) {
  EXPECT_THROW(psd_check(Eigen::MatrixXd::Ones(2, 3)), ShapeError);
  Eigen::Matrix2d skew;
  skew << 1, 2, 0, 1;
  EXPECT_THROW(psd_check(skew), ShapeError);
}

TEST(SixPoint, ConstantOneIsZero) {
  const auto r = six_point_test(build_theta(OneVarWeights::constant(1.0)), {3, 2});
  EXPECT_DOUBLE_EQ(r.matrix.cwiseAbs().maxCoeff(), 0.0);
  EXPECT_TRUE(r.verdict.is_psd);
}

TEST(SixPoint, Prop2OriginMatrix) {
  const double x = 0.7, y = 0.6;
  const auto r = six_point_test(build_prop2(x, y), {0, 0});
  EXPECT_NEAR(r.matrix(0, 0), 1.0 - x * x, 1e-15);
  EXPECT_NEAR(r.matrix(0, 1), y * y - x * x, 1e-15);
  EXPECT_NEAR(r.matrix(1, 1), 1.0 - x * x, 1e-15);
  // Oracle: eigenvalues of [[a, b], [b, a]] are a +- b.
  EXPECT_NEAR(r.verdict.min_eigenvalue, (1.0 - x * x) - std::abs(y * y - x * x), 1e-15);
}

TEST(Joint, Prop2AroundH) {
  const double h = std::sqrt(0.68);
  EXPECT_FALSE(joint_hyponormal(build_prop2(h + 0.01, 0.6), 8).joint);
  EXPECT_TRUE(joint_hyponormal(build_prop2(h - 0.01, 0.6), 8).joint);
  EXPECT_TRUE(joint_hyponormal(build_prop2(0.7, 0.6), 8).joint);
  EXPECT_FALSE(joint_hyponormal(build_prop2(0.9, 0.6), 8).joint);
}

TEST(Joint, ComponentwiseButNotJoint) {
  const auto r = joint_hyponormal(build_prop2(0.83, 0.6), 8);
  EXPECT_TRUE(r.componentwise.first);
  EXPECT_TRUE(r.componentwise.second);
  EXPECT_FALSE(r.joint);
  ASSERT_TRUE(r.worst_witness.has_value());
  EXPECT_EQ(r.worst_witness->at, (LatticePoint{0, 0}));
  EXPECT_LT(r.worst_witness->min_eigenvalue, 0.0);
}

TEST(Joint, OperatorOracleAgrees) {
  // Dense block commutator, built here, against the weight-level scan.
  Rng rng(17);
  for (int i = 0; i < 6; ++i) {
    const WeightDiagram w = i < 3 ? random_monotone_table(rng, 12) : build_prop2(0.6 + 0.12 * (i - 3), 0.6);
    const bool scan = joint_hyponormal(w, 5, CrossCheck::None).joint;
    const auto d = oracle::dense_pair(w, 7);
    const double lam = oracle::min_eigenvalue(oracle::joint_commutator(d, 5));
    EXPECT_EQ(scan, lam >= -1e-10) << i << " " << lam;
    EXPECT_NO_THROW(joint_hyponormal(w, 5, CrossCheck::Operator));
  }
}

TEST(Joint, ThetaOfMonotoneIsHyponormal) {
  EXPECT_TRUE(joint_hyponormal(build_theta(OneVarWeights::flat_tail({0.2, 0.5, 0.6, 1.0})), 8).joint);
  const auto alt = joint_hyponormal(build_theta(OneVarWeights::periodic({0.5, 2.0})), 8);
  EXPECT_FALSE(alt.joint);
  EXPECT_FALSE(alt.componentwise.first);
  EXPECT_FALSE(alt.componentwise.second);
}

TEST(Componentwise, Prop2WithXBelowY) {
  const auto c = componentwise_hyponormal(build_prop2(0.4, 0.7), 8);
  EXPECT_TRUE(c.first);
  EXPECT_TRUE(c.second);
}

TEST(MultiIndices, GradedOrder) {
  const auto m = multi_indices(2);
  ASSERT_EQ(m.size(), 5u);
  EXPECT_EQ(m[0], (std::pair<std::size_t, std::size_t>{1, 0}));
  EXPECT_EQ(m[1], (std::pair<std::size_t, std::size_t>{0, 1}));
  EXPECT_EQ(m[2], (std::pair<std::size_t, std::size_t>{2, 0}));
  EXPECT_EQ(multi_indices(3).size(), 9u);
}

TEST(KHypo, OrderOneMatchesJoint) {
  const auto w = build_prop2(0.7, 0.6);
  EXPECT_TRUE(k_hyponormal(w, 1, 10).holds);
  EXPECT_TRUE(joint_hyponormal(w, 10).joint);
  EXPECT_FALSE(k_hyponormal(build_prop2(0.9, 0.6), 1, 10).holds);
}

TEST(KHypo, SubnormalProp2Point) {
  ASSERT_LE(0.6, thresholds(0.6).s);
  const auto r = hypo_report(build_prop2(0.6, 0.6), 3, 14);
  for (int k = 1; k <= 3; ++k) EXPECT_TRUE(r.k_hypo.at(k)) << k;
}

TEST(KHypo, ConstantOneEveryOrder) {
  const auto w = build_theta(OneVarWeights::constant(1.0));
  for (int k = 1; k <= 3; ++k) EXPECT_TRUE(k_hyponormal(w, k, 4 * k + 2).holds);
}

TEST(KHypo, WindowTooSmall) {
  EXPECT_THROW(k_hyponormal(build_prop2(0.5, 0.5), 2, 9), WindowError);
}

TEST(KHypo, HierarchyOnCommonInterior) {
  Rng rng(23);
  for (int i = 0; i < 4; ++i) {
    const auto r = hypo_report(build_theta(random_monotone_omega(rng, 4)), 3, 8);
    if (r.k_hypo.at(3)) EXPECT_TRUE(r.k_hypo.at(2));
    if (r.k_hypo.at(2)) EXPECT_TRUE(r.k_hypo.at(1));
  }
}

TEST(OneVarHypo, Examples) {
  const auto one = OneVarWeights::constant(1.0);
  const auto alt = OneVarWeights::periodic({0.5, 2.0});
  const auto st = OneVarWeights::stampfli(1, 2, 3);
  for (int k = 1; k <= 3; ++k) {
    EXPECT_TRUE(one_var_k_hyponormal(one, k, 8).holds);
    EXPECT_TRUE(one_var_k_hyponormal(st, k, 8).holds);
    EXPECT_FALSE(one_var_k_hyponormal(alt, k, 8).holds);
  }
}

TEST(OneVarHypo, HankelAgreesWithOperatorTest) {
  Rng rng(29);
  for (int i = 0; i < 8; ++i) {
    const auto omega = i % 2 ? random_atomic_omega(rng) : random_monotone_omega(rng, 4);
    for (int k = 1; k <= 3; ++k) {
      EXPECT_EQ(one_var_k_hyponormal(omega, k, 8).holds,
                one_var_operator_k_hyponormal(omega, k, 4 * k + 12).is_psd)
          << omega.tag() << " k=" << k;
    }
  }
}

TEST(OneVarHypo, FlatTailTwoHyponormalityFails) {
  // flat:w0<w1 then constant: hyponormal, and 2-hyponormal only in the subnormal case.
  const auto w = OneVarWeights::flat_tail({0.5, 0.9, 1.0});
  EXPECT_TRUE(one_var_k_hyponormal(w, 1, 8).holds);
  EXPECT_FALSE(one_var_k_hyponormal(w, 2, 8).holds);
}
