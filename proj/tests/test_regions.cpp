#include <cmath>
#include <algorithm>
#include <complex>
#include <sstream>
#include <string>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "aluthge/error.hpp"
#include "aluthge/regions.hpp"

using namespace aluthge;

namespace {

// Real roots in (0,1) of y^4 + 2y^3 - y^2 - 4y + 2 via the companion matrix; y = 1 is
// also a root and is excluded.
std::vector<double> crossing_roots() {
  Eigen::Matrix4d c = Eigen::Matrix4d::Zero();
  c(0, 0) = -2.0;
  c(0, 1) = 1.0;
  c(0, 2) = 4.0;
  c(0, 3) = -2.0;
  c(1, 0) = 1.0;
  c(2, 1) = 1.0;
  c(3, 2) = 1.0;
  Eigen::EigenSolver<Eigen::Matrix4d> es(c);
  std::vector<double> out;
  for (int i = 0; i < 4; ++i) {
    const std::complex<double> r = es.eigenvalues()(i);
    if (std::abs(r.imag()) < 1e-12 && r.real() > 0.0 && r.real() < 1.0 - 1e-6) out.push_back(r.real());
  }
  return out;
}

}  // namespace

TEST(Thresholds, EndpointLimits) {
  const auto lo = thresholds(1e-9);
  EXPECT_NEAR(lo.s, std::sqrt(0.5), 1e-9);
  EXPECT_NEAR(lo.h, std::sqrt(0.5), 1e-9);
  EXPECT_NEAR(lo.ca, 0.5, 1e-9);
  EXPECT_NEAR(lo.pa, 2.0 / (1.0 + std::sqrt(2.0)), 1e-8);
  const auto hi = thresholds(1.0 - 1e-9);
  EXPECT_NEAR(hi.s, 1.0, 1e-8);
  EXPECT_NEAR(hi.h, 1.0, 1e-8);
  EXPECT_NEAR(hi.ca, 1.0, 1e-8);
  EXPECT_NEAR(hi.pa, 1.0, 1e-7);
}

TEST(Thresholds, InteriorValue) {
  const double y = 0.6;
  const auto t = thresholds(y);
  EXPECT_NEAR(t.s, 1.0 / std::sqrt(2.0 - 0.36), 1e-15);
  EXPECT_NEAR(t.h, std::sqrt(0.68), 1e-15);
  EXPECT_NEAR(t.ca, 0.8, 1e-15);
  const double pa = 2.0 * (1.0 + 0.36 - 0.1296) /
                    ((1.0 + std::sqrt(2.0)) * 1.36 * (std::sqrt(1.36) - 0.36));
  EXPECT_NEAR(t.pa, pa, 1e-14);
}

TEST(Thresholds, Ordering) {
  for (int i = 1; i < 100; ++i) {
    const double y = i / 100.0;
    const auto t = thresholds(y);
    EXPECT_LE(t.s, t.h + 1e-15) << y;
    EXPECT_LT(t.ca, t.h) << y;
    EXPECT_GT(spherical_hypo_threshold(y), t.ca - 1e-15) << y;
  }
}

TEST(Thresholds, DomainErrors) {
  EXPECT_THROW(thresholds(0.0), DomainError);
  EXPECT_THROW(thresholds(1.0), DomainError);
  EXPECT_THROW(thresholds(-0.5), DomainError);
}

TEST(Crossing, MatchesPolynomialRoot) {
  const auto roots = crossing_roots();
  ASSERT_EQ(roots.size(), 1u);
  const double q = crossing_q();
  EXPECT_NEAR(q, roots[0], 1e-9);
  EXPECT_NEAR(q, 0.5214, 1e-4);
  const auto below = thresholds(q - 0.05);
  const auto above = thresholds(q + 0.05);
  EXPECT_LT(below.ca, below.s);
  EXPECT_GT(above.ca, above.s);
}

TEST(Bisect, FindsRoot) {
  const double r = bisect(0.0, 2.0, 1e-12, [](double t) { return t * t - 2.0; });
  EXPECT_NEAR(r, std::sqrt(2.0), 1e-11);
}

TEST(Classify, InsideEverything) {
  const auto r = classify(0.3, 0.5);
  EXPECT_TRUE(r.subnormal_by_s);
  EXPECT_TRUE(r.hypo_by_h);
  EXPECT_TRUE(r.toral_hypo_by_ca);
  EXPECT_TRUE(r.joint_hypo);
  EXPECT_TRUE(r.toral_hypo);
  EXPECT_TRUE(r.spherical_hypo);
  EXPECT_TRUE(r.agrees_h && r.agrees_ca && r.agrees_pa);
  ASSERT_TRUE(r.khypo.count(2));
  EXPECT_TRUE(r.khypo.at(2));
}

TEST(Classify, BetweenCaAndH) {
  const auto r = classify(0.77, 0.5);
  EXPECT_TRUE(r.joint_hypo);
  EXPECT_FALSE(r.toral_hypo);
  EXPECT_TRUE(r.agrees_h);
  EXPECT_TRUE(r.agrees_ca);
}

TEST(Classify, AboveH) {
  const auto r = classify(0.95, 0.5);
  EXPECT_FALSE(r.joint_hypo);
  EXPECT_FALSE(r.hypo_by_h);
  EXPECT_FALSE(r.toral_hypo);
  EXPECT_TRUE(r.agrees_h);
}

TEST(Classify, SphericalThresholdSeparates) {
  const double y = 0.4;
  const double xs = spherical_hypo_threshold(y);
  EXPECT_TRUE(classify(xs - 1e-3, y, 12, 1).spherical_hypo);
  EXPECT_FALSE(classify(xs + 1e-3, y, 12, 1).spherical_hypo);
}

TEST(ProbeLadder, MarginsRespected) {
  for (double y : {0.1, 0.5, 0.9}) {
    const auto xs = probe_ladder(y, 20);
    ASSERT_EQ(xs.size(), 20u);
    const auto t = thresholds(y);
    for (double x : xs) {
      for (double c : {t.s, t.h, t.ca, t.pa, spherical_hypo_threshold(y)}) {
        EXPECT_GE(std::abs(x - c), kBoundaryMargin) << y << " " << x;
      }
    }
  }
}

TEST(RegionScan, SmallGridCsv) {
  ScanOptions opts;
  opts.grid = 3;
  opts.ladder = 4;
  opts.max_k = 2;
  std::ostringstream os;
  region_scan(opts, os);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "y,s,h,CA,PA,x,joint_hypo,toral_hypo,spherical_hypo,khypo2,khypo3");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 10);
  }
  EXPECT_EQ(rows, 12);
  std::ostringstream again;
  region_scan(opts, again);
  EXPECT_EQ(os.str(), again.str());
}

TEST(RegionScan, Errors) {
  ScanOptions opts;
  opts.grid = 1;
  std::ostringstream os;
  EXPECT_THROW(region_scan(opts, os), DomainError);
  opts.grid = 2;
  opts.ladder = 2;
  EXPECT_THROW(region_scan(opts, std::string("/nonexistent/dir/scan.csv")), IoError);
}
