#pragma once

#include <cstddef>
#include <iosfwd>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace aluthge {

/// Threshold curves of the (x, y) family on 0 < y < 1:
///   s(y)  = sqrt(1 / (2 - y^2))                         subnormality
///   h(y)  = sqrt((1 + y^2) / 2)                         joint hyponormality
///   CA(y) = (1 + y) / 2                                 toral transform hyponormal
///   PA(y) = 2(1 + y^2 - y^4) / ((1 + sqrt2)(1 + y^2)(sqrt(1 + y^2) - y^2))
struct Thresholds {
  double s = 0.0;
  double h = 0.0;
  double ca = 0.0;
  double pa = 0.0;
};

/// Throws DomainError outside (0,1).
Thresholds thresholds(double y);

/// Largest x for which the spherical transform of the family passes the
/// six-point test, in closed form: 1/sqrt(2(1 + y^2)) + y^2/(1 + y^2).
double spherical_hypo_threshold(double y);

/// Root of CA(y) = s(y) on (0.1, 0.9), i.e. (1 + y)^2 (2 - y^2) = 4, by bisection to 1e-10.
double crossing_q();

/// Bisection on [lo, hi] for a sign change of f; stops when the bracket is below tol.
double bisect(double lo, double hi, double tol, const std::function<double(double)>& f);

inline constexpr double kBoundaryMargin = 1e-6;
inline constexpr std::size_t kDefaultRegionLevel = 12;

struct RegionReport {
  double x = 0.0;
  double y = 0.0;
  Thresholds curves;

  // Closed-form verdicts.
  bool subnormal_by_s = false;
  bool hypo_by_h = false;
  bool toral_hypo_by_ca = false;
  bool spherical_hypo_by_pa = false;

  // Six-point verdicts on a level-N window.
  bool joint_hypo = false;
  bool toral_hypo = false;
  bool spherical_hypo = false;
  std::map<int, bool> khypo;  // order k -> verdict (k-hyponormality evidence)

  // Off-boundary agreement per part; false means the numeric verdict differs
  // from the closed form while x is at least kBoundaryMargin from the curve.
  bool agrees_h = true;
  bool agrees_ca = true;
  bool agrees_pa = true;
};

/// Closed-form and numerical verdicts for build_prop2(x, y) on level N.
/// k-hyponormality is evaluated for k = 2..max_k at level max(N, 4k + 2), and
/// only while the lower orders hold. The h and CA verdicts disagreeing off the
/// boundary raise InternalConsistencyError; the PA verdict is reported in agrees_pa.
RegionReport classify(double x, double y, std::size_t level = kDefaultRegionLevel,
                      int max_k = 3);

/// Probe ladder for one y: x_i = (i + 1/2) / count, nudged by 2e-6 until every
/// point is at least kBoundaryMargin from each of s, h, CA, PA and the numeric
/// spherical threshold.
std::vector<double> probe_ladder(double y, std::size_t count);

struct ScanOptions {
  std::size_t grid = 9;            // y_i = i / (grid + 1), i = 1..grid
  std::size_t level = kDefaultRegionLevel;
  std::size_t ladder = 20;
  int max_k = 3;                   // khypo columns for k = 2..3
};

/// Writes the CSV header
///   y,s,h,CA,PA,x,joint_hypo,toral_hypo,spherical_hypo,khypo2,khypo3
/// and one row per (y, x) in increasing y then x; reals with 12 significant
/// digits, verdicts as 1/0.
void region_scan(const ScanOptions& options, std::ostream& out);
void region_scan(const ScanOptions& options, const std::string& path);

}  // namespace aluthge
