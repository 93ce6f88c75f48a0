#include "aluthge/regions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "aluthge/builders.hpp"
#include "aluthge/error.hpp"
#include "aluthge/parallel.hpp"
#include "aluthge/positivity.hpp"
#include "aluthge/transforms.hpp"

namespace aluthge {

namespace {

void require_unit_interval(double v, const char* name) {
  if (!(v > 0.0 && v < 1.0)) {
    throw DomainError(std::string(name) + " must lie in (0,1), got " + std::to_string(v));
  }
}

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

Thresholds thresholds(double y) {
  require_unit_interval(y, "y");
  const double y2 = y * y;
  Thresholds t;
  t.s = std::sqrt(1.0 / (2.0 - y2));
  t.h = std::sqrt((1.0 + y2) / 2.0);
  t.ca = (1.0 + y) / 2.0;
  t.pa = 2.0 * (1.0 + y2 - y2 * y2) /
         ((1.0 + std::sqrt(2.0)) * (1.0 + y2) * (std::sqrt(1.0 + y2) - y2));
  return t;
}

double spherical_hypo_threshold(double y) {
  require_unit_interval(y, "y");
  const double y2 = y * y;
  return 1.0 / std::sqrt(2.0 * (1.0 + y2)) + y2 / (1.0 + y2);
}

double bisect(double lo, double hi, double tol, const std::function<double(double)>& f) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0) == (fhi > 0)) throw DomainError("bisect: no sign change on the bracket");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double crossing_q() {
  return bisect(0.1, 0.9, 1e-10, [](double y) {
    return (1.0 + y) * (1.0 + y) * (2.0 - y * y) - 4.0;
  });
}

RegionReport classify(double x, double y, std::size_t level, int max_k) {
  require_unit_interval(x, "x");
  require_unit_interval(y, "y");
  if (level < 1) throw DomainError("classify: level must be >= 1");

  RegionReport r;
  r.x = x;
  r.y = y;
  r.curves = thresholds(y);
  r.subnormal_by_s = x <= r.curves.s;
  r.hypo_by_h = x <= r.curves.h;
  r.toral_hypo_by_ca = x <= r.curves.ca;
  r.spherical_hypo_by_pa = x <= r.curves.pa;

  const WeightDiagram w = build_prop2(x, y);
  const std::size_t window = level + 2;
  r.joint_hypo = joint_hyponormal(w, level, CrossCheck::None).joint;
  r.toral_hypo = joint_hyponormal(toral_transform(w, window).candidate, level, CrossCheck::None).joint;
  r.spherical_hypo =
      joint_hyponormal(spherical_transform(w, window), level, CrossCheck::None).joint;

  bool lower = r.joint_hypo;
  for (int k = 2; k <= max_k; ++k) {
    if (lower) {
      const std::size_t lk = std::max<std::size_t>(level, 4 * static_cast<std::size_t>(k) + 2);
      lower = k_hyponormal(w, k, lk).holds;
    }
    r.khypo[k] = lower;
  }

  auto off = [&](double curve) { return std::abs(x - curve) >= kBoundaryMargin; };
  r.agrees_h = !off(r.curves.h) || r.joint_hypo == r.hypo_by_h;
  r.agrees_ca = !off(r.curves.ca) || r.toral_hypo == r.toral_hypo_by_ca;
  r.agrees_pa = !off(r.curves.pa) || r.spherical_hypo == r.spherical_hypo_by_pa;

  if (!r.agrees_h || !r.agrees_ca) {
    std::ostringstream msg;
    msg << "classify(" << x << ", " << y << "): numeric verdict disagrees with "
        << (!r.agrees_h ? "h(y)" : "CA(y)") << " off the boundary";
    throw InternalConsistencyError(msg.str());
  }
  return r;
}

std::vector<double> probe_ladder(double y, std::size_t count) {
  const Thresholds t = thresholds(y);
  const double curves[] = {t.s, t.h, t.ca, t.pa, spherical_hypo_threshold(y)};
  std::vector<double> xs;
  xs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    double x = (static_cast<double>(i) + 0.5) / static_cast<double>(count);
    for (bool near = true; near;) {
      near = false;
      for (double c : curves) {
        if (std::abs(x - c) < kBoundaryMargin) {
          x += 2e-6;
          near = true;
        }
      }
    }
    xs.push_back(x);
  }
  return xs;
}

void region_scan(const ScanOptions& options, std::ostream& out) {
  if (options.grid < 2) throw DomainError("region_scan: grid must be >= 2");
  const std::size_t rows = options.grid;
  std::vector<std::string> chunks(rows);
  parallel_for(rows, [&](std::size_t i) {
    const double y = static_cast<double>(i + 1) / static_cast<double>(options.grid + 1);
    const Thresholds t = thresholds(y);
    std::ostringstream os;
    for (double x : probe_ladder(y, options.ladder)) {
      const RegionReport r = classify(x, y, options.level, options.max_k);
      os << fmt12(y) << ',' << fmt12(t.s) << ',' << fmt12(t.h) << ',' << fmt12(t.ca) << ','
         << fmt12(t.pa) << ',' << fmt12(x) << ',' << r.joint_hypo << ',' << r.toral_hypo << ','
         << r.spherical_hypo;
      for (int k = 2; k <= 3; ++k) {
        const auto it = r.khypo.find(k);
        os << ',' << (it != r.khypo.end() && it->second);
      }
      os << '\n';
    }
    chunks[i] = os.str();
  });
  out << "y,s,h,CA,PA,x,joint_hypo,toral_hypo,spherical_hypo,khypo2,khypo3\n";
  for (const auto& c : chunks) out << c;
  if (!out) throw IoError("region_scan: write failed");
}

void region_scan(const ScanOptions& options, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw IoError("region_scan: cannot open " + path);
  region_scan(options, f);
}

}  // namespace aluthge
