#include "aluthge/moments.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "aluthge/error.hpp"
#include "aluthge/tolerances.hpp"

namespace aluthge {

MomentTable::MomentTable(std::size_t maxdeg, std::vector<double> gamma)
    : maxdeg_(maxdeg), gamma_(std::move(gamma)) {}

std::size_t MomentTable::offset(std::size_t m, std::size_t n, std::size_t maxdeg) {
  // Rows m = 0..maxdeg, row m holds n = 0..maxdeg - m.
  return m * (maxdeg + 1) - m * (m - 1) / 2 + n;
}

double MomentTable::operator()(std::size_t m, std::size_t n) const {
  if (m + n > maxdeg_) throw WindowError("moment degree exceeds table maxdeg");
  return gamma_[offset(m, n, maxdeg_)];
}

MomentTable moments(const WeightDiagram& w, std::size_t maxdeg) {
  const std::size_t count = (maxdeg + 1) * (maxdeg + 2) / 2;
  std::vector<double> row_first(count);
  std::vector<double> col_first(count);
  auto at = [maxdeg](std::size_t m, std::size_t n) {
    return m * (maxdeg + 1) - m * (m - 1) / 2 + n;
  };

  // Row-first: along k2 = 0 to (m,0), then up the column k1 = m.
  for (std::size_t m = 0; m <= maxdeg; ++m) {
    double g = 1.0;
    for (std::size_t i = 0; i < m; ++i) g *= w.alpha(i, 0) * w.alpha(i, 0);
    for (std::size_t n = 0; m + n <= maxdeg; ++n) {
      row_first[at(m, n)] = g;
      g *= w.beta(m, n) * w.beta(m, n);
    }
  }
  // Column-first: along k1 = 0 to (0,n), then across the row k2 = n.
  for (std::size_t n = 0; n <= maxdeg; ++n) {
    double g = 1.0;
    for (std::size_t j = 0; j < n; ++j) g *= w.beta(0, j) * w.beta(0, j);
    for (std::size_t m = 0; m + n <= maxdeg; ++m) {
      col_first[at(m, n)] = g;
      g *= w.alpha(m, n) * w.alpha(m, n);
    }
  }

  for (std::size_t m = 0; m <= maxdeg; ++m) {
    for (std::size_t n = 0; m + n <= maxdeg; ++n) {
      const double a = row_first[at(m, n)];
      const double b = col_first[at(m, n)];
      const double rel = std::abs(a - b) / std::max(std::abs(a), kMomentFloor);
      if (rel > 1e-12) {
        std::ostringstream os;
        os << "moments are path dependent at (" << m << "," << n << "): relative deviation "
           << rel;
        throw NonCommutingError(os.str());
      }
    }
  }
  return MomentTable(maxdeg, std::move(row_first));
}

}  // namespace aluthge
