#pragma once

#include <cstddef>
#include <vector>

#include "aluthge/diagram.hpp"

namespace aluthge {

/// gamma_(m,n) for 0 <= m + n <= maxdeg: products of squared weights along any
/// lattice path from (0,0) to (m,n).
class MomentTable {
 public:
  MomentTable(std::size_t maxdeg, std::vector<double> gamma);

  std::size_t maxdeg() const { return maxdeg_; }
  double operator()(std::size_t m, std::size_t n) const;

 private:
  static std::size_t offset(std::size_t m, std::size_t n, std::size_t maxdeg);

  std::size_t maxdeg_;
  std::vector<double> gamma_;
};

/// Row-first recursion, checked against the column-first one (relative 1e-12).
/// Throws NonCommutingError on path dependence.
MomentTable moments(const WeightDiagram& w, std::size_t maxdeg);

}  // namespace aluthge
