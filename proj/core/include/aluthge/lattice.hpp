#pragma once

#include <cstddef>
#include <ostream>

namespace aluthge {

/// Multi-index k = (k1, k2) of the basis vector e_k of l^2(Z_+^2).
struct LatticePoint {
  std::size_t k1 = 0;
  std::size_t k2 = 0;

  constexpr LatticePoint shifted1(std::size_t by = 1) const { return {k1 + by, k2}; }
  constexpr LatticePoint shifted2(std::size_t by = 1) const { return {k1, k2 + by}; }

  friend constexpr bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const LatticePoint& k) {
  return os << '(' << k.k1 << ',' << k.k2 << ')';
}

}  // namespace aluthge
