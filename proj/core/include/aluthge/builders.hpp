#pragma once

#include <cstddef>
#include <functional>

#include "aluthge/diagram.hpp"
#include "aluthge/one_var.hpp"

namespace aluthge {

/// Number of leading omega entries (and lattice diagonals) validated eagerly by
/// the closed-form builders.
inline constexpr std::size_t kBuilderCheckWindow = 64;

/// Theta lift: alpha_k = beta_k = omega_{k1+k2}.
WeightDiagram build_theta(const OneVarWeights& omega);

/// The (x, y) family: alpha_(0,0) = beta_(0,0) = x, alpha_(0,k2) = y (k2 >= 1),
/// beta_(k1,0) = y (k1 >= 1), every other weight 1. Requires 0 < x, y < 1.
WeightDiagram build_prop2(double x, double y);

/// alpha_k = omega_{k1+k2}, beta_k = (y / omega_0) omega_{k1+k2}.
WeightDiagram build_thm1(const OneVarWeights& omega, double y);

/// Table diagram. With a flat tail the commutativity residual is checked on
/// [0, max(rows, cols) + 1]^2, which covers every distinct tail pattern; with
/// no tail, only inside the rectangle.
WeightDiagram build_table(TableData table);

/// Restriction to span{e_k : k1, k2 >= 1}, re-indexed: alpha'_k = alpha_{k+(1,1)}.
WeightDiagram core_of(const WeightDiagram& w);

/// Commuting diagram whose moments are gamma: alpha_k^2 = gamma(k+e1)/gamma(k),
/// beta_k^2 = gamma(k+e2)/gamma(k). Every positive gamma gives a commuting pair.
WeightDiagram diagram_from_moments(std::function<double(LatticePoint)> gamma,
                                   std::string note);

/// Materialises [0,window]^2 as a table. The flat tail is used when it keeps the
/// weights commuting; otherwise the tail rule is None.
TableData materialize(const WeightDiagram& w, std::size_t window);

}  // namespace aluthge
