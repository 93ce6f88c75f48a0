#pragma once

namespace aluthge {

// Absolute tolerance on weights and weight products of order one.
inline constexpr double kWeightTolerance = 1e-12;
// Relative tolerance on moments (products of up to ~40 squared weights).
inline constexpr double kMomentTolerance = 1e-10;
// Floor on denominators of relative moment errors.
inline constexpr double kMomentFloor = 1e-30;
// PSD verdict: min eigenvalue >= -kPsdTolerance * max(1, ||M||).
inline constexpr double kPsdTolerance = 1e-10;
// Power iteration for operator norms.
inline constexpr double kNormTolerance = 1e-10;
inline constexpr int kNormMaxIterations = 10000;

}  // namespace aluthge
