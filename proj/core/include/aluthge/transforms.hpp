#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "aluthge/diagram.hpp"
#include "aluthge/truncation.hpp"

namespace aluthge {

inline constexpr std::size_t kDefaultWindow = 12;

// ---------------------------------------------------------------------------
// Toral transform: each T_i replaced by |T_i|^{1/2} U_i |T_i|^{1/2}.

struct ToralCondition {
  bool holds = false;
  double alpha_residual = 0.0;  // alpha_(k1,k2+1) alpha_(k1+1,k2+1) vs alpha_(k1+1,k2) alpha_(k1,k2+2)
  double beta_residual = 0.0;   // beta_(k1+1,k2) beta_(k1+1,k2+1) vs beta_(k1,k2+1) beta_(k1+2,k2)
  LatticePoint worst{};
  double candidate_residual = 0.0;  // commutativity residual of the transformed weights
  bool candidate_commutes = false;
};

struct ToralResult {
  WeightDiagram candidate;
  bool commuting = false;
  ToralCondition condition;
};

/// Closed-form commutativity test for the toral transform on [0,window]^2,
/// cross-checked against a residual scan of the transformed weights.
/// Throws InternalConsistencyError when the two disagree.
ToralCondition toral_commutativity_test(const WeightDiagram& w, std::size_t window);

/// alpha~_k = sqrt(alpha_k alpha_{k+e1}), beta~_k = sqrt(beta_k beta_{k+e2}).
/// Non-commuting candidates are returned with commuting == false.
ToralResult toral_transform(const WeightDiagram& w, std::size_t window = kDefaultWindow);

// ---------------------------------------------------------------------------
// Spherical transform: (sqrt(P) U1 sqrt(P), sqrt(P) U2 sqrt(P)) from the joint
// polar decomposition T_i = U_i P, P = sqrt(T1*T1 + T2*T2).

/// P, U1, U2 coefficients on [0,window]^2, indexed k1 * (window + 1) + k2.
struct SphericalPolarData {
  std::size_t window = 0;
  std::vector<double> p;
  std::vector<double> u1;
  std::vector<double> u2;
};

SphericalPolarData spherical_polar_data(const WeightDiagram& w, std::size_t window);

/// alpha^_k = alpha_k sqrt(P_{k+e1}/P_k), beta^_k = beta_k sqrt(P_{k+e2}/P_k).
/// The result is checked to commute on [0,window]^2 (InternalConsistencyError otherwise);
/// a vanishing P_k there raises DegeneratePolarError.
WeightDiagram spherical_transform(const WeightDiagram& w, std::size_t window = kDefaultWindow);

struct PartialIsometryReport {
  double residual = 0.0;  // max |P Q^2 P - P^2| over interior basis vectors
  double q2_min = 0.0;    // range of the interior diagonal of Q^2
  double q2_max = 0.0;
};

/// Checks P Q^2 P = P^2 with Q^2 = U1*U1 + U2*U2 on a level-N truncation.
/// Interior = basis vectors whose U1 and U2 images stay in the window.
PartialIsometryReport joint_partial_isometry_check(const WeightDiagram& w, std::size_t level);

enum class TransformKind { Toral, Spherical };

std::string_view to_string(TransformKind kind);
TransformKind transform_kind_from_string(std::string_view name);

WeightDiagram apply_transform(const WeightDiagram& w, TransformKind kind,
                              std::size_t window = kDefaultWindow);

/// max_i ||T_i|| of a truncated pair.
double pair_norm(const TruncatedPair& tp);

/// max_i ||T^_i - T^'_i|| between the selected transforms on a level-N truncation.
double transform_distance(const WeightDiagram& w, const WeightDiagram& w2, TransformKind which,
                          std::size_t level);

// ---------------------------------------------------------------------------
// Norm-continuity estimates for the spherical transform.

/// f_n(t) = sqrt(max(1/n, t)).
double continuity_cutoff(double t, unsigned long n);

struct BoundCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack() const { return rhs - lhs; }
};

/// A_n = f_n(P) of the truncated pair and the five estimates
///   (i)   ||A_n|| <= max(n^{-1/2}, ||P||^{1/2})
///   (ii)  ||P A_n^{-1}|| <= ||P||^{1/2}
///   (iii) ||A_n - P^{1/2}|| <= n^{-1/2}
///   (iv)  ||P A_n^{-1} - P^{1/2}|| <= n^{-1/2} / 4
///   (v)   ||A_n T_i A_n^{-1} - P^{1/2} U_i P^{1/2}|| <= 5/4 n^{-1/2} ||T_i||^{1/2}
/// (v) reports the coordinate i with the smaller slack.
struct ContinuityProbe {
  unsigned long n = 1;
  std::size_t level = 0;
  std::vector<double> a_n_diag;
  std::array<BoundCheck, 5> bounds;

  double min_slack() const;
};

/// Uses the truncated pair's own joint polar decomposition (P^2 = T1*T1 + T2*T2
/// of the finite matrices), which is itself a commuting pair.
ContinuityProbe continuity_probe(const WeightDiagram& w, std::size_t level, unsigned long n);

}  // namespace aluthge
