#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "aluthge/diagram.hpp"
#include "aluthge/one_var.hpp"

namespace aluthge {

inline constexpr std::uint64_t kDefaultSeed = 20240521;

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

using Rng = std::mt19937_64;

// ---------------------------------------------------------------------------
// Random instance generators. All are deterministic functions of the engine state.

/// flat:w0,...,w_{len-1} with w0 in [0.3, 1] and positive increments; bounded by 3.
OneVarWeights random_monotone_omega(Rng& rng, std::size_t head = 4);

/// Berger measure with 2 or 3 atoms in [0.2, 2] and random masses.
OneVarWeights random_atomic_omega(Rng& rng);

/// Commuting table on [0,size-1]^2 from log gamma(m,n) = sum_{i<m} a_i + sum_{j<n} b_j
/// + noise * u(m,n), u iid in [-1,1]. With noise 0 gamma is a product and the
/// weights are alpha_k = alpha(k1), beta_k = beta(k2).
WeightDiagram random_commuting_table(Rng& rng, std::size_t size, double noise);

/// Commuting table with alpha nondecreasing in k1 and beta nondecreasing in k2:
/// log gamma(m,n) = sum_{i<m} A_i + sum_{j<n} B_j - lambda min(m,K) min(n,K),
/// A, B nondecreasing and constant from K on, lambda >= 0.
WeightDiagram random_monotone_table(Rng& rng, std::size_t size);

/// Moments of w with gamma(m0,n0) multiplied by (1 + eps); materialised on
/// [0,size-1]^2. w must be readable on [0,size]^2. Commuting by construction.
WeightDiagram perturbed_at(const WeightDiagram& w, LatticePoint at, double eps, std::size_t size);

// ---------------------------------------------------------------------------
// Acceptance experiments.

CriterionResult crossing_point_criterion();                          // 1
CriterionResult prop2_agreement_criterion();                         // 2
CriterionResult prop2_counterexample_criterion();                    // 3
CriterionResult prop2_subnormal_evidence_criterion(std::uint64_t seed);   // 4
CriterionResult prop1_criterion(std::uint64_t seed);                 // 5
CriterionResult propscaling2_criterion(std::uint64_t seed);          // 6
CriterionResult prehypo_criterion(std::uint64_t seed);               // 7
CriterionResult thm1_criterion(std::uint64_t seed);                  // 8
CriterionResult quasinormal3_criterion(std::uint64_t seed);          // 9
CriterionResult quasinormal2_criterion();                            // 10
CriterionResult quasinormal_subnormal_criterion(std::uint64_t seed); // 11
CriterionResult re4_criterion(std::uint64_t seed);                   // 12

CriterionResult run_criterion(int id, std::uint64_t seed = kDefaultSeed);
std::vector<CriterionResult> run_all_criteria(std::uint64_t seed = kDefaultSeed);

/// prop2 -> 1..4, prop1 -> 5, propscaling2 -> 6, prehypo -> 7, thm1 -> 8,
/// quasinormal2 -> 9..11, re4 -> 12. Throws DomainError for unknown targets.
std::vector<int> criteria_for_target(std::string_view target);
const std::vector<std::string>& reproduce_targets();

/// The diagrams of criterion 9: 25 completions followed by 25 others.
struct QuasinormalCase {
  WeightDiagram w;
  bool completion = false;
  double constant = 0.0;  // completions only
  std::string label;
};
std::vector<QuasinormalCase> quasinormal_cases(std::uint64_t seed);

}  // namespace aluthge
