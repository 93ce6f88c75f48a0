#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aluthge/lattice.hpp"
#include "aluthge/one_var.hpp"

namespace aluthge {

enum class DiagramKind { Table, Theta, Prop2, Thm1, QuasinormalCompletion, Derived };

std::string_view to_string(DiagramKind kind);
DiagramKind diagram_kind_from_string(std::string_view name);

/// What a table diagram does outside its stored rectangle.
enum class TailRule {
  Flat,  // repeat the nearest stored weight
  None,  // reading outside the rectangle is a WindowError
};

/// Row-major rectangle of weights: row index is k2, column index is k1.
struct TableData {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> alpha;
  std::vector<double> beta;
  TailRule tail = TailRule::Flat;

  double alpha_at(std::size_t k1, std::size_t k2) const { return alpha[k2 * cols + k1]; }
  double beta_at(std::size_t k1, std::size_t k2) const { return beta[k2 * cols + k1]; }
};

/// Construction parameters, kept for serialization and reporting.
struct DiagramParams {
  std::optional<OneVarWeights> omega;  // theta, thm1, completion row
  double x = 0.0;                      // prop2
  double y = 0.0;                      // prop2, thm1
  double constant = 0.0;               // completion
  std::size_t window = 0;              // completion
  std::optional<TableData> table;
  std::string note;                    // derived diagrams
};

/// A 2-variable weighted shift W_(alpha,beta) described by its weights.
/// Immutable; copies share the underlying evaluator.
class WeightDiagram {
 public:
  using WeightFn = std::function<double(LatticePoint)>;

  WeightDiagram(DiagramKind kind, WeightFn alpha, WeightFn beta, DiagramParams params);

  double alpha(LatticePoint k) const { return impl_->alpha(k); }
  double beta(LatticePoint k) const { return impl_->beta(k); }
  double alpha(std::size_t k1, std::size_t k2) const { return impl_->alpha({k1, k2}); }
  double beta(std::size_t k1, std::size_t k2) const { return impl_->beta({k1, k2}); }

  DiagramKind kind() const { return impl_->kind; }
  const DiagramParams& params() const { return impl_->params; }

  /// Diagram with every weight multiplied by c > 0.
  WeightDiagram scaled(double c) const;

 private:
  struct Impl {
    DiagramKind kind;
    WeightFn alpha;
    WeightFn beta;
    DiagramParams params;
  };
  std::shared_ptr<const Impl> impl_;
};

struct CommutativityResidual {
  double worst = 0.0;
  LatticePoint at{};
};

/// max over k in [0,window]^2 of |alpha_k beta_{k+e1} - beta_k alpha_{k+e2}|.
CommutativityResidual commutativity_residual(const WeightDiagram& w, std::size_t window);

/// Throws NonCommutingError naming the worst point when the residual exceeds tol.
void require_commuting(const WeightDiagram& w, std::size_t window, double tol);

/// Largest weight over [0,window]^2; also checks strict positivity.
double weight_bound(const WeightDiagram& w, std::size_t window);

struct WeightDeviation {
  double worst = 0.0;
  LatticePoint at{};
};

/// max over [0,window]^2 of |alpha - alpha'| and |beta - beta'|.
WeightDeviation max_weight_deviation(const WeightDiagram& a, const WeightDiagram& b,
                                     std::size_t window);

}  // namespace aluthge
