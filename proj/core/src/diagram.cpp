#include "aluthge/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "aluthge/error.hpp"

namespace aluthge {

std::string_view to_string(DiagramKind kind) {
  switch (kind) {
    case DiagramKind::Table: return "table";
    case DiagramKind::Theta: return "theta";
    case DiagramKind::Prop2: return "prop2";
    case DiagramKind::Thm1: return "thm1";
    case DiagramKind::QuasinormalCompletion: return "quasinormal-completion";
    case DiagramKind::Derived: return "derived";
  }
  return "derived";
}

DiagramKind diagram_kind_from_string(std::string_view name) {
  if (name == "table") return DiagramKind::Table;
  if (name == "theta") return DiagramKind::Theta;
  if (name == "prop2") return DiagramKind::Prop2;
  if (name == "thm1") return DiagramKind::Thm1;
  if (name == "quasinormal-completion") return DiagramKind::QuasinormalCompletion;
  if (name == "derived") return DiagramKind::Derived;
  throw DomainError("unknown diagram kind '" + std::string(name) + "'");
}

WeightDiagram::WeightDiagram(DiagramKind kind, WeightFn alpha, WeightFn beta,
                             DiagramParams params)
    : impl_(std::make_shared<const Impl>(
          Impl{kind, std::move(alpha), std::move(beta), std::move(params)})) {}

WeightDiagram WeightDiagram::scaled(double c) const {
  if (!(c > 0.0)) throw InvalidWeightsError("scale factor must be positive");
  auto self = *this;
  DiagramParams p;
  std::ostringstream note;
  note << "scaled by " << c;
  p.note = note.str();
  return WeightDiagram(
      DiagramKind::Derived, [self, c](LatticePoint k) { return c * self.alpha(k); },
      [self, c](LatticePoint k) { return c * self.beta(k); }, std::move(p));
}

CommutativityResidual commutativity_residual(const WeightDiagram& w, std::size_t window) {
  CommutativityResidual r;
  for (std::size_t k1 = 0; k1 <= window; ++k1) {
    for (std::size_t k2 = 0; k2 <= window; ++k2) {
      const LatticePoint k{k1, k2};
      const double lhs = w.alpha(k) * w.beta(k.shifted1());
      const double rhs = w.beta(k) * w.alpha(k.shifted2());
      const double d = std::abs(lhs - rhs);
      if (d > r.worst) {
        r.worst = d;
        r.at = k;
      }
    }
  }
  return r;
}

void require_commuting(const WeightDiagram& w, std::size_t window, double tol) {
  const auto r = commutativity_residual(w, window);
  if (r.worst > tol) {
    std::ostringstream os;
    os << "weights do not commute: residual " << r.worst << " at k = " << r.at;
    throw NonCommutingError(os.str());
  }
}

double weight_bound(const WeightDiagram& w, std::size_t window) {
  double bound = 0.0;
  for (std::size_t k1 = 0; k1 <= window; ++k1) {
    for (std::size_t k2 = 0; k2 <= window; ++k2) {
      const double a = w.alpha(k1, k2);
      const double b = w.beta(k1, k2);
      if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
        std::ostringstream os;
        os << "non-positive weight at k = " << LatticePoint{k1, k2};
        throw InvalidWeightsError(os.str());
      }
      bound = std::max({bound, a, b});
    }
  }
  return bound;
}

WeightDeviation max_weight_deviation(const WeightDiagram& a, const WeightDiagram& b,
                                     std::size_t window) {
  WeightDeviation d;
  for (std::size_t k1 = 0; k1 <= window; ++k1) {
    for (std::size_t k2 = 0; k2 <= window; ++k2) {
      const double e = std::max(std::abs(a.alpha(k1, k2) - b.alpha(k1, k2)),
                                std::abs(a.beta(k1, k2) - b.beta(k1, k2)));
      if (e > d.worst) {
        d.worst = e;
        d.at = {k1, k2};
      }
    }
  }
  return d;
}

}  // namespace aluthge
