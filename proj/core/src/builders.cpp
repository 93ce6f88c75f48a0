#include "aluthge/builders.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "aluthge/error.hpp"
#include "aluthge/tolerances.hpp"

namespace aluthge {

WeightDiagram build_theta(const OneVarWeights& omega) {
  omega.validate(2 * kBuilderCheckWindow);
  DiagramParams p;
  p.omega = omega;
  auto w = [omega](LatticePoint k) { return omega(k.k1 + k.k2); };
  return WeightDiagram(DiagramKind::Theta, w, w, std::move(p));
}

WeightDiagram build_prop2(double x, double y) {
  if (!(x > 0.0 && x < 1.0) || !(y > 0.0 && y < 1.0)) {
    std::ostringstream os;
    os << "prop2 family needs 0 < x, y < 1 (got x = " << x << ", y = " << y << ")";
    throw DomainError(os.str());
  }
  DiagramParams p;
  p.x = x;
  p.y = y;
  auto alpha = [x, y](LatticePoint k) {
    if (k.k1 == 0 && k.k2 == 0) return x;
    if (k.k1 == 0) return y;
    return 1.0;
  };
  auto beta = [x, y](LatticePoint k) {
    if (k.k1 == 0 && k.k2 == 0) return x;
    if (k.k2 == 0) return y;
    return 1.0;
  };
  return WeightDiagram(DiagramKind::Prop2, alpha, beta, std::move(p));
}

WeightDiagram build_thm1(const OneVarWeights& omega, double y) {
  if (!(y > 0.0) || !std::isfinite(y)) throw InvalidWeightsError("thm1: y must be positive");
  omega.validate(2 * kBuilderCheckWindow);
  const double ratio = y / omega(0);
  DiagramParams p;
  p.omega = omega;
  p.y = y;
  return WeightDiagram(
      DiagramKind::Thm1, [omega](LatticePoint k) { return omega(k.k1 + k.k2); },
      [omega, ratio](LatticePoint k) { return ratio * omega(k.k1 + k.k2); }, std::move(p));
}

WeightDiagram build_table(TableData table) {
  if (table.rows == 0 || table.cols == 0 || table.alpha.size() != table.rows * table.cols ||
      table.beta.size() != table.rows * table.cols) {
    throw ShapeError("table: alpha and beta must both hold rows * cols entries");
  }
  for (std::size_t i = 0; i < table.alpha.size(); ++i) {
    if (!(table.alpha[i] > 0.0) || !(table.beta[i] > 0.0) || !std::isfinite(table.alpha[i]) ||
        !std::isfinite(table.beta[i])) {
      throw InvalidWeightsError("table: weights must be positive and finite");
    }
  }
  auto data = std::make_shared<const TableData>(table);
  auto locate = [data](LatticePoint k) {
    if (data->tail == TailRule::Flat) {
      return std::pair{std::min(k.k1, data->cols - 1), std::min(k.k2, data->rows - 1)};
    }
    if (k.k1 >= data->cols || k.k2 >= data->rows) {
      std::ostringstream os;
      os << "table without tail read outside its " << data->cols << "x" << data->rows
         << " rectangle at k = " << k;
      throw WindowError(os.str());
    }
    return std::pair{k.k1, k.k2};
  };
  DiagramParams p;
  p.table = table;
  WeightDiagram w(
      DiagramKind::Table,
      [data, locate](LatticePoint k) {
        auto [c, r] = locate(k);
        return data->alpha_at(c, r);
      },
      [data, locate](LatticePoint k) {
        auto [c, r] = locate(k);
        return data->beta_at(c, r);
      },
      std::move(p));

  // Residual at k reads k + e1 and k + e2.
  if (table.tail == TailRule::Flat) {
    require_commuting(w, std::max(table.rows, table.cols) + 1, kWeightTolerance);
  } else {
    for (std::size_t k1 = 0; k1 + 1 < table.cols; ++k1) {
      for (std::size_t k2 = 0; k2 + 1 < table.rows; ++k2) {
        const double d = std::abs(table.alpha_at(k1, k2) * table.beta_at(k1 + 1, k2) -
                                  table.beta_at(k1, k2) * table.alpha_at(k1, k2 + 1));
        if (d > kWeightTolerance) {
          std::ostringstream os;
          os << "weights do not commute: residual " << d << " at k = " << LatticePoint{k1, k2};
          throw NonCommutingError(os.str());
        }
      }
    }
  }
  return w;
}

WeightDiagram core_of(const WeightDiagram& w) {
  DiagramParams p;
  p.note = "core";
  return WeightDiagram(
      DiagramKind::Derived, [w](LatticePoint k) { return w.alpha(k.k1 + 1, k.k2 + 1); },
      [w](LatticePoint k) { return w.beta(k.k1 + 1, k.k2 + 1); }, std::move(p));
}

WeightDiagram diagram_from_moments(std::function<double(LatticePoint)> gamma,
                                   std::string note) {
  DiagramParams p;
  p.note = std::move(note);
  return WeightDiagram(
      DiagramKind::Derived,
      [gamma](LatticePoint k) { return std::sqrt(gamma(k.shifted1()) / gamma(k)); },
      [gamma](LatticePoint k) { return std::sqrt(gamma(k.shifted2()) / gamma(k)); },
      std::move(p));
}

TableData materialize(const WeightDiagram& w, std::size_t window) {
  TableData t;
  t.rows = window + 1;
  t.cols = window + 1;
  t.alpha.resize(t.rows * t.cols);
  t.beta.resize(t.rows * t.cols);
  for (std::size_t k2 = 0; k2 < t.rows; ++k2) {
    for (std::size_t k1 = 0; k1 < t.cols; ++k1) {
      t.alpha[k2 * t.cols + k1] = w.alpha(k1, k2);
      t.beta[k2 * t.cols + k1] = w.beta(k1, k2);
    }
  }
  t.tail = TailRule::Flat;
  try {
    (void)build_table(t);
  } catch (const NonCommutingError&) {
    t.tail = TailRule::None;
  }
  return t;
}

}  // namespace aluthge
