#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "aluthge/diagram.hpp"
#include "aluthge/one_var.hpp"

namespace aluthge {

/// Stampfli's subnormal completion of (sqrt a, sqrt b, sqrt c), 0 < a < b < c.
/// Its Berger measure is rho0 delta_{s0} + rho1 delta_{s1}, where s0, s1 are the
/// roots of s^2 - phi1 s - phi0 = 0.
struct StampfliData {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double phi0 = 0.0;
  double phi1 = 0.0;
  double s0 = 0.0;
  double s1 = 0.0;
  double rho0 = 0.0;
  double rho1 = 0.0;
};

/// Throws DomainError unless 0 < a < b < c.
StampfliData stampfli_data(double a, double b, double c);

struct StampfliShift {
  StampfliData data;
  OneVarWeights weights;
};

/// omega_j^2 = gamma_{j+1}/gamma_j with gamma_j = rho0 s0^j + rho1 s1^j.
StampfliShift stampfli(double a, double b, double c);

struct Atom {
  double s = 0.0;
  double t = 0.0;
  double rho = 0.0;
};

/// Finitely atomic probability measure on [0, inf)^2.
class AtomicMeasure2D {
 public:
  /// Throws DomainError unless masses are positive, sum to 1 (1e-12), atoms are
  /// distinct and coordinates non-negative.
  explicit AtomicMeasure2D(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  /// sum_i rho_i s_i^m t_i^n
  double moment(std::size_t m, std::size_t n) const;

 private:
  std::vector<Atom> atoms_;
};

struct QuasinormalVerdict {
  bool quasinormal = false;          // alpha^2 + beta^2 constant on the window
  std::optional<double> constant;    // C when quasinormal
  bool spherical_isometry = false;   // C == 1
  bool fixed_point = false;          // spherical transform equals W on the window
  bool constant_diagonal = false;    // interior diagonal of T1*T1 + T2*T2 constant
};

/// Constant-C test on [0,window]^2, with the fixed-point and operator-diagonal
/// characterisations evaluated alongside; InternalConsistencyError if they split.
/// w must be readable on [0,window+1]^2 (the transform looks one step ahead).
QuasinormalVerdict is_spherically_quasinormal(const WeightDiagram& w, std::size_t window);

inline constexpr std::size_t kDefaultCompletionWindow = 40;

/// Unique spherically quasinormal shift with zero-th row alpha_(k1,0) = omega_k1
/// and alpha^2 + beta^2 = C: beta_k = sqrt(C - alpha_k^2), then
/// alpha_{k+e2} = alpha_k beta_{k+e1} / beta_k row by row. Materialised on
/// [0,window]^2; reads outside raise WindowError. InfeasibleConstantError if
/// C <= alpha_k^2 anywhere it is needed.
/// When omega carries an atomic Berger measure xi (C > max supp xi required) the
/// row recursion, which amplifies round-off geometrically in k2, is replaced by
/// its exact solution gamma_(m,n) = int s^m (C - s)^n dxi(s).
WeightDiagram quasinormal_completion(const OneVarWeights& row0, double constant,
                                     std::size_t window = kDefaultCompletionWindow);

/// rho0 delta_(s0,s1) + rho1 delta_(s1,s0) from the Stampfli data of (a,b,c).
AtomicMeasure2D quasinormal2_measure(double a, double b, double c);

/// max over m + n <= maxdeg of |gamma_W(m,n) - mu(m,n)| / max(|mu(m,n)|, 1e-30).
double berger_atomic_verify(const WeightDiagram& w, const AtomicMeasure2D& mu,
                            std::size_t maxdeg);

/// Q_T(X) = T1* X T1 + T2* X T2 iterated on I. Returns the max over 0 <= n <= nmax
/// and interior k of |Q_T^n(I)_k - (Q_T(I)_k)^n| / max(1, (Q_T(I)_k)^n).
double qt_power_identity_check(const WeightDiagram& w, std::size_t nmax, std::size_t level);

/// Diagonal of Q_T^n(I) on [0, level - n]^2 (row-major in k1).
std::vector<double> qt_power_diagonal(const WeightDiagram& w, std::size_t n, std::size_t level);

struct Thm1DegreeRow {
  std::size_t m = 0;
  std::size_t n = 0;
  double weight_moment = 0.0;     // gamma of build_thm1(omega, y)
  double diagonal_moment = 0.0;   // gamma^{1var}_{m+n}(omega)
  double ratio = 0.0;             // weight / diagonal
  double predicted_sqrt = 0.0;    // sqrt(y/a)^n, point mass at (1, sqrt(y/a))
  double predicted_square = 0.0;  // (y/a)^{2n}, beta scaled by y/a
};

struct Thm1ProbeReport {
  double a = 0.0;
  double y = 0.0;
  std::vector<Thm1DegreeRow> rows;
  double max_dev_sqrt = 0.0;    // max |ratio / predicted_sqrt - 1|
  double max_dev_square = 0.0;  // max |ratio / predicted_square - 1|
};

/// Compares moments of the thm1 diagram against the two readings of the
/// convolution with a point mass; reports, never asserts.
Thm1ProbeReport thm1_measure_probe(const OneVarWeights& omega, double y, std::size_t maxdeg);

}  // namespace aluthge
