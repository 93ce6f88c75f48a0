#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace aluthge {

/// Weight sequence omega of a 1-variable weighted shift, shift(omega_0, omega_1, ...).
///
/// Sequences built from one of the textual forms below keep that form as their
/// tag, so they can be written to JSON and parsed back:
///
///   const:c                      omega_j = c
///   periodic:w0,w1,...           omega_j = w_{j mod n}
///   flat:w0,w1,...,wm            omega_j = w_min(j,m)
///   stampfli:a,b,c               Stampfli's subnormal completion of (sqrt a, sqrt b, sqrt c)
///   atomic:s0@r0,s1@r1,...       shift whose Berger measure is sum r_i delta_{s_i}
///
/// Derived sequences (shifted, scaled, from_function) are not reproducible.
/// Finitely atomic Berger measure sum rho_i delta_{s_i}, masses summing to 1.
struct OneVarAtoms {
  std::vector<double> s;
  std::vector<double> rho;
};

class OneVarWeights {
 public:
  using Fn = std::function<double(std::size_t)>;

  static OneVarWeights constant(double c);
  static OneVarWeights periodic(std::vector<double> cycle);
  static OneVarWeights flat_tail(std::vector<double> head);
  static OneVarWeights stampfli(double a, double b, double c);
  static OneVarWeights atomic(std::vector<double> atoms, std::vector<double> masses);
  static OneVarWeights from_function(Fn fn, std::string tag);
  static OneVarWeights parse(std::string_view text);

  double operator()(std::size_t j) const { return fn_(j); }
  const std::string& tag() const { return tag_; }
  bool reproducible() const { return reproducible_; }
  /// Berger measure when the sequence was built by atomic() or stampfli().
  const OneVarAtoms* atoms() const { return atoms_.get(); }

  /// j -> omega_{j + by}
  OneVarWeights shifted(std::size_t by) const;
  /// j -> c * omega_j
  OneVarWeights scaled(double c) const;

  /// Throws InvalidWeightsError unless omega_j > 0 and finite for j <= last.
  void validate(std::size_t last) const;
  double sup(std::size_t last) const;

 private:
  OneVarWeights(Fn fn, std::string tag, bool reproducible);

  Fn fn_;
  std::string tag_;
  bool reproducible_ = false;
  std::shared_ptr<const OneVarAtoms> atoms_;
};

/// gamma_0 = 1, gamma_{j+1} = omega_j^2 gamma_j for j < count.
std::vector<double> one_var_moments(const OneVarWeights& omega, std::size_t count);

}  // namespace aluthge
