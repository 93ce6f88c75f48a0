#include "aluthge/one_var.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "aluthge/error.hpp"
#include "aluthge/measures.hpp"

namespace aluthge {
namespace {

std::string join(const std::vector<double>& values) {
  std::ostringstream os;
  os.precision(17);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    os << values[i];
  }
  return os.str();
}

double parse_double(std::string_view s) {
  std::string owned(s);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(owned, &used);
  } catch (const std::exception&) {
    throw DomainError("cannot parse number '" + owned + "'");
  }
  if (used != owned.size()) throw DomainError("cannot parse number '" + owned + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<double> parse_list(std::string_view s) {
  std::vector<double> out;
  for (auto part : split(s, ',')) out.push_back(parse_double(part));
  return out;
}

void require_positive(const std::vector<double>& values, const char* what) {
  if (values.empty()) throw InvalidWeightsError(std::string(what) + ": empty weight list");
  for (double v : values) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw InvalidWeightsError(std::string(what) + ": weights must be positive and finite");
    }
  }
}

}  // namespace

OneVarWeights::OneVarWeights(Fn fn, std::string tag, bool reproducible)
    : fn_(std::move(fn)), tag_(std::move(tag)), reproducible_(reproducible) {}

OneVarWeights OneVarWeights::constant(double c) {
  require_positive({c}, "const");
  return OneVarWeights([c](std::size_t) { return c; }, "const:" + join({c}), true);
}

OneVarWeights OneVarWeights::periodic(std::vector<double> cycle) {
  require_positive(cycle, "periodic");
  auto tag = "periodic:" + join(cycle);
  auto data = std::make_shared<const std::vector<double>>(std::move(cycle));
  return OneVarWeights([data](std::size_t j) { return (*data)[j % data->size()]; },
                       std::move(tag), true);
}

OneVarWeights OneVarWeights::flat_tail(std::vector<double> head) {
  require_positive(head, "flat");
  auto tag = "flat:" + join(head);
  auto data = std::make_shared<const std::vector<double>>(std::move(head));
  return OneVarWeights(
      [data](std::size_t j) { return (*data)[std::min(j, data->size() - 1)]; },
      std::move(tag), true);
}

OneVarWeights OneVarWeights::stampfli(double a, double b, double c) {
  const StampfliData d = stampfli_data(a, b, c);
  auto w = atomic({d.s0, d.s1}, {d.rho0, d.rho1});
  w.tag_ = "stampfli:" + join({a, b, c});
  return w;
}

OneVarWeights OneVarWeights::atomic(std::vector<double> atoms, std::vector<double> masses) {
  if (atoms.empty() || atoms.size() != masses.size()) {
    throw DomainError("atomic: atoms and masses must be non-empty and of equal length");
  }
  require_positive(atoms, "atomic atoms");
  require_positive(masses, "atomic masses");
  std::ostringstream tag;
  tag.precision(17);
  tag << "atomic:";
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i) tag << ',';
    tag << atoms[i] << '@' << masses[i];
  }
  // Normalise so gamma_0 = 1.
  double total = 0.0;
  for (double m : masses) total += m;
  for (double& m : masses) m /= total;
  const double smax = *std::max_element(atoms.begin(), atoms.end());
  struct Measure {
    std::vector<double> ratio;  // s_i / smax
    std::vector<double> s;
    std::vector<double> rho;
  };
  auto mu = std::make_shared<Measure>();
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    mu->ratio.push_back(atoms[i] / smax);
    mu->s.push_back(atoms[i]);
    mu->rho.push_back(masses[i]);
  }
  // omega_j^2 = gamma_{j+1} / gamma_j, evaluated with powers of s_i/smax so
  // that large j neither overflows nor underflows.
  auto fn = [mu = std::shared_ptr<const Measure>(mu)](std::size_t j) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < mu->s.size(); ++i) {
      const double p = mu->rho[i] * std::pow(mu->ratio[i], static_cast<double>(j));
      num += p * mu->s[i];
      den += p;
    }
    return std::sqrt(num / den);
  };
  OneVarWeights out(std::move(fn), tag.str(), true);
  out.atoms_ = std::make_shared<const OneVarAtoms>(OneVarAtoms{mu->s, mu->rho});
  return out;
}

OneVarWeights OneVarWeights::from_function(Fn fn, std::string tag) {
  return OneVarWeights(std::move(fn), std::move(tag), false);
}

OneVarWeights OneVarWeights::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw DomainError("weight sequence '" + std::string(text) + "' lacks a kind prefix");
  }
  const auto kind = text.substr(0, colon);
  const auto body = text.substr(colon + 1);
  if (kind == "const") return constant(parse_double(body));
  if (kind == "periodic") return periodic(parse_list(body));
  if (kind == "flat") return flat_tail(parse_list(body));
  if (kind == "stampfli") {
    auto v = parse_list(body);
    if (v.size() != 3) throw DomainError("stampfli needs exactly three values a,b,c");
    return stampfli(v[0], v[1], v[2]);
  }
  if (kind == "atomic") {
    std::vector<double> atoms;
    std::vector<double> masses;
    for (auto part : split(body, ',')) {
      auto at = part.find('@');
      if (at == std::string_view::npos) throw DomainError("atomic entries are s@rho");
      atoms.push_back(parse_double(part.substr(0, at)));
      masses.push_back(parse_double(part.substr(at + 1)));
    }
    return atomic(std::move(atoms), std::move(masses));
  }
  throw DomainError("unknown weight sequence kind '" + std::string(kind) + "'");
}

OneVarWeights OneVarWeights::shifted(std::size_t by) const {
  auto inner = fn_;
  return from_function([inner, by](std::size_t j) { return inner(j + by); },
                       "shifted(" + std::to_string(by) + ";" + tag_ + ")");
}

OneVarWeights OneVarWeights::scaled(double c) const {
  if (!(c > 0.0)) throw InvalidWeightsError("scale factor must be positive");
  auto inner = fn_;
  std::ostringstream tag;
  tag.precision(17);
  tag << "scaled(" << c << ";" << tag_ << ")";
  return from_function([inner, c](std::size_t j) { return c * inner(j); }, tag.str());
}

void OneVarWeights::validate(std::size_t last) const {
  for (std::size_t j = 0; j <= last; ++j) {
    const double w = fn_(j);
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw InvalidWeightsError("omega_" + std::to_string(j) + " of " + tag_ +
                                " is not positive");
    }
  }
}

double OneVarWeights::sup(std::size_t last) const {
  double m = 0.0;
  for (std::size_t j = 0; j <= last; ++j) m = std::max(m, fn_(j));
  return m;
}

std::vector<double> one_var_moments(const OneVarWeights& omega, std::size_t count) {
  std::vector<double> gamma(count + 1);
  gamma[0] = 1.0;
  for (std::size_t j = 0; j < count; ++j) {
    const double w = omega(j);
    gamma[j + 1] = w * w * gamma[j];
  }
  return gamma;
}

}  // namespace aluthge
