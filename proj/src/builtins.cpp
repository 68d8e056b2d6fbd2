#include "hhbounds/builtins.hpp"

#include <cmath>
#include <cstdio>

#include "hhbounds/errors.hpp"

namespace hh {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

std::string BuiltinSpec::label() const {
  if (family == "power") return "power_" + fmt(n);
  if (family == "exp") return "exp_" + fmt(scale);
  if (family == "affine") return "affine_" + fmt(c0) + "_" + fmt(c1);
  if (family == "shifted_square") return "shiftsq_" + fmt(center);
  if (family == "sqrt") return "sqrt";
  return family;
}

std::optional<int> BuiltinSpec::integral_power() const {
  if (family != "power") return std::nullopt;
  const double rounded = std::nearbyint(n);
  if (rounded != n || std::abs(rounded) < 2.0) return std::nullopt;
  return static_cast<int>(rounded);
}

const std::vector<std::string>& builtin_family_names() {
  static const std::vector<std::string> names = {
      "power", "exp", "affine", "shifted_square", "sqrt"};
  return names;
}

bool is_known_builtin_family(const std::string& family) {
  for (const auto& name : builtin_family_names()) {
    if (name == family) return true;
  }
  return false;
}

FunctionSpec make_power(double n, double domain_upper) {
  return FunctionSpec(
      [n](double x) { return std::pow(x, n); },
      RealFn([n](double x) { return n * std::pow(x, n - 1.0); }), domain_upper,
      "power_" + fmt(n));
}

FunctionSpec make_builtin(const BuiltinSpec& spec, double domain_upper) {
  const std::string label = spec.label();
  if (spec.family == "power") {
    return make_power(spec.n, domain_upper);
  }
  if (spec.family == "exp") {
    const double c = spec.scale;
    return FunctionSpec([c](double x) { return std::exp(c * x); },
                        RealFn([c](double x) { return c * std::exp(c * x); }),
                        domain_upper, label);
  }
  if (spec.family == "affine") {
    const double c0 = spec.c0;
    const double c1 = spec.c1;
    return FunctionSpec([c0, c1](double x) { return c0 + c1 * x; },
                        RealFn([c1](double) { return c1; }), domain_upper,
                        label);
  }
  if (spec.family == "shifted_square") {
    const double c = spec.center;
    return FunctionSpec(
        [c](double x) { return (x - c) * (x - c); },
        RealFn([c](double x) { return 2.0 * (x - c); }), domain_upper, label);
  }
  if (spec.family == "sqrt") {
    return FunctionSpec(
        [](double x) { return std::sqrt(x); },
        RealFn([](double x) { return 0.5 / std::sqrt(x); }), domain_upper,
        label);
  }
  throw ConfigError("unknown builtin family '" + spec.family + "'");
}

}  // namespace hh
