#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hhbounds/function_spec.hpp"

namespace hh {

/// One entry of the built-in function registry. Campaigns reference
/// functions by family name plus parameters instead of parsing
/// expressions, which keeps the certification story sound.
///
///   power          x^n            (param n, real; integer n for means)
///   exp            exp(scale*x)   (param scale)
///   affine         c0 + c1*x
///   shifted_square (x - center)^2
///   sqrt           sqrt(x)
struct BuiltinSpec {
  std::string family;
  double n = 2.0;
  double scale = 1.0;
  double c0 = 0.0;
  double c1 = 1.0;
  double center = 0.0;

  std::string label() const;

  /// Integer power order when this builtin is x^n with integral n,
  /// |n| >= 2 (what the means bounds require).
  std::optional<int> integral_power() const;
};

bool is_known_builtin_family(const std::string& family);
const std::vector<std::string>& builtin_family_names();

/// Instantiates the builtin on [0, domain_upper] with its analytic
/// derivative attached.
FunctionSpec make_builtin(const BuiltinSpec& spec, double domain_upper);

/// Convenience for tests and the CLI: x^n on [0, domain_upper].
FunctionSpec make_power(double n, double domain_upper);

}  // namespace hh
