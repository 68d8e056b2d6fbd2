#include "hhbounds/identity.hpp"

#include <cmath>

#include "hhbounds/quadrature.hpp"

namespace hh {

double midpoint_identity_residual(const FunctionSpec& spec, const Interval& iv,
                                  double tol) {
  const double lhs = midpoint_gap(spec, iv, tol, /*signed_value=*/true);

  const double a = iv.a;
  const double b = iv.b;
  const double mid = iv.midpoint();

  // The two kernels are integrated separately so a failure localizes.
  const QuadResult first = integrate(
      [&](double t) { return t * derivative_at(spec, t * mid + (1.0 - t) * a); },
      0.0, 1.0, tol);
  const QuadResult second = integrate(
      [&](double t) {
        return (t - 1.0) * derivative_at(spec, t * b + (1.0 - t) * mid);
      },
      0.0, 1.0, tol);

  const double rhs = iv.width() / 4.0 * (first.value + second.value);
  return std::abs(lhs - rhs);
}

}  // namespace hh
