#pragma once

#include "hhbounds/function_spec.hpp"

namespace hh {

/// Residual |LHS - RHS| of the integral identity behind the midpoint
/// bounds:
///
///   f((a+b)/2) - (1/(b-a)) \int_a^b f(x) dx
///     = ((b-a)/4) [ \int_0^1 t f'(t(a+b)/2 + (1-t)a) dt
///                 + \int_0^1 (t-1) f'(tb + (1-t)(a+b)/2) dt ].
///
/// The two t-integrals are evaluated independently so a failure localizes
/// to one kernel. All integrals use the adaptive quadrature at tol.
double midpoint_identity_residual(const FunctionSpec& spec, const Interval& iv,
                                  double tol);

}  // namespace hh
