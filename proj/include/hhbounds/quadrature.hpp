#pragma once

#include <cstddef>

#include "hhbounds/function_spec.hpp"

namespace hh {

inline constexpr double kDefaultQuadTol = 1e-10;
inline constexpr std::size_t kDefaultMaxPanels = std::size_t{1} << 20;

struct QuadResult {
  double value = 0.0;
  // Accumulated Richardson estimate; <= tol unless the integrand's scale
  // pushed panels to the roundoff floor, where the estimate reports the
  // attainable accuracy instead.
  double error_estimate = 0.0;
  std::size_t subdivisions = 0;
};

/// Adaptive composite Simpson over [a, b] with a Richardson error
/// estimate. Subdivision is leftmost-first and the evaluation order is
/// fixed, so identical inputs give bit-identical outputs. Throws
/// DomainError unless a < b, PreconditionError unless tol > 0,
/// NonFiniteError on a non-finite sample, and MaxSubdivisionError when
/// the panel budget runs out.
QuadResult integrate(const RealFn& g, double a, double b,
                     double tol = kDefaultQuadTol,
                     std::size_t max_panels = kDefaultMaxPanels);

}  // namespace hh
