#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "hhbounds/function_spec.hpp"

namespace hh {

inline constexpr int kDefaultCertGrid = 33;
inline constexpr double kDefaultCertTol = 1e-9;

enum class CertStatus { pass, fail, inconclusive };

/// The (x, y, t) triple realizing the worst sampled violation. For the
/// pointwise checks (nonnegativity, anchor value) y == x and t == 0.
struct Witness {
  double x = 0.0;
  double y = 0.0;
  double t = 0.0;
};

/// Outcome of a sampled hypothesis check. A pass is evidence on the grid,
/// not a proof. status == fail iff worst_violation > tolerance, and only
/// then is a witness present. Evaluation failures on part of the grid
/// demote the result to inconclusive; they never upgrade to pass.
struct Certificate {
  CertStatus status = CertStatus::inconclusive;
  double worst_violation = 0.0;
  std::optional<Witness> witness;
  std::size_t samples = 0;
  double tolerance = 0.0;
};

const char* to_string(CertStatus s);

/// Samples g(t*x + m*(1-t)*y) <= t*g(x) + m*(1-t)*g(y) on a uniform
/// grid_n^3 grid over [0, upper]^2 x [0, 1].
Certificate certify_m_convex(const RealFn& g, MParam m, double upper,
                             int grid_n = kDefaultCertGrid,
                             double tol = kDefaultCertTol);

/// Reversed inequality of certify_m_convex.
Certificate certify_m_concave(const RealFn& g, MParam m, double upper,
                              int grid_n = kDefaultCertGrid,
                              double tol = kDefaultCertTol);

/// Plain convexity sampled on [a, b] (the m = 1 combination check
/// restricted to the interval).
Certificate certify_convex_on(const RealFn& f, const Interval& iv,
                              int grid_n = kDefaultCertGrid,
                              double tol = kDefaultCertTol);

/// Concavity sampled on [a, b] plus f >= -tol at every grid point.
Certificate certify_concave_nonneg(const RealFn& f, const Interval& iv,
                                   int grid_n = kDefaultCertGrid,
                                   double tol = kDefaultCertTol);

/// Convexity sampled on [a, b], f >= -tol, and |f(a)| <= tol.
Certificate certify_thunsdorff(const RealFn& f, const Interval& iv,
                               int grid_n = kDefaultCertGrid,
                               double tol = kDefaultCertTol);

/// Optional class-membership anchor g(0) <= tol. The bound statements
/// hypothesize the combination inequality only, so this is exposed
/// separately rather than folded into certify_m_convex.
bool anchor_nonpositive(const RealFn& g, double tol = kDefaultCertTol);

std::string summarize(const Certificate& c);

}  // namespace hh
