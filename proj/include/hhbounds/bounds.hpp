#pragma once

#include <array>

#include "hhbounds/certify.hpp"
#include "hhbounds/function_spec.hpp"

namespace hh {

enum class BoundFamily { T, U, V, K, L };

const char* to_string(BoundFamily f);

// Two variants closer than this are treated as tied; the smaller index
// wins so golden files stay stable.
inline constexpr double kArgminTieTol = 1e-12;

/// The four variant values of one bound family, their minimum, and the
/// smallest index attaining it (1-based).
struct BoundSet {
  BoundFamily family = BoundFamily::T;
  std::array<double, 4> values{};
  double minimum = 0.0;
  int argmin = 1;

  static BoundSet of(BoundFamily family, std::array<double, 4> values);
};

/// Midpoint-gap bound for |f'| m-convex: min of four derivative
/// combinations, each carrying the (b-a)/12 prefactor. Requires
/// b/m <= domain_upper since the variants evaluate f' at a/m, b/m and
/// (a+b)/(2m).
BoundSet t_bounds(const FunctionSpec& spec, const Interval& iv, MParam m);

/// Hoelder-based midpoint bound for |f'|^q m-convex (q conjugate to p).
/// tight carries the (b-a)/(4(p+1)^{1/p}) * (1/2)^{1/q} prefactor; loose
/// replaces (p+1)^{1/p} by its supremum 1, matching the second displayed
/// line. tight.minimum <= loose.minimum always.
struct UBounds {
  BoundSet tight;
  BoundSet loose;
};

UBounds u_bounds(const FunctionSpec& spec, const Interval& iv, MParam m,
                 const ExponentPair& exps);

/// Power-mean-based midpoint bound for |f'|^q m-convex, q >= 1. Values
/// carry the (b-a)/4 * (1/2)^{1-1/q} prefactor; at q = 1 they coincide
/// with t_bounds.
BoundSet v_bounds(const FunctionSpec& spec, const Interval& iv, MParam m,
                  double q);

/// (b-a)(|f'(a)|+|f'(b)|)/8, the classical trapezoid-gap bound.
double classical_trapezoid_bound(const FunctionSpec& spec, const Interval& iv);

/// (b-a)/4 * ((|f'(a)|^q+|f'(b)|^q)/2)^{1/q}; one value bounds the
/// trapezoid gap and the same value bounds the midpoint gap.
struct PearcePecaricBounds {
  double trapezoid = 0.0;
  double midpoint = 0.0;
};

PearcePecaricBounds pearce_pecaric_bounds(const FunctionSpec& spec,
                                          const Interval& iv, double q);

/// (b-a)/4 * min of the two mixed q-means over {a, b/m} and {a/m, b},
/// the m-convex midpoint baseline.
double bakula_midpoint_bound(const FunctionSpec& spec, const Interval& iv,
                             MParam m, double q);

/// The three-term chain for m-convex f:
///   f((a+b)/2) <= avg of (f(x)+m f(x/m))/2 <= ((m+1)/4)[...].
struct SandwichResult {
  double left = 0.0;
  double middle = 0.0;
  double right = 0.0;
};

SandwichResult dragomir_sandwich(const FunctionSpec& spec, const Interval& iv,
                                 MParam m, double tol);

/// Both sides of the concave-mean inequality:
///   lhs = (2^q/(q+1)) * ((1/(b-a)) \int f)^q,  rhs = (1/(b-a)) \int f^q.
/// For nonnegative concave f and q >= 1, lhs >= rhs; for nonnegative
/// convex f with f(a) = 0 the inequality reverses.
struct FavardSides {
  double lhs = 0.0;
  double rhs = 0.0;
};

FavardSides favard_sides(const FunctionSpec& spec, const Interval& iv,
                         double q, double tol);

/// Which direction of the product inequality is asserted.
enum class ProductDirection {
  lower_bound,  // concave/m-concave pair: lhs >= rhs
  upper_bound,  // convex/m-convex pair with f(0)=g(0)=0: lhs <= rhs
};

const char* to_string(ProductDirection d);

struct ProductBoundResult {
  double lhs = 0.0;  // f((a+b)/2) * g((a+b)/2)
  double rhs = 0.0;  // ((p+1)^{1/p}(q+1)^{1/q})/16 * averaged product
  ProductDirection direction = ProductDirection::lower_bound;
};

/// Certifies the concave/m-concave hypotheses first and falls back to the
/// convex/m-convex + zero-anchor pair; throws PreconditionError when
/// neither set of hypotheses passes.
ProductBoundResult product_bound(const FunctionSpec& f, const FunctionSpec& g,
                                 const Interval& iv, MParam m,
                                 const ExponentPair& exps, double tol,
                                 int grid_n = kDefaultCertGrid,
                                 double cert_tol = kDefaultCertTol);

/// Closed forms of the m = 1 specializations. The case hypothesis is
/// sampled (monotonicity of |f'|, vanishing of |f'| at the midpoint or at
/// both endpoints) and a failed check raises PreconditionError. q is the
/// power-mean exponent for the U and V families and is ignored for T.
enum class SpecialCase { general, increasing, decreasing, mid_zero, ends_zero };

const char* to_string(SpecialCase c);

double specialize_m1(BoundFamily family, const FunctionSpec& spec,
                     const Interval& iv, SpecialCase scase, double q = 1.0,
                     double hypothesis_tol = kDefaultCertTol);

}  // namespace hh
