#pragma once

#include "hhbounds/bounds.hpp"
#include "hhbounds/function_spec.hpp"
#include "hhbounds/quadrature.hpp"

namespace hh {

/// (a+b)/2 for a, b >= 0.
double arithmetic_mean(double a, double b);

/// (b-a)/(ln b - ln a) for distinct positive a, b; a when a == b.
double logarithmic_mean(double a, double b);

/// [(b^{p+1}-a^{p+1})/((p+1)(b-a))]^{1/p} for distinct positive a, b and
/// p outside {-1, 0}; a when a == b.
double p_log_mean(double a, double b, double p);

struct MeansTriple {
  double arithmetic = 0.0;
  double logarithmic = 0.0;
  double p_log = 0.0;
};

MeansTriple means_triple(double a, double b, double p);

/// |A^n - L_n^n| against the four K-variant bounds for the power function
/// x^n, 0 < a < b, integer |n| >= 2. The K values carry the |n|(b-a)/12
/// prefactor and coincide with t_bounds applied to x^n on [a, b].
struct Prop1Result {
  double lhs = 0.0;
  BoundSet bounds;  // family K
};

Prop1Result prop1_bounds(double a, double b, int n, MParam m);

/// Midpoint gap of x^{n/k} against the four L-variant combinations.
/// lhs is the defining gap of f(x) = x^{n/k}, computed by quadrature;
/// paper_lhs is the literal |A^{n/k} - L_n^{n/k}| expression, reported
/// without an asserted inequality since its integral average is
/// L_{n/k}^{n/k}, not (L_n)^{n/k}. The L values are the raw combinations;
/// the asserted inequality is lhs <= prefactor * bounds.minimum.
struct Prop2Result {
  double lhs = 0.0;
  double paper_lhs = 0.0;
  BoundSet bounds;  // family L, raw (no prefactor)
  double prefactor = 0.0;  // (b-a)/4 * (1/2)^{1-1/q}
  double bound_min = 0.0;  // prefactor * bounds.minimum
};

Prop2Result prop2_bounds(double a, double b, int n, double k, MParam m,
                         double q, double quad_tol = kDefaultQuadTol);

}  // namespace hh
