#include "hhbounds/means.hpp"

#include <cmath>
#include <string>

#include "hhbounds/builtins.hpp"
#include "hhbounds/errors.hpp"

namespace hh {

double arithmetic_mean(double a, double b) { return (a + b) / 2.0; }

double logarithmic_mean(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw DomainError("logarithmic_mean: requires positive arguments");
  }
  if (a == b) return a;
  // log1p keeps the denominator accurate when a and b are close.
  const double r = (b - a) / a;
  const double denom = std::abs(r) < 0.5 ? std::log1p(r) : std::log(b) - std::log(a);
  return (b - a) / denom;
}

double p_log_mean(double a, double b, double p) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw DomainError("p_log_mean: requires positive arguments");
  }
  if (p == -1.0 || p == 0.0) {
    throw DomainError("p_log_mean: order p must lie outside {-1, 0}");
  }
  if (a == b) return a;
  const double num = std::pow(b, p + 1.0) - std::pow(a, p + 1.0);
  return std::pow(num / ((p + 1.0) * (b - a)), 1.0 / p);
}

MeansTriple means_triple(double a, double b, double p) {
  return MeansTriple{arithmetic_mean(a, b), logarithmic_mean(a, b),
                     p_log_mean(a, b, p)};
}

namespace {

void validate_pair(double a, double b) {
  if (!(a > 0.0) || !(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("means bounds: require 0 < a < b");
  }
}

void validate_order(int n) {
  if (std::abs(n) < 2) {
    throw PreconditionError("means bounds: require integer |n| >= 2, got n=" +
                            std::to_string(n));
  }
}

}  // namespace

Prop1Result prop1_bounds(double a, double b, int n, MParam m) {
  validate_pair(a, b);
  validate_order(n);

  const double nd = static_cast<double>(n);
  const double A = arithmetic_mean(a, b);
  // Integral average of x^n over [a, b]: L_n^n.
  const double ln_pow_n = (std::pow(b, nd + 1.0) - std::pow(a, nd + 1.0)) /
                          ((nd + 1.0) * (b - a));

  Prop1Result r;
  r.lhs = std::abs(std::pow(A, nd) - ln_pow_n);

  // |f'(x)| = |n| x^{n-1} for f(x) = x^n on x > 0, so the prefactor
  // carries |n|; negative orders keep every variant nonnegative.
  const double e = nd - 1.0;
  const double mm = m.m;
  const double pw = std::abs(nd) * (b - a) / 12.0;
  const double pa = std::pow(A, e);
  const double pam = std::pow(A / mm, e);
  const double k1 = pw * (2.0 * pa +
                          mm * ((std::pow(a / mm, e) + std::pow(b / mm, e)) / 2.0));
  const double k2 = pw * (pa + mm * pam +
                          (std::pow(a, e) + mm * std::pow(b / mm, e)) / 2.0);
  const double k3 =
      pw * ((std::pow(a, e) + std::pow(b, e)) / 2.0 + 2.0 * mm * pam);
  const double k4 = pw * (pa + mm * pam +
                          (mm * std::pow(a / mm, e) + std::pow(b, e)) / 2.0);
  r.bounds = BoundSet::of(BoundFamily::K, {k1, k2, k3, k4});
  return r;
}

Prop2Result prop2_bounds(double a, double b, int n, double k, MParam m,
                         double q, double quad_tol) {
  validate_pair(a, b);
  validate_order(n);
  if (!(k >= 1.0)) throw PreconditionError("prop2_bounds: requires k >= 1");
  if (!(q >= 1.0)) throw PreconditionError("prop2_bounds: requires q >= 1");

  const double r_exp = static_cast<double>(n) / k;
  const double mm = m.m;
  const double upper = b / mm;
  const FunctionSpec f = make_power(r_exp, upper);
  const Interval iv(a, b);

  Prop2Result out;
  out.lhs = midpoint_gap(f, iv, quad_tol);
  out.paper_lhs = std::abs(std::pow(arithmetic_mean(a, b), r_exp) -
                           std::pow(p_log_mean(a, b, static_cast<double>(n)), r_exp));

  const double A = arithmetic_mean(a, b);
  const double E = q * (r_exp - 1.0);  // q(n-k)/k
  const double fac = std::abs(r_exp);
  const double pA = std::pow(A, E);
  const double pAm = std::pow(A / mm, E);
  const double l1 = fac * (std::pow(pA / 3.0 + mm / 6.0 * std::pow(a / mm, E), 1.0 / q) +
                           std::pow(pA / 3.0 + mm / 6.0 * std::pow(b / mm, E), 1.0 / q));
  const double l2 = fac * (std::pow(std::pow(a, E) / 6.0 + mm / 3.0 * pAm, 1.0 / q) +
                           std::pow(pA / 3.0 + mm / 6.0 * std::pow(b / mm, E), 1.0 / q));
  const double l3 = fac * (std::pow(std::pow(a, E) / 6.0 + mm / 3.0 * pAm, 1.0 / q) +
                           std::pow(std::pow(b, E) / 6.0 + mm / 3.0 * pAm, 1.0 / q));
  const double l4 = fac * (std::pow(pA / 3.0 + mm / 6.0 * std::pow(a / mm, E), 1.0 / q) +
                           std::pow(std::pow(b, E) / 6.0 + mm / 3.0 * pAm, 1.0 / q));
  out.bounds = BoundSet::of(BoundFamily::L, {l1, l2, l3, l4});
  out.prefactor = (b - a) / 4.0 * std::pow(0.5, 1.0 - 1.0 / q);
  out.bound_min = out.prefactor * out.bounds.minimum;
  return out;
}

}  // namespace hh
