#include "hhbounds/function_spec.hpp"

#include <cmath>
#include <utility>

#include "hhbounds/errors.hpp"
#include "hhbounds/quadrature.hpp"

namespace hh {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

FunctionSpec::FunctionSpec(RealFn f, std::optional<RealFn> df,
                           double domain_upper, std::string label)
    : f_(std::move(f)),
      df_(std::move(df)),
      domain_upper_(domain_upper),
      label_(std::move(label)) {
  if (!f_) throw PreconditionError("FunctionSpec '" + label_ + "': evaluator is empty");
  if (!(domain_upper_ > 0.0) || !std::isfinite(domain_upper_)) {
    throw DomainError("FunctionSpec '" + label_ + "': domain upper bound must be finite and positive, got " + fmt(domain_upper_));
  }
}

void FunctionSpec::check_domain(double x) const {
  if (!(x >= 0.0) || !(x <= domain_upper_)) {
    throw DomainError("FunctionSpec '" + label_ + "': query x=" + fmt(x) +
                      " outside [0, " + fmt(domain_upper_) + "]");
  }
}

double FunctionSpec::value(double x) const {
  check_domain(x);
  const double v = f_(x);
  if (!std::isfinite(v)) {
    throw NonFiniteError("FunctionSpec '" + label_ + "': f(" + fmt(x) + ") is not finite");
  }
  return v;
}

double FunctionSpec::analytic_derivative(double x) const {
  check_domain(x);
  if (!df_) throw PreconditionError("FunctionSpec '" + label_ + "': no analytic derivative");
  const double v = (*df_)(x);
  if (!std::isfinite(v)) {
    throw NonFiniteError("FunctionSpec '" + label_ + "': f'(" + fmt(x) + ") is not finite");
  }
  return v;
}

double derivative_at(const FunctionSpec& spec, double x) {
  if (spec.has_analytic_derivative()) return spec.analytic_derivative(x);

  const double upper = spec.domain_upper();
  if (!(x >= 0.0) || !(x <= upper)) {
    throw DomainError("derivative_at('" + spec.label() + "'): x=" + fmt(x) +
                      " outside [0, " + fmt(upper) + "]");
  }

  double h = std::max(1e-6, 1e-6 * std::abs(x));
  if (2.0 * h > upper) {
    throw PreconditionError("derivative_at('" + spec.label() +
                            "'): domain too narrow for a finite-difference step");
  }
  // Snap the step to a representable offset.
  {
    volatile double xph = x + h;
    h = xph - x;
  }

  double d;
  if (x - h >= 0.0 && x + h <= upper) {
    d = (spec.value(x + h) - spec.value(x - h)) / (2.0 * h);
  } else if (x - h < 0.0) {
    // Second-order forward stencil at the left edge.
    d = (-3.0 * spec.value(x) + 4.0 * spec.value(x + h) - spec.value(x + 2.0 * h)) /
        (2.0 * h);
  } else {
    d = (3.0 * spec.value(x) - 4.0 * spec.value(x - h) + spec.value(x - 2.0 * h)) /
        (2.0 * h);
  }
  if (!std::isfinite(d)) {
    throw NonFiniteError("derivative_at('" + spec.label() + "'): non-finite result at x=" + fmt(x));
  }
  return d;
}

Interval::Interval(double a_, double b_) : a(a_), b(b_) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a >= 0.0) || !(a < b)) {
    throw DomainError("Interval [" + fmt(a) + ", " + fmt(b) + "]: requires 0 <= a < b");
  }
}

MParam::MParam(double m_) : m(m_) {
  if (!std::isfinite(m) || !(m > 0.0) || !(m <= 1.0)) {
    throw DomainError("MParam m=" + fmt(m) + ": requires m in (0, 1]");
  }
}

ExponentPair::ExponentPair(double p_, double q_) : p(p_), q(q_) {
  if (!(p > 1.0) || !(q > 1.0) || !std::isfinite(p) || !std::isfinite(q)) {
    throw DomainError("ExponentPair (" + fmt(p) + ", " + fmt(q) + "): requires p, q > 1");
  }
  if (std::abs(1.0 / p + 1.0 / q - 1.0) > 1e-12) {
    throw DomainError("ExponentPair (" + fmt(p) + ", " + fmt(q) + "): 1/p + 1/q != 1");
  }
}

ExponentPair ExponentPair::from_q(double q) {
  if (!(q > 1.0)) throw DomainError("ExponentPair: q=" + fmt(q) + " has no conjugate p > 1");
  return ExponentPair(q / (q - 1.0), q);
}

ExponentPair ExponentPair::from_p(double p) {
  if (!(p > 1.0)) throw DomainError("ExponentPair: p=" + fmt(p) + " has no conjugate q > 1");
  return ExponentPair(p, p / (p - 1.0));
}

namespace {

double require_within(const FunctionSpec& spec, const Interval& iv) {
  if (iv.b > spec.domain_upper()) {
    throw DomainError("interval [" + fmt(iv.a) + ", " + fmt(iv.b) +
                      "] exceeds the domain of '" + spec.label() + "'");
  }
  return iv.width();
}

}  // namespace

double midpoint_gap(const FunctionSpec& spec, const Interval& iv, double tol,
                    bool signed_value) {
  const double width = require_within(spec, iv);
  const QuadResult q = integrate([&](double x) { return spec.value(x); }, iv.a, iv.b, tol);
  const double diff = spec.value(iv.midpoint()) - q.value / width;
  return signed_value ? diff : std::abs(diff);
}

double trapezoid_gap(const FunctionSpec& spec, const Interval& iv, double tol,
                     bool signed_value) {
  const double width = require_within(spec, iv);
  const QuadResult q = integrate([&](double x) { return spec.value(x); }, iv.a, iv.b, tol);
  const double ends = (spec.value(iv.a) + spec.value(iv.b)) / 2.0;
  const double diff = ends - q.value / width;
  return signed_value ? diff : std::abs(diff);
}

}  // namespace hh
