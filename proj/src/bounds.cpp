#include "hhbounds/bounds.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "hhbounds/errors.hpp"
#include "hhbounds/quadrature.hpp"

namespace hh {

const char* to_string(BoundFamily f) {
  switch (f) {
    case BoundFamily::T: return "T";
    case BoundFamily::U: return "U";
    case BoundFamily::V: return "V";
    case BoundFamily::K: return "K";
    case BoundFamily::L: return "L";
  }
  return "?";
}

const char* to_string(ProductDirection d) {
  return d == ProductDirection::lower_bound ? "lower_bound" : "upper_bound";
}

const char* to_string(SpecialCase c) {
  switch (c) {
    case SpecialCase::general: return "general";
    case SpecialCase::increasing: return "increasing";
    case SpecialCase::decreasing: return "decreasing";
    case SpecialCase::mid_zero: return "mid_zero";
    case SpecialCase::ends_zero: return "ends_zero";
  }
  return "?";
}

BoundSet BoundSet::of(BoundFamily family, std::array<double, 4> values) {
  BoundSet bs;
  bs.family = family;
  bs.values = values;
  bs.minimum = values[0];
  for (int i = 1; i < 4; ++i) bs.minimum = std::min(bs.minimum, values[i]);
  bs.argmin = 1;
  for (int i = 0; i < 4; ++i) {
    if (values[i] <= bs.minimum + kArgminTieTol) {
      bs.argmin = i + 1;
      break;
    }
  }
  return bs;
}

namespace {

// |f'| at the six evaluation points every m-parameterized bound uses.
struct DerivMagnitudes {
  double at_a = 0.0;
  double at_b = 0.0;
  double at_mid = 0.0;
  double at_a_over_m = 0.0;
  double at_b_over_m = 0.0;
  double at_mid_over_m = 0.0;
};

void require_m_reachable(const FunctionSpec& spec, const Interval& iv,
                         MParam m) {
  if (iv.b / m.m > spec.domain_upper()) {
    throw DomainError("bounds: b/m = " + std::to_string(iv.b / m.m) +
                      " exceeds the domain of '" + spec.label() + "'");
  }
}

DerivMagnitudes abs_derivs(const FunctionSpec& spec, const Interval& iv,
                           MParam m) {
  require_m_reachable(spec, iv, m);
  DerivMagnitudes d;
  d.at_a = std::abs(derivative_at(spec, iv.a));
  d.at_b = std::abs(derivative_at(spec, iv.b));
  d.at_mid = std::abs(derivative_at(spec, iv.midpoint()));
  d.at_a_over_m = std::abs(derivative_at(spec, iv.a / m.m));
  d.at_b_over_m = std::abs(derivative_at(spec, iv.b / m.m));
  d.at_mid_over_m = std::abs(derivative_at(spec, iv.midpoint() / m.m));
  return d;
}

double require_within(const FunctionSpec& spec, const Interval& iv) {
  if (iv.b > spec.domain_upper()) {
    throw DomainError("bounds: interval [" + std::to_string(iv.a) + ", " +
                      std::to_string(iv.b) + "] exceeds the domain of '" +
                      spec.label() + "'");
  }
  return iv.width();
}

}  // namespace

BoundSet t_bounds(const FunctionSpec& spec, const Interval& iv, MParam m) {
  const DerivMagnitudes d = abs_derivs(spec, iv, m);
  const double w = iv.width() / 12.0;
  const double mm = m.m;
  const double t1 =
      w * (2.0 * d.at_mid + mm * ((d.at_a_over_m + d.at_b_over_m) / 2.0));
  const double t2 = w * (d.at_mid + mm * d.at_mid_over_m +
                         (d.at_a + mm * d.at_b_over_m) / 2.0);
  const double t3 =
      w * ((d.at_a + d.at_b) / 2.0 + 2.0 * mm * d.at_mid_over_m);
  const double t4 = w * (d.at_mid + mm * d.at_mid_over_m +
                         (mm * d.at_a_over_m + d.at_b) / 2.0);
  return BoundSet::of(BoundFamily::T, {t1, t2, t3, t4});
}

UBounds u_bounds(const FunctionSpec& spec, const Interval& iv, MParam m,
                 const ExponentPair& exps) {
  const DerivMagnitudes d = abs_derivs(spec, iv, m);
  const double q = exps.q;
  const double mm = m.m;
  const auto pair_q = [&](double v1, double v2) {
    return std::pow(std::pow(v1, q) + mm * std::pow(v2, q), 1.0 / q);
  };
  const double u1 = pair_q(d.at_mid, d.at_a_over_m) + pair_q(d.at_mid, d.at_b_over_m);
  const double u2 = pair_q(d.at_a, d.at_mid_over_m) + pair_q(d.at_mid, d.at_b_over_m);
  const double u3 = pair_q(d.at_a, d.at_mid_over_m) + pair_q(d.at_b, d.at_mid_over_m);
  // The displayed fourth variant repeats the first; both are kept.
  const double u4 = pair_q(d.at_mid, d.at_a_over_m) + pair_q(d.at_mid, d.at_b_over_m);

  const double half_pow = std::pow(0.5, 1.0 / q);
  const double tight_pref =
      iv.width() / (4.0 * std::pow(exps.p + 1.0, 1.0 / exps.p)) * half_pow;
  const double loose_pref = iv.width() / 4.0 * half_pow;

  UBounds out;
  out.tight = BoundSet::of(
      BoundFamily::U,
      {tight_pref * u1, tight_pref * u2, tight_pref * u3, tight_pref * u4});
  out.loose = BoundSet::of(
      BoundFamily::U,
      {loose_pref * u1, loose_pref * u2, loose_pref * u3, loose_pref * u4});
  return out;
}

BoundSet v_bounds(const FunctionSpec& spec, const Interval& iv, MParam m,
                  double q) {
  if (!(q >= 1.0)) throw PreconditionError("v_bounds: requires q >= 1");
  const DerivMagnitudes d = abs_derivs(spec, iv, m);
  const double mm = m.m;
  const auto term = [&](double c1, double v1, double c2, double v2) {
    return std::pow(c1 * std::pow(v1, q) + c2 * std::pow(v2, q), 1.0 / q);
  };
  const double pref = iv.width() / 4.0 * std::pow(0.5, 1.0 - 1.0 / q);
  const double v1 = pref * (term(1.0 / 3.0, d.at_mid, mm / 6.0, d.at_a_over_m) +
                            term(1.0 / 3.0, d.at_mid, mm / 6.0, d.at_b_over_m));
  const double v2 = pref * (term(1.0 / 6.0, d.at_a, mm / 3.0, d.at_mid_over_m) +
                            term(1.0 / 3.0, d.at_mid, mm / 6.0, d.at_b_over_m));
  const double v3 = pref * (term(1.0 / 6.0, d.at_a, mm / 3.0, d.at_mid_over_m) +
                            term(1.0 / 6.0, d.at_b, mm / 3.0, d.at_mid_over_m));
  const double v4 = pref * (term(1.0 / 3.0, d.at_mid, mm / 6.0, d.at_a_over_m) +
                            term(1.0 / 6.0, d.at_b, mm / 3.0, d.at_mid_over_m));
  return BoundSet::of(BoundFamily::V, {v1, v2, v3, v4});
}

double classical_trapezoid_bound(const FunctionSpec& spec, const Interval& iv) {
  require_within(spec, iv);
  const double da = std::abs(derivative_at(spec, iv.a));
  const double db = std::abs(derivative_at(spec, iv.b));
  return iv.width() * (da + db) / 8.0;
}

PearcePecaricBounds pearce_pecaric_bounds(const FunctionSpec& spec,
                                          const Interval& iv, double q) {
  if (!(q >= 1.0)) throw PreconditionError("pearce_pecaric_bounds: requires q >= 1");
  require_within(spec, iv);
  const double da = std::abs(derivative_at(spec, iv.a));
  const double db = std::abs(derivative_at(spec, iv.b));
  const double value =
      iv.width() / 4.0 *
      std::pow((std::pow(da, q) + std::pow(db, q)) / 2.0, 1.0 / q);
  return PearcePecaricBounds{value, value};
}

double bakula_midpoint_bound(const FunctionSpec& spec, const Interval& iv,
                             MParam m, double q) {
  if (!(q >= 1.0)) throw PreconditionError("bakula_midpoint_bound: requires q >= 1");
  const DerivMagnitudes d = abs_derivs(spec, iv, m);
  const double first =
      std::pow((std::pow(d.at_a, q) + m.m * std::pow(d.at_b_over_m, q)) / 2.0,
               1.0 / q);
  const double second =
      std::pow((m.m * std::pow(d.at_a_over_m, q) + std::pow(d.at_b, q)) / 2.0,
               1.0 / q);
  return iv.width() / 4.0 * std::min(first, second);
}

SandwichResult dragomir_sandwich(const FunctionSpec& spec, const Interval& iv,
                                 MParam m, double tol) {
  require_m_reachable(spec, iv, m);
  const double mm = m.m;
  SandwichResult r;
  r.left = spec.value(iv.midpoint());
  const QuadResult avg = integrate(
      [&](double x) { return (spec.value(x) + mm * spec.value(x / mm)) / 2.0; },
      iv.a, iv.b, tol);
  r.middle = avg.value / iv.width();
  r.right = (mm + 1.0) / 4.0 *
            ((spec.value(iv.a) + spec.value(iv.b)) / 2.0 +
             mm * (spec.value(iv.a / mm) + spec.value(iv.b / mm)) / 2.0);
  return r;
}

FavardSides favard_sides(const FunctionSpec& spec, const Interval& iv, double q,
                         double tol) {
  if (!(q >= 1.0)) throw PreconditionError("favard_sides: requires q >= 1");
  require_within(spec, iv);
  const double avg_f =
      integrate([&](double x) { return spec.value(x); }, iv.a, iv.b, tol).value /
      iv.width();
  const double avg_fq =
      integrate([&](double x) { return std::pow(spec.value(x), q); }, iv.a,
                iv.b, tol)
          .value /
      iv.width();
  FavardSides s;
  s.lhs = std::pow(2.0, q) / (q + 1.0) * std::pow(avg_f, q);
  s.rhs = avg_fq;
  if (!std::isfinite(s.lhs) || !std::isfinite(s.rhs)) {
    throw NonFiniteError("favard_sides: non-finite side for '" + spec.label() + "'");
  }
  return s;
}

ProductBoundResult product_bound(const FunctionSpec& f, const FunctionSpec& g,
                                 const Interval& iv, MParam m,
                                 const ExponentPair& exps, double tol,
                                 int grid_n, double cert_tol) {
  require_m_reachable(f, iv, m);
  require_m_reachable(g, iv, m);
  const double upper = iv.b / m.m;

  const RealFn fv = [&](double x) { return f.value(x); };
  const RealFn gv = [&](double x) { return g.value(x); };

  ProductDirection direction;
  const bool concave_ok =
      certify_concave_nonneg(fv, iv, grid_n, cert_tol).status == CertStatus::pass &&
      certify_concave_nonneg(gv, iv, grid_n, cert_tol).status == CertStatus::pass &&
      certify_m_concave(fv, m, upper, grid_n, cert_tol).status == CertStatus::pass &&
      certify_m_concave(gv, m, upper, grid_n, cert_tol).status == CertStatus::pass;
  if (concave_ok) {
    direction = ProductDirection::lower_bound;
  } else {
    const bool convex_ok =
        certify_convex_on(fv, iv, grid_n, cert_tol).status == CertStatus::pass &&
        certify_convex_on(gv, iv, grid_n, cert_tol).status == CertStatus::pass &&
        certify_m_convex(fv, m, upper, grid_n, cert_tol).status == CertStatus::pass &&
        certify_m_convex(gv, m, upper, grid_n, cert_tol).status == CertStatus::pass &&
        std::abs(f.value(0.0)) <= cert_tol && std::abs(g.value(0.0)) <= cert_tol;
    if (!convex_ok) {
      throw PreconditionError(
          "product_bound: neither the concave/m-concave nor the convex/"
          "m-convex zero-anchored hypotheses certify for '" +
          f.label() + "', '" + g.label() + "'");
    }
    direction = ProductDirection::upper_bound;
  }

  const double mm = m.m;
  const double mid = iv.midpoint();
  ProductBoundResult r;
  r.direction = direction;
  r.lhs = f.value(mid) * g.value(mid);
  const QuadResult prod = integrate(
      [&](double x) {
        return (f.value(x) + mm * f.value(x / mm)) *
               (g.value(x) + mm * g.value(x / mm));
      },
      iv.a, iv.b, tol);
  const double constant = std::pow(exps.p + 1.0, 1.0 / exps.p) *
                          std::pow(exps.q + 1.0, 1.0 / exps.q) / 16.0;
  r.rhs = constant * prod.value / iv.width();
  return r;
}

namespace {

// Samples |f'| on [a, b] and checks the requested monotonicity with
// slack tol. 129 points is plenty for the smooth built-in families.
void require_monotone(const FunctionSpec& spec, const Interval& iv,
                      bool increasing, double tol) {
  constexpr int kPoints = 129;
  double prev = std::abs(derivative_at(spec, iv.a));
  for (int i = 1; i < kPoints; ++i) {
    const double u = static_cast<double>(i) / (kPoints - 1);
    const double x = i == kPoints - 1 ? iv.b : iv.a + iv.width() * u;
    const double cur = std::abs(derivative_at(spec, x));
    const double step = increasing ? cur - prev : prev - cur;
    if (step < -tol) {
      throw PreconditionError(std::string("specialize_m1: |f'| is not ") +
                              (increasing ? "increasing" : "decreasing") +
                              " on [a, b] for '" + spec.label() + "'");
    }
    prev = cur;
  }
}

void require_small(double v, double tol, const std::string& what) {
  if (std::abs(v) > tol) {
    throw PreconditionError("specialize_m1: " + what + " is not ~0 (|.|=" +
                            std::to_string(std::abs(v)) + ")");
  }
}

}  // namespace

double specialize_m1(BoundFamily family, const FunctionSpec& spec,
                     const Interval& iv, SpecialCase scase, double q,
                     double hypothesis_tol) {
  require_within(spec, iv);
  const double w = iv.width();
  const double da = std::abs(derivative_at(spec, iv.a));
  const double db = std::abs(derivative_at(spec, iv.b));
  const double dm = std::abs(derivative_at(spec, iv.midpoint()));

  switch (scase) {
    case SpecialCase::general:
      break;
    case SpecialCase::increasing:
      require_monotone(spec, iv, true, hypothesis_tol);
      break;
    case SpecialCase::decreasing:
      require_monotone(spec, iv, false, hypothesis_tol);
      break;
    case SpecialCase::mid_zero:
      require_small(dm, hypothesis_tol, "|f'((a+b)/2)|");
      break;
    case SpecialCase::ends_zero:
      require_small(da, hypothesis_tol, "|f'(a)|");
      require_small(db, hypothesis_tol, "|f'(b)|");
      break;
  }

  if (family == BoundFamily::T) {
    switch (scase) {
      case SpecialCase::general:
        return w / 12.0 * (2.0 * dm + (da + db) / 2.0);
      case SpecialCase::increasing:
        return w / 12.0 * (2.0 * dm + db);
      case SpecialCase::decreasing:
        return w / 12.0 * (2.0 * dm + da);
      case SpecialCase::mid_zero:
        return w / 12.0 * ((da + db) / 2.0);
      case SpecialCase::ends_zero:
        return w / 6.0 * dm;
    }
  }

  if (family == BoundFamily::U) {
    const ExponentPair exps = ExponentPair::from_q(q);
    const double base = w / (4.0 * std::pow(exps.p + 1.0, 1.0 / exps.p));
    const double half_pow = std::pow(0.5, 1.0 / q);
    switch (scase) {
      case SpecialCase::general:
        return base * half_pow *
               (std::pow(std::pow(dm, q) + std::pow(da, q), 1.0 / q) +
                std::pow(std::pow(dm, q) + std::pow(db, q), 1.0 / q));
      case SpecialCase::increasing:
        return base * std::pow(std::pow(dm, q) + std::pow(db, q), 1.0 / q);
      case SpecialCase::decreasing:
        return base * std::pow(std::pow(dm, q) + std::pow(da, q), 1.0 / q);
      case SpecialCase::mid_zero:
        return base * half_pow * (da + db);
      case SpecialCase::ends_zero:
        return base * half_pow * dm;
    }
  }

  if (family == BoundFamily::V) {
    if (!(q >= 1.0)) throw PreconditionError("specialize_m1: V family requires q >= 1");
    const double pref = w / 4.0 * std::pow(0.5, 1.0 - 1.0 / q);
    switch (scase) {
      case SpecialCase::general:
        return pref *
               (std::pow(std::pow(dm, q) / 3.0 + std::pow(da, q) / 6.0, 1.0 / q) +
                std::pow(std::pow(db, q) / 6.0 + std::pow(dm, q) / 3.0, 1.0 / q));
      case SpecialCase::increasing:
        return pref *
               std::pow(std::pow(dm, q) / 3.0 + std::pow(db, q) / 6.0, 1.0 / q);
      case SpecialCase::decreasing:
        return pref *
               std::pow(std::pow(dm, q) / 3.0 + std::pow(da, q) / 6.0, 1.0 / q);
      case SpecialCase::mid_zero:
        return w / 8.0 * std::pow(1.0 / 3.0, 1.0 / q) * (da + db);
      case SpecialCase::ends_zero:
        return w / 4.0 * std::pow(1.0 / 6.0, 1.0 - 1.0 / q) * dm;
    }
  }

  throw PreconditionError("specialize_m1: family must be T, U or V");
}

}  // namespace hh
