#include "hhbounds/certify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <vector>

#include "hhbounds/errors.hpp"

namespace hh {

const char* to_string(CertStatus s) {
  switch (s) {
    case CertStatus::pass: return "pass";
    case CertStatus::fail: return "fail";
    case CertStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

enum class Sense { convex, concave };

struct Accumulator {
  double worst = -std::numeric_limits<double>::infinity();
  Witness at{};
  bool any = false;
  std::size_t samples = 0;
  std::size_t failures = 0;

  void record(double violation, const Witness& w) {
    ++samples;
    if (!std::isfinite(violation)) {
      ++failures;
      return;
    }
    if (!any || violation > worst) {
      worst = violation;
      at = w;
      any = true;
    }
  }

  void record_failure() {
    ++samples;
    ++failures;
  }
};

Certificate finish(const Accumulator& acc, double tol) {
  Certificate c;
  c.samples = acc.samples;
  c.tolerance = tol;
  c.worst_violation = acc.any ? acc.worst : 0.0;
  if (acc.any && c.worst_violation > tol) {
    c.status = CertStatus::fail;
    c.witness = acc.at;
  } else if (acc.failures > 0 || !acc.any) {
    c.status = CertStatus::inconclusive;
  } else {
    c.status = CertStatus::pass;
  }
  return c;
}

// Samples the Definition-style combination inequality over
// [lo, hi]^2 x [0, 1]. For the convex sense the violation is
// g(tx + m(1-t)y) - [t g(x) + m(1-t) g(y)]; concave negates it.
// Combination points are clamped to the evaluation range to absorb
// rounding; the grid itself is exact at both ends.
void scan_combinations(const RealFn& g, double m, double lo, double hi,
                       int grid_n, Sense sense, Accumulator& acc) {
  const double combo_lo = m < 1.0 ? std::min(lo, m * lo) : lo;
  const int n = grid_n;

  std::vector<double> xs(n), gx(n);
  std::vector<bool> ok(n);
  for (int i = 0; i < n; ++i) {
    const double u = static_cast<double>(i) / (n - 1);
    // Endpoints are taken exactly so domain-checked evaluators never see
    // an out-by-one-ulp query.
    xs[i] = i == 0 ? lo : (i == n - 1 ? hi : lo + (hi - lo) * u);
    try {
      const double v = g(xs[i]);
      gx[i] = v;
      ok[i] = std::isfinite(v);
    } catch (const std::exception&) {
      ok[i] = false;
    }
    if (!ok[i]) acc.record_failure();
  }

  for (int i = 0; i < n; ++i) {
    if (!ok[i]) continue;
    for (int j = 0; j < n; ++j) {
      if (!ok[j]) continue;
      for (int k = 0; k < n; ++k) {
        const double t = static_cast<double>(k) / (n - 1);
        double z = t * xs[i] + m * (1.0 - t) * xs[j];
        z = std::clamp(z, combo_lo, hi);
        double gz;
        try {
          gz = g(z);
        } catch (const std::exception&) {
          acc.record_failure();
          continue;
        }
        const double rhs = t * gx[i] + m * (1.0 - t) * gx[j];
        double violation = gz - rhs;
        if (sense == Sense::concave) violation = -violation;
        acc.record(violation, Witness{xs[i], xs[j], t});
      }
    }
  }
}

void scan_pointwise_min(const RealFn& f, double lo, double hi, int grid_n,
                        Accumulator& acc) {
  for (int i = 0; i < grid_n; ++i) {
    const double u = static_cast<double>(i) / (grid_n - 1);
    const double x = i == 0 ? lo : (i == grid_n - 1 ? hi : lo + (hi - lo) * u);
    try {
      const double v = f(x);
      if (!std::isfinite(v)) {
        acc.record_failure();
        continue;
      }
      acc.record(-v, Witness{x, x, 0.0});  // violation when f(x) < -tol
    } catch (const std::exception&) {
      acc.record_failure();
    }
  }
}

void validate_grid(int grid_n) {
  if (grid_n < 3) throw PreconditionError("certify: grid_n must be >= 3");
}

}  // namespace

Certificate certify_m_convex(const RealFn& g, MParam m, double upper,
                             int grid_n, double tol) {
  validate_grid(grid_n);
  if (!(upper > 0.0)) throw PreconditionError("certify_m_convex: upper must be positive");
  Accumulator acc;
  scan_combinations(g, m.m, 0.0, upper, grid_n, Sense::convex, acc);
  return finish(acc, tol);
}

Certificate certify_m_concave(const RealFn& g, MParam m, double upper,
                              int grid_n, double tol) {
  validate_grid(grid_n);
  if (!(upper > 0.0)) throw PreconditionError("certify_m_concave: upper must be positive");
  Accumulator acc;
  scan_combinations(g, m.m, 0.0, upper, grid_n, Sense::concave, acc);
  return finish(acc, tol);
}

Certificate certify_convex_on(const RealFn& f, const Interval& iv, int grid_n,
                              double tol) {
  validate_grid(grid_n);
  Accumulator acc;
  scan_combinations(f, 1.0, iv.a, iv.b, grid_n, Sense::convex, acc);
  return finish(acc, tol);
}

Certificate certify_concave_nonneg(const RealFn& f, const Interval& iv,
                                   int grid_n, double tol) {
  validate_grid(grid_n);
  Accumulator acc;
  scan_combinations(f, 1.0, iv.a, iv.b, grid_n, Sense::concave, acc);
  scan_pointwise_min(f, iv.a, iv.b, grid_n, acc);
  return finish(acc, tol);
}

Certificate certify_thunsdorff(const RealFn& f, const Interval& iv, int grid_n,
                               double tol) {
  validate_grid(grid_n);
  Accumulator acc;
  scan_combinations(f, 1.0, iv.a, iv.b, grid_n, Sense::convex, acc);
  scan_pointwise_min(f, iv.a, iv.b, grid_n, acc);
  try {
    const double fa = f(iv.a);
    if (std::isfinite(fa)) {
      acc.record(std::abs(fa), Witness{iv.a, iv.a, 0.0});  // anchor f(a) = 0
    } else {
      acc.record_failure();
    }
  } catch (const std::exception&) {
    acc.record_failure();
  }
  return finish(acc, tol);
}

bool anchor_nonpositive(const RealFn& g, double tol) {
  const double v = g(0.0);
  if (!std::isfinite(v)) throw NonFiniteError("anchor_nonpositive: g(0) is not finite");
  return v <= tol;
}

std::string summarize(const Certificate& c) {
  char buf[160];
  if (c.witness) {
    std::snprintf(buf, sizeof(buf),
                  "%s worst=%.6g tol=%.3g samples=%zu witness=(%.6g,%.6g,%.6g)",
                  to_string(c.status), c.worst_violation, c.tolerance, c.samples,
                  c.witness->x, c.witness->y, c.witness->t);
  } else {
    std::snprintf(buf, sizeof(buf), "%s worst=%.6g tol=%.3g samples=%zu",
                  to_string(c.status), c.worst_violation, c.tolerance, c.samples);
  }
  return buf;
}

}  // namespace hh
