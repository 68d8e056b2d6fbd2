#include "hhbounds/quadrature.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hhbounds/errors.hpp"

namespace hh {

namespace {

constexpr int kMaxDepth = 64;

struct AdaptState {
  const RealFn& g;
  std::size_t panels = 0;
  std::size_t max_panels = kDefaultMaxPanels;
  double error_acc = 0.0;
};

double sample(AdaptState& st, double x) {
  const double v = st.g(x);
  if (!std::isfinite(v)) {
    throw NonFiniteError("integrate: non-finite sample at x=" + std::to_string(x));
  }
  return v;
}

// Leftmost-first adaptive Simpson; `whole` is the Simpson value on [a, b]
// with samples fa, fm, fb already taken.
double adapt(AdaptState& st, double a, double b, double fa, double fm,
             double fb, double whole, double tol, int depth) {
  const double mid = 0.5 * (a + b);
  const double lm = 0.5 * (a + mid);
  const double rm = 0.5 * (mid + b);
  const double flm = sample(st, lm);
  const double frm = sample(st, rm);
  const double left = (fa + 4.0 * flm + fm) * (mid - a) / 6.0;
  const double right = (fm + 4.0 * frm + fb) * (b - mid) / 6.0;
  const double delta = left + right - whole;

  // Below the roundoff floor of the panel values further splitting only
  // amplifies noise, so such panels are accepted regardless of tol.
  const double floor_ = 64.0 * std::numeric_limits<double>::epsilon() *
                        (std::abs(left) + std::abs(right));

  if (std::abs(delta) <= 15.0 * tol || std::abs(delta) <= floor_ ||
      depth >= kMaxDepth) {
    if (depth >= kMaxDepth && std::abs(delta) > 15.0 * tol) {
      throw MaxSubdivisionError("integrate: refinement depth exhausted");
    }
    st.error_acc += std::abs(delta) / 15.0;
    return left + right + delta / 15.0;  // Richardson correction
  }
  if (st.panels >= st.max_panels) {
    throw MaxSubdivisionError("integrate: panel budget (" +
                              std::to_string(st.max_panels) + ") exhausted");
  }
  ++st.panels;
  const double vl = adapt(st, a, mid, fa, flm, fm, left, 0.5 * tol, depth + 1);
  const double vr = adapt(st, mid, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
  return vl + vr;
}

}  // namespace

QuadResult integrate(const RealFn& g, double a, double b, double tol,
                     std::size_t max_panels) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw DomainError("integrate: requires a < b");
  }
  if (!(tol > 0.0)) {
    throw PreconditionError("integrate: tolerance must be positive");
  }

  AdaptState st{g, 0, max_panels, 0.0};
  const double fa = sample(st, a);
  const double fb = sample(st, b);
  const double fm = sample(st, 0.5 * (a + b));
  const double whole = (fa + 4.0 * fm + fb) * (b - a) / 6.0;
  const double value = adapt(st, a, b, fa, fm, fb, whole, tol, 0);
  return QuadResult{value, st.error_acc, st.panels};
}

}  // namespace hh
