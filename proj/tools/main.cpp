// hhbounds: verify, certify and compare Hermite-Hadamard-type bounds for
// functions whose derivative magnitudes are m-convex.
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hhbounds/bounds.hpp"
#include "hhbounds/builtins.hpp"
#include "hhbounds/campaign.hpp"
#include "hhbounds/certify.hpp"
#include "hhbounds/errors.hpp"
#include "hhbounds/identity.hpp"
#include "hhbounds/means.hpp"
#include "hhbounds/report.hpp"

namespace {

struct FunctionArgs {
  std::string family = "power";
  double n = 2.0;
  double scale = 1.0;
  double c0 = 0.0;
  double c1 = 1.0;
  double center = 0.0;

  hh::BuiltinSpec spec() const {
    hh::BuiltinSpec bs;
    bs.family = family;
    bs.n = n;
    bs.scale = scale;
    bs.c0 = c0;
    bs.c1 = c1;
    bs.center = center;
    return bs;
  }
};

void add_function_options(CLI::App* cmd, FunctionArgs& fa) {
  cmd->add_option("--function", fa.family, "Builtin family: power, exp, affine, shifted_square, sqrt")
      ->check(CLI::IsMember(hh::builtin_family_names()));
  cmd->add_option("--n", fa.n, "Power order for the power family");
  cmd->add_option("--scale", fa.scale, "Rate for the exp family");
  cmd->add_option("--c0", fa.c0, "Affine intercept");
  cmd->add_option("--c1", fa.c1, "Affine slope");
  cmd->add_option("--center", fa.center, "Center of the shifted square");
}

int run_verify(const std::string& config_path, std::optional<double> tol,
               std::optional<std::string> out, std::optional<std::string> format) {
  hh::CampaignConfig cfg = hh::load_config_file(config_path);
  if (tol) cfg.quad_tol = *tol;
  if (out) cfg.out_path = *out;
  if (format) cfg.format = *format;
  if (cfg.format != "csv" && cfg.format != "json") {
    throw hh::ConfigError("--format must be csv or json");
  }

  const auto records = hh::run_campaign(cfg);
  hh::emit_report(records, cfg.format, cfg.out_path);
  const auto s = hh::summarize(records);
  std::printf("records=%zu pass=%zu fail=%zu skipped=%zu errored=%zu -> %s\n",
              records.size(), s.passed, s.failed, s.skipped, s.errored,
              cfg.out_path.c_str());
  std::size_t shown = 0;
  for (const auto& r : records) {
    if (r.status != hh::RecordStatus::fail) continue;
    if (++shown > 5) {
      std::printf("  ... %zu more failing records in the report\n", s.failed - 5);
      break;
    }
    std::printf("  FAIL %s [%g, %g] m=%g q=%g %s slack=%g\n", r.function.c_str(),
                r.a, r.b, r.m, r.q, r.family.c_str(),
                r.slack ? *r.slack : 0.0);
  }
  return s.failed == 0 ? 0 : 1;
}

int run_certify(const FunctionArgs& fa, const std::string& predicate,
                const std::string& target, double q, double m, double upper,
                double a, double b, int grid, double tol, bool check_anchor) {
  const double domain_upper = std::max(upper, b);
  const hh::FunctionSpec spec = hh::make_builtin(fa.spec(), domain_upper);

  hh::RealFn g;
  if (target == "f") {
    g = [&spec](double x) { return spec.value(x); };
  } else if (target == "abs_deriv") {
    g = [&spec](double x) { return std::abs(hh::derivative_at(spec, x)); };
  } else {  // abs_deriv_pow
    g = [&spec, q](double x) {
      return std::pow(std::abs(hh::derivative_at(spec, x)), q);
    };
  }

  hh::Certificate cert;
  if (predicate == "m_convex") {
    cert = hh::certify_m_convex(g, hh::MParam(m), upper, grid, tol);
  } else if (predicate == "m_concave") {
    cert = hh::certify_m_concave(g, hh::MParam(m), upper, grid, tol);
  } else if (predicate == "convex") {
    cert = hh::certify_convex_on(g, hh::Interval(a, b), grid, tol);
  } else if (predicate == "concave_nonneg") {
    cert = hh::certify_concave_nonneg(g, hh::Interval(a, b), grid, tol);
  } else if (predicate == "thunsdorff") {
    cert = hh::certify_thunsdorff(g, hh::Interval(a, b), grid, tol);
  } else {
    throw hh::ConfigError("unknown predicate '" + predicate + "'");
  }

  std::printf("%s %s(%s): %s\n", spec.label().c_str(), predicate.c_str(),
              target.c_str(), hh::summarize(cert).c_str());
  if (check_anchor) {
    std::printf("anchor g(0) <= tol: %s\n",
                hh::anchor_nonpositive(g, tol) ? "yes" : "no");
  }
  switch (cert.status) {
    case hh::CertStatus::pass: return 0;
    case hh::CertStatus::fail: return 1;
    case hh::CertStatus::inconclusive: return 3;
  }
  return 3;
}

int run_means(double a, double b, int n, double k, double m, double q) {
  const auto p1 = hh::prop1_bounds(a, b, n, hh::MParam(m));
  std::printf("means: a=%g b=%g n=%d m=%g\n", a, b, n, m);
  std::printf("  A=%.12g L=%.12g L_n=%.12g\n", hh::arithmetic_mean(a, b),
              hh::logarithmic_mean(a, b), hh::p_log_mean(a, b, n));
  std::printf("  |A^n - L_n^n| = %.12g\n", p1.lhs);
  std::printf("  K = [%.12g, %.12g, %.12g, %.12g] min=%.12g argmin=%d %s\n",
              p1.bounds.values[0], p1.bounds.values[1], p1.bounds.values[2],
              p1.bounds.values[3], p1.bounds.minimum, p1.bounds.argmin,
              p1.lhs <= p1.bounds.minimum + 1e-8 ? "holds" : "VIOLATED");

  const auto p2 = hh::prop2_bounds(a, b, n, k, hh::MParam(m), q);
  std::printf("fractional: k=%g q=%g exponent n/k=%g\n", k, q, n / k);
  std::printf("  gap(x^{n/k}) = %.12g   literal |A^{n/k} - L_n^{n/k}| = %.12g\n",
              p2.lhs, p2.paper_lhs);
  std::printf("  L = [%.12g, %.12g, %.12g, %.12g] prefactor=%.12g bound=%.12g %s\n",
              p2.bounds.values[0], p2.bounds.values[1], p2.bounds.values[2],
              p2.bounds.values[3], p2.prefactor, p2.bound_min,
              p2.lhs <= p2.bound_min + 1e-8 ? "holds" : "VIOLATED");
  return 0;
}

int run_compare(const FunctionArgs& fa, double a, double b, double m, double q,
                double tol) {
  const double upper = b / m;
  const hh::FunctionSpec spec = hh::make_builtin(fa.spec(), upper);
  const hh::Interval iv(a, b);
  const hh::MParam mp(m);

  const double mid = hh::midpoint_gap(spec, iv, tol);
  const double trap = hh::trapezoid_gap(spec, iv, tol);
  std::printf("%s on [%g, %g], m=%g, q=%g\n", spec.label().c_str(), a, b, m, q);
  std::printf("  midpoint gap  %.12g\n", mid);
  std::printf("  trapezoid gap %.12g\n", trap);
  std::printf("  residual(identity) %.3g\n",
              hh::midpoint_identity_residual(spec, iv, tol));

  const auto row = [](const char* name, double bound, double gap) {
    std::printf("  %-22s %14.10f  slack vs gap %+.3e\n", name, bound,
                bound - gap);
  };
  const auto t = hh::t_bounds(spec, iv, mp);
  row("T min", t.minimum, mid);
  if (q > 1.0) {
    const auto u = hh::u_bounds(spec, iv, mp, hh::ExponentPair::from_q(q));
    row("U tight min", u.tight.minimum, mid);
    row("U loose min", u.loose.minimum, mid);
  } else {
    std::printf("  %-22s (needs q > 1)\n", "U tight/loose");
  }
  const auto v = hh::v_bounds(spec, iv, mp, q);
  row("V min", v.minimum, mid);
  row("trapezoid 8-rule", hh::classical_trapezoid_bound(spec, iv), trap);
  row("q-mean two-point", hh::pearce_pecaric_bounds(spec, iv, q).midpoint, mid);
  row("m-mixed two-point", hh::bakula_midpoint_bound(spec, iv, mp, q), mid);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of midpoint-gap bounds for m-convex derivative classes"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification campaign from a JSON config");
  std::string config_path;
  verify->add_option("--config", config_path, "Campaign JSON")->required();
  std::optional<double> tol_override;
  std::optional<std::string> out_override, format_override;
  verify->add_option("--tol", tol_override, "Override quadrature tolerance");
  verify->add_option("--out", out_override, "Override report path");
  verify->add_option("--format", format_override, "Override report format (csv|json)");

  // certify
  auto* certify = app.add_subcommand("certify", "Check one sampled hypothesis for one builtin");
  FunctionArgs cert_fn;
  add_function_options(certify, cert_fn);
  std::string predicate = "m_convex";
  std::string target = "abs_deriv";
  double cq = 1.0, cm = 1.0, cupper = 1.0, ca = 0.0, cb = 1.0, ctol = hh::kDefaultCertTol;
  int cgrid = hh::kDefaultCertGrid;
  bool check_anchor = false;
  certify->add_option("--predicate", predicate,
                      "m_convex, m_concave, convex, concave_nonneg, thunsdorff")
      ->check(CLI::IsMember({"m_convex", "m_concave", "convex", "concave_nonneg", "thunsdorff"}));
  certify->add_option("--target", target, "f, abs_deriv or abs_deriv_pow")
      ->check(CLI::IsMember({"f", "abs_deriv", "abs_deriv_pow"}));
  certify->add_option("--q", cq, "Exponent for abs_deriv_pow");
  certify->add_option("--m", cm, "Convexity modulus");
  certify->add_option("--upper", cupper, "Upper end of [0, upper] for the m-checks");
  certify->add_option("--a", ca, "Interval left end for the on-interval checks");
  certify->add_option("--b", cb, "Interval right end for the on-interval checks");
  certify->add_option("--grid", cgrid, "Grid points per axis");
  certify->add_option("--tol", ctol, "Violation tolerance");
  certify->add_flag("--check-anchor", check_anchor, "Also report whether g(0) <= tol");

  // means
  auto* means = app.add_subcommand("means", "Special-means gap tables");
  double ma = 1.0, mb = 3.0, mk = 1.0, mm = 1.0, mq = 1.0;
  int mn = 2;
  means->add_option("--a", ma, "Left endpoint")->required();
  means->add_option("--b", mb, "Right endpoint")->required();
  means->add_option("--n", mn, "Integer power, |n| >= 2")->required();
  means->add_option("--k", mk, "Fractional-order divisor, k >= 1");
  means->add_option("--m", mm, "Convexity modulus");
  means->add_option("--q", mq, "Power-mean exponent");

  // compare
  auto* compare = app.add_subcommand("compare", "Tightness table: family minima vs baselines");
  FunctionArgs cmp_fn;
  add_function_options(compare, cmp_fn);
  double pa = 0.0, pb = 1.0, pm = 1.0, pq = 2.0, ptol = hh::kDefaultQuadTol;
  compare->add_option("--a", pa, "Interval left end");
  compare->add_option("--b", pb, "Interval right end");
  compare->add_option("--m", pm, "Convexity modulus");
  compare->add_option("--q", pq, "Power-mean exponent");
  compare->add_option("--tol", ptol, "Quadrature tolerance");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      return run_verify(config_path, tol_override, out_override, format_override);
    }
    if (certify->parsed()) {
      return run_certify(cert_fn, predicate, target, cq, cm, cupper, ca, cb,
                         cgrid, ctol, check_anchor);
    }
    if (means->parsed()) {
      return run_means(ma, mb, mn, mk, mm, mq);
    }
    if (compare->parsed()) {
      return run_compare(cmp_fn, pa, pb, pm, pq, ptol);
    }
  } catch (const hh::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
