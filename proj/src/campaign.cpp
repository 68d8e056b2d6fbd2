#include "hhbounds/campaign.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "hhbounds/bounds.hpp"
#include "hhbounds/certify.hpp"
#include "hhbounds/errors.hpp"
#include "hhbounds/identity.hpp"
#include "hhbounds/means.hpp"
#include "hhbounds/quadrature.hpp"

namespace hh {

using nlohmann::json;

const char* to_string(RecordStatus s) {
  switch (s) {
    case RecordStatus::pass: return "pass";
    case RecordStatus::fail: return "fail";
    case RecordStatus::skipped: return "skipped";
    case RecordStatus::errored: return "error";
  }
  return "?";
}

namespace {

const std::vector<std::string>& known_families() {
  static const std::vector<std::string> fams = {
      "T", "U", "V", "sandwich", "product", "means", "lemma1", "baselines"};
  return fams;
}

double require_number(const json& j, const std::string& where) {
  if (!j.is_number()) throw ConfigError(where + ": expected a number");
  return j.get<double>();
}

std::string sanitize(std::string s) {
  for (char& c : s) {
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  }
  return s;
}

BuiltinSpec parse_function(const json& j, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + ": expected an object");
  BuiltinSpec bs;
  if (!j.contains("family") || !j.at("family").is_string()) {
    throw ConfigError(where + ".family: expected a string");
  }
  bs.family = j.at("family").get<std::string>();
  if (!is_known_builtin_family(bs.family)) {
    throw ConfigError(where + ".family: unknown builtin '" + bs.family + "'");
  }
  if (j.contains("n")) bs.n = require_number(j.at("n"), where + ".n");
  if (j.contains("scale")) bs.scale = require_number(j.at("scale"), where + ".scale");
  if (j.contains("c0")) bs.c0 = require_number(j.at("c0"), where + ".c0");
  if (j.contains("c1")) bs.c1 = require_number(j.at("c1"), where + ".c1");
  if (j.contains("center")) bs.center = require_number(j.at("center"), where + ".center");
  return bs;
}

}  // namespace

CampaignConfig parse_config_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config: top level must be an object");

  CampaignConfig cfg;
  for (const auto& key :
       {"functions", "intervals", "m_values", "exponents", "families"}) {
    if (!doc.contains(key) || !doc.at(key).is_array()) {
      throw ConfigError(std::string("config.") + key + ": required array missing");
    }
  }

  std::size_t idx = 0;
  for (const auto& f : doc.at("functions")) {
    cfg.functions.push_back(
        parse_function(f, "config.functions[" + std::to_string(idx++) + "]"));
  }

  idx = 0;
  for (const auto& iv : doc.at("intervals")) {
    const std::string where = "config.intervals[" + std::to_string(idx++) + "]";
    if (!iv.is_array() || iv.size() != 2) {
      throw ConfigError(where + ": expected [a, b]");
    }
    const double a = require_number(iv.at(0), where + "[0]");
    const double b = require_number(iv.at(1), where + "[1]");
    if (!(a >= 0.0) || !(a < b)) {
      throw ConfigError(where + ": requires 0 <= a < b");
    }
    cfg.intervals.emplace_back(a, b);
  }

  idx = 0;
  for (const auto& mv : doc.at("m_values")) {
    const std::string where = "config.m_values[" + std::to_string(idx++) + "]";
    const double m = require_number(mv, where);
    if (!(m > 0.0) || !(m <= 1.0)) {
      throw ConfigError(where + ": m must lie in (0, 1], got " + std::to_string(m));
    }
    cfg.m_values.push_back(m);
  }

  idx = 0;
  for (const auto& qv : doc.at("exponents")) {
    const std::string where = "config.exponents[" + std::to_string(idx++) + "]";
    const double q = require_number(qv, where);
    if (!(q >= 1.0)) {
      throw ConfigError(where + ": q must be >= 1, got " + std::to_string(q));
    }
    cfg.exponents.push_back(q);
  }

  idx = 0;
  for (const auto& fam : doc.at("families")) {
    const std::string where = "config.families[" + std::to_string(idx++) + "]";
    if (!fam.is_string()) throw ConfigError(where + ": expected a string");
    const std::string name = fam.get<std::string>();
    if (std::find(known_families().begin(), known_families().end(), name) ==
        known_families().end()) {
      throw ConfigError(where + ": unknown family '" + name + "'");
    }
    cfg.families.push_back(name);
  }

  if (doc.contains("quad_tol")) {
    cfg.quad_tol = require_number(doc.at("quad_tol"), "config.quad_tol");
    if (!(cfg.quad_tol > 0.0)) throw ConfigError("config.quad_tol: must be positive");
  }
  if (doc.contains("slack_tol")) {
    cfg.slack_tol = require_number(doc.at("slack_tol"), "config.slack_tol");
    if (!(cfg.slack_tol > 0.0)) throw ConfigError("config.slack_tol: must be positive");
  }
  if (doc.contains("cert_tol")) {
    cfg.cert_tol = require_number(doc.at("cert_tol"), "config.cert_tol");
    if (!(cfg.cert_tol > 0.0)) throw ConfigError("config.cert_tol: must be positive");
  }
  if (doc.contains("cert_grid")) {
    cfg.cert_grid = static_cast<int>(require_number(doc.at("cert_grid"), "config.cert_grid"));
    if (cfg.cert_grid < 3) throw ConfigError("config.cert_grid: must be >= 3");
  }
  if (doc.contains("output")) {
    const auto& out = doc.at("output");
    if (!out.is_object()) throw ConfigError("config.output: expected an object");
    if (out.contains("path")) {
      if (!out.at("path").is_string()) throw ConfigError("config.output.path: expected a string");
      cfg.out_path = out.at("path").get<std::string>();
    }
    if (out.contains("format")) {
      if (!out.at("format").is_string()) throw ConfigError("config.output.format: expected a string");
      cfg.format = out.at("format").get<std::string>();
    }
  }
  if (cfg.format != "csv" && cfg.format != "json") {
    throw ConfigError("config.output.format: must be 'csv' or 'json'");
  }
  return cfg;
}

CampaignConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

namespace {

// Shared per-campaign state: certificates, gaps and residuals are
// independent of most grid axes, so they are computed once and reused.
struct CampaignState {
  const CampaignConfig& cfg;
  std::map<std::string, Certificate> certs;
  std::map<std::string, double> scalars;
};

std::string key_of(const std::string& kind, const std::string& label, double a,
                   double b, double m, double q) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%s|%s|%.17g|%.17g|%.17g|%.17g",
                kind.c_str(), label.c_str(), a, b, m, q);
  return buf;
}

const Certificate& cached_cert(CampaignState& st, const std::string& key,
                               const std::function<Certificate()>& make) {
  auto it = st.certs.find(key);
  if (it == st.certs.end()) it = st.certs.emplace(key, make()).first;
  return it->second;
}

double cached_scalar(CampaignState& st, const std::string& key,
                     const std::function<double()>& make) {
  auto it = st.scalars.find(key);
  if (it == st.scalars.end()) it = st.scalars.emplace(key, make()).first;
  return it->second;
}

RealFn abs_deriv_pow(const FunctionSpec& spec, double q) {
  return [&spec, q](double x) {
    const double d = std::abs(derivative_at(spec, x));
    return q == 1.0 ? d : std::pow(d, q);
  };
}

struct PointContext {
  const FunctionSpec& spec;
  Interval iv;
  MParam m;
  double q;
  double upper;  // b / m
};

std::string cert_note(const std::string& name, const Certificate& c) {
  return name + "{" + summarize(c) + "}";
}

// Midpoint/trapezoid gaps per (function, interval); certificates per
// hypothesis key. Both are deterministic, so caching cannot change
// results, only runtime.
double gap_of(CampaignState& st, const PointContext& pc, bool trapezoid) {
  const std::string key = key_of(trapezoid ? "tgap" : "mgap", pc.spec.label(),
                                 pc.iv.a, pc.iv.b, 0, 0);
  return cached_scalar(st, key, [&] {
    return trapezoid ? trapezoid_gap(pc.spec, pc.iv, st.cfg.quad_tol)
                     : midpoint_gap(pc.spec, pc.iv, st.cfg.quad_tol);
  });
}

void fill_bound_set(VerificationRecord& rec, const BoundSet& bs, double lhs,
                    double slack_tol) {
  for (int i = 0; i < 4; ++i) rec.variants[i] = bs.values[i];
  rec.minimum = bs.minimum;
  rec.argmin = bs.argmin;
  rec.lhs = lhs;
  rec.slack = bs.minimum - lhs;
  rec.status = (*rec.slack >= -slack_tol) ? RecordStatus::pass : RecordStatus::fail;
}

void skip(VerificationRecord& rec, const std::string& reason) {
  rec.status = RecordStatus::skipped;
  rec.reason = reason;
}

void evaluate_T(CampaignState& st, const PointContext& pc,
                VerificationRecord& rec) {
  const auto& cert = cached_cert(
      st, key_of("mconv_absd", pc.spec.label(), 0, pc.upper, pc.m.m, 1.0), [&] {
        return certify_m_convex(abs_deriv_pow(pc.spec, 1.0), pc.m, pc.upper,
                                st.cfg.cert_grid, st.cfg.cert_tol);
      });
  rec.certificates = cert_note("m_convex(|f'|)", cert);
  if (cert.status != CertStatus::pass) {
    skip(rec, std::string("cert_") + to_string(cert.status) + ":m_convex_abs_deriv");
    return;
  }
  fill_bound_set(rec, t_bounds(pc.spec, pc.iv, pc.m), gap_of(st, pc, false),
                 st.cfg.slack_tol);
}

void evaluate_UV(CampaignState& st, const PointContext& pc, bool holder,
                 VerificationRecord& rec) {
  if (holder && pc.q <= 1.0) {
    skip(rec, "unsupported:q_has_no_conjugate");
    return;
  }
  const auto& cert = cached_cert(
      st, key_of("mconv_absd", pc.spec.label(), 0, pc.upper, pc.m.m, pc.q), [&] {
        return certify_m_convex(abs_deriv_pow(pc.spec, pc.q), pc.m, pc.upper,
                                st.cfg.cert_grid, st.cfg.cert_tol);
      });
  rec.certificates = cert_note("m_convex(|f'|^q)", cert);
  if (cert.status != CertStatus::pass) {
    skip(rec, std::string("cert_") + to_string(cert.status) + ":m_convex_abs_deriv_pow");
    return;
  }
  const double lhs = gap_of(st, pc, false);
  if (holder) {
    const ExponentPair exps = ExponentPair::from_q(pc.q);
    rec.p = exps.p;
    fill_bound_set(rec, u_bounds(pc.spec, pc.iv, pc.m, exps).tight, lhs,
                   st.cfg.slack_tol);
  } else {
    fill_bound_set(rec, v_bounds(pc.spec, pc.iv, pc.m, pc.q), lhs,
                   st.cfg.slack_tol);
  }
}

void evaluate_sandwich(CampaignState& st, const PointContext& pc,
                       VerificationRecord& rec) {
  const auto& cert = cached_cert(
      st, key_of("mconv_f", pc.spec.label(), 0, pc.upper, pc.m.m, 0), [&] {
        return certify_m_convex([&](double x) { return pc.spec.value(x); },
                                pc.m, pc.upper, st.cfg.cert_grid,
                                st.cfg.cert_tol);
      });
  rec.certificates = cert_note("m_convex(f)", cert);
  if (cert.status != CertStatus::pass) {
    skip(rec, std::string("cert_") + to_string(cert.status) + ":m_convex_f");
    return;
  }
  const SandwichResult s =
      dragomir_sandwich(pc.spec, pc.iv, pc.m, st.cfg.quad_tol);
  rec.variants[0] = s.left;
  rec.variants[1] = s.middle;
  rec.variants[2] = s.right;
  rec.minimum = s.right;
  rec.lhs = s.left;
  rec.slack = std::min(s.middle - s.left, s.right - s.middle);
  rec.status = (*rec.slack >= -st.cfg.slack_tol) ? RecordStatus::pass
                                                 : RecordStatus::fail;
}

void evaluate_product(CampaignState& st, const PointContext& pc,
                      VerificationRecord& rec) {
  if (pc.q <= 1.0) {
    skip(rec, "unsupported:q_has_no_conjugate");
    return;
  }
  const ExponentPair exps = ExponentPair::from_q(pc.q);
  rec.p = exps.p;
  ProductBoundResult r;
  try {
    r = product_bound(pc.spec, pc.spec, pc.iv, pc.m, exps, st.cfg.quad_tol,
                      st.cfg.cert_grid, st.cfg.cert_tol);
  } catch (const PreconditionError&) {
    skip(rec, "cert_failed:product_hypotheses");
    return;
  }
  rec.certificates = std::string("direction=") + to_string(r.direction);
  rec.variants[0] = r.lhs;
  rec.variants[1] = r.rhs;
  rec.lhs = r.lhs;
  rec.minimum = r.rhs;
  rec.slack = r.direction == ProductDirection::lower_bound ? r.lhs - r.rhs
                                                           : r.rhs - r.lhs;
  rec.status = (*rec.slack >= -st.cfg.slack_tol) ? RecordStatus::pass
                                                 : RecordStatus::fail;
}

void evaluate_means(CampaignState& st, const PointContext& pc,
                    const BuiltinSpec& builtin, VerificationRecord& rec) {
  const auto order = builtin.integral_power();
  if (!order) {
    skip(rec, "unsupported:means_requires_integer_power");
    return;
  }
  if (!(pc.iv.a > 0.0)) {
    skip(rec, "unsupported:means_requires_positive_a");
    return;
  }
  const Prop1Result r = prop1_bounds(pc.iv.a, pc.iv.b, *order, pc.m);
  fill_bound_set(rec, r.bounds, r.lhs, st.cfg.slack_tol);
}

void evaluate_lemma1(CampaignState& st, const PointContext& pc,
                     VerificationRecord& rec) {
  const double residual = cached_scalar(
      st, key_of("lemma1", pc.spec.label(), pc.iv.a, pc.iv.b, 0, 0), [&] {
        return midpoint_identity_residual(pc.spec, pc.iv, st.cfg.quad_tol);
      });
  const double threshold = 10.0 * st.cfg.quad_tol;
  rec.lhs = residual;
  rec.minimum = threshold;
  rec.slack = threshold - residual;
  rec.status = (*rec.slack >= -st.cfg.slack_tol) ? RecordStatus::pass
                                                 : RecordStatus::fail;
}

void evaluate_baselines(CampaignState& st, const PointContext& pc,
                        VerificationRecord& rec) {
  const auto& conv_abs = cached_cert(
      st, key_of("conv_absd", pc.spec.label(), pc.iv.a, pc.iv.b, 1.0, 1.0), [&] {
        return certify_convex_on(abs_deriv_pow(pc.spec, 1.0), pc.iv,
                                 st.cfg.cert_grid, st.cfg.cert_tol);
      });
  const auto& conv_abs_q = cached_cert(
      st, key_of("conv_absd", pc.spec.label(), pc.iv.a, pc.iv.b, 1.0, pc.q), [&] {
        return certify_convex_on(abs_deriv_pow(pc.spec, pc.q), pc.iv,
                                 st.cfg.cert_grid, st.cfg.cert_tol);
      });
  const auto& mconv_q = cached_cert(
      st, key_of("mconv_absd", pc.spec.label(), 0, pc.upper, pc.m.m, pc.q), [&] {
        return certify_m_convex(abs_deriv_pow(pc.spec, pc.q), pc.m, pc.upper,
                                st.cfg.cert_grid, st.cfg.cert_tol);
      });
  rec.certificates = cert_note("convex(|f'|)", conv_abs) + " " +
                     cert_note("convex(|f'|^q)", conv_abs_q) + " " +
                     cert_note("m_convex(|f'|^q)", mconv_q);
  if (conv_abs.status != CertStatus::pass) {
    skip(rec, std::string("cert_") + to_string(conv_abs.status) + ":convex_abs_deriv");
    return;
  }
  if (conv_abs_q.status != CertStatus::pass) {
    skip(rec, std::string("cert_") + to_string(conv_abs_q.status) + ":convex_abs_deriv_pow");
    return;
  }
  if (mconv_q.status != CertStatus::pass) {
    skip(rec, std::string("cert_") + to_string(mconv_q.status) + ":m_convex_abs_deriv_pow");
    return;
  }

  const double trap = gap_of(st, pc, true);
  const double mid = gap_of(st, pc, false);
  const double l0 = classical_trapezoid_bound(pc.spec, pc.iv);
  const double pp = pearce_pecaric_bounds(pc.spec, pc.iv, pc.q).midpoint;
  const double bak = bakula_midpoint_bound(pc.spec, pc.iv, pc.m, pc.q);

  rec.variants[0] = l0;
  rec.variants[1] = pp;
  rec.variants[2] = bak;
  rec.minimum = std::min({l0, pp, bak});
  rec.argmin = l0 <= bak + kArgminTieTol && l0 <= pp + kArgminTieTol ? 1
               : pp <= bak + kArgminTieTol                           ? 2
                                                                     : 3;
  rec.lhs = mid;
  rec.slack = std::min({l0 - trap, pp - trap, pp - mid, bak - mid});
  rec.status = (*rec.slack >= -st.cfg.slack_tol) ? RecordStatus::pass
                                                 : RecordStatus::fail;
}

}  // namespace

std::vector<VerificationRecord> run_campaign(const CampaignConfig& config) {
  std::vector<VerificationRecord> records;
  CampaignState st{config, {}, {}};

  for (const auto& builtin : config.functions) {
    for (const auto& [a, b] : config.intervals) {
      for (const double m_value : config.m_values) {
        for (const double q : config.exponents) {
          for (const auto& family : config.families) {
            VerificationRecord rec;
            rec.a = a;
            rec.b = b;
            rec.m = m_value;
            rec.q = q;
            rec.family = family;
            try {
              const MParam m(m_value);
              const Interval iv(a, b);
              const double upper = b / m_value;
              const FunctionSpec spec = make_builtin(builtin, upper);
              rec.function = spec.label();
              rec.derivative_mode = spec.has_analytic_derivative()
                                        ? "analytic"
                                        : "finite_difference";
              const PointContext pc{spec, iv, m, q, upper};
              if (family == "T") {
                evaluate_T(st, pc, rec);
              } else if (family == "U") {
                evaluate_UV(st, pc, /*holder=*/true, rec);
              } else if (family == "V") {
                evaluate_UV(st, pc, /*holder=*/false, rec);
              } else if (family == "sandwich") {
                evaluate_sandwich(st, pc, rec);
              } else if (family == "product") {
                evaluate_product(st, pc, rec);
              } else if (family == "means") {
                evaluate_means(st, pc, builtin, rec);
              } else if (family == "lemma1") {
                evaluate_lemma1(st, pc, rec);
              } else if (family == "baselines") {
                evaluate_baselines(st, pc, rec);
              } else {
                throw ConfigError("unknown family '" + family + "'");
              }
            } catch (const std::exception& e) {
              rec.status = RecordStatus::errored;
              if (rec.function.empty()) rec.function = builtin.label();
              rec.reason = sanitize(e.what());
            }
            records.push_back(std::move(rec));
          }
        }
      }
    }
  }

  std::sort(records.begin(), records.end(),
            [](const VerificationRecord& x, const VerificationRecord& y) {
              return std::tie(x.function, x.a, x.b, x.m, x.q, x.family) <
                     std::tie(y.function, y.a, y.b, y.m, y.q, y.family);
            });
  return records;
}

CampaignSummary summarize(const std::vector<VerificationRecord>& records) {
  CampaignSummary s;
  for (const auto& r : records) {
    switch (r.status) {
      case RecordStatus::pass: ++s.passed; break;
      case RecordStatus::fail: ++s.failed; break;
      case RecordStatus::skipped: ++s.skipped; break;
      case RecordStatus::errored: ++s.errored; break;
    }
  }
  return s;
}

}  // namespace hh
