#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "hhbounds/bounds.hpp"
#include "hhbounds/builtins.hpp"
#include "hhbounds/campaign.hpp"
#include "hhbounds/certify.hpp"
#include "hhbounds/errors.hpp"
#include "hhbounds/identity.hpp"
#include "hhbounds/means.hpp"
#include "hhbounds/quadrature.hpp"
#include "hhbounds/report.hpp"

namespace py = pybind11;
using namespace hh;

namespace {

FunctionSpec make_spec(py::function f, py::object df, double domain_upper,
                       const std::string& label) {
  std::optional<RealFn> deriv;
  if (!df.is_none()) {
    auto dfn = df.cast<py::function>();
    deriv = [dfn](double x) { return dfn(x).cast<double>(); };
  }
  return FunctionSpec([f](double x) { return f(x).cast<double>(); },
                      std::move(deriv), domain_upper, label);
}

BuiltinSpec builtin_from_kwargs(const std::string& family, double n, double scale,
                                double c0, double c1, double center) {
  BuiltinSpec bs;
  bs.family = family;
  bs.n = n;
  bs.scale = scale;
  bs.c0 = c0;
  bs.c1 = c1;
  bs.center = center;
  return bs;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Midpoint-gap bounds for m-convex derivative classes";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<NonFiniteError>(m, "NonFiniteError", PyExc_ArithmeticError);
  py::register_exception<MaxSubdivisionError>(m, "MaxSubdivisionError", PyExc_RuntimeError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::class_<Interval>(m, "Interval")
      .def(py::init<double, double>(), py::arg("a"), py::arg("b"))
      .def_readonly("a", &Interval::a)
      .def_readonly("b", &Interval::b)
      .def("midpoint", &Interval::midpoint)
      .def("width", &Interval::width);

  py::class_<MParam>(m, "MParam")
      .def(py::init<double>(), py::arg("m"))
      .def_readonly("m", &MParam::m);

  py::class_<ExponentPair>(m, "ExponentPair")
      .def(py::init<double, double>(), py::arg("p"), py::arg("q"))
      .def_static("from_q", &ExponentPair::from_q, py::arg("q"))
      .def_static("from_p", &ExponentPair::from_p, py::arg("p"))
      .def_readonly("p", &ExponentPair::p)
      .def_readonly("q", &ExponentPair::q);

  py::class_<FunctionSpec>(m, "FunctionSpec")
      .def(py::init(&make_spec), py::arg("f"), py::arg("df") = py::none(),
           py::arg("domain_upper") = 1.0, py::arg("label") = "f")
      .def_property_readonly("domain_upper", &FunctionSpec::domain_upper)
      .def_property_readonly("label", &FunctionSpec::label)
      .def_property_readonly("has_analytic_derivative",
                             &FunctionSpec::has_analytic_derivative)
      .def("__call__", &FunctionSpec::value, py::arg("x"));

  m.def("builtin", [](const std::string& family, double domain_upper, double n,
                      double scale, double c0, double c1, double center) {
          return make_builtin(
              builtin_from_kwargs(family, n, scale, c0, c1, center), domain_upper);
        },
        py::arg("family"), py::arg("domain_upper"), py::arg("n") = 2.0,
        py::arg("scale") = 1.0, py::arg("c0") = 0.0, py::arg("c1") = 1.0,
        py::arg("center") = 0.0, "Instantiate a registry function on [0, domain_upper]");

  py::class_<QuadResult>(m, "QuadResult")
      .def_readonly("value", &QuadResult::value)
      .def_readonly("error_estimate", &QuadResult::error_estimate)
      .def_readonly("subdivisions", &QuadResult::subdivisions);

  m.def("integrate",
        [](py::function g, double a, double b, double tol) {
          return integrate([g](double x) { return g(x).cast<double>(); }, a, b, tol);
        },
        py::arg("g"), py::arg("a"), py::arg("b"), py::arg("tol") = kDefaultQuadTol);

  m.def("derivative_at", &derivative_at, py::arg("spec"), py::arg("x"));
  m.def("midpoint_gap", &midpoint_gap, py::arg("spec"), py::arg("iv"),
        py::arg("tol") = kDefaultQuadTol, py::arg("signed_value") = false);
  m.def("trapezoid_gap", &trapezoid_gap, py::arg("spec"), py::arg("iv"),
        py::arg("tol") = kDefaultQuadTol, py::arg("signed_value") = false);
  m.def("midpoint_identity_residual", &midpoint_identity_residual,
        py::arg("spec"), py::arg("iv"), py::arg("tol") = kDefaultQuadTol);

  py::enum_<CertStatus>(m, "CertStatus")
      .value("pass_", CertStatus::pass)
      .value("fail", CertStatus::fail)
      .value("inconclusive", CertStatus::inconclusive);

  py::class_<Witness>(m, "Witness")
      .def_readonly("x", &Witness::x)
      .def_readonly("y", &Witness::y)
      .def_readonly("t", &Witness::t);

  py::class_<Certificate>(m, "Certificate")
      .def_readonly("status", &Certificate::status)
      .def_readonly("worst_violation", &Certificate::worst_violation)
      .def_readonly("witness", &Certificate::witness)
      .def_readonly("samples", &Certificate::samples)
      .def_readonly("tolerance", &Certificate::tolerance)
      .def("__repr__", [](const Certificate& c) { return summarize(c); });

  const auto wrap = [](py::function g) {
    return RealFn([g](double x) { return g(x).cast<double>(); });
  };
  m.def("certify_m_convex",
        [wrap](py::function g, const MParam& mp, double upper, int grid_n, double tol) {
          return certify_m_convex(wrap(g), mp, upper, grid_n, tol);
        },
        py::arg("g"), py::arg("m"), py::arg("upper"),
        py::arg("grid_n") = kDefaultCertGrid, py::arg("tol") = kDefaultCertTol);
  m.def("certify_m_concave",
        [wrap](py::function g, const MParam& mp, double upper, int grid_n, double tol) {
          return certify_m_concave(wrap(g), mp, upper, grid_n, tol);
        },
        py::arg("g"), py::arg("m"), py::arg("upper"),
        py::arg("grid_n") = kDefaultCertGrid, py::arg("tol") = kDefaultCertTol);
  m.def("certify_convex_on",
        [wrap](py::function f, const Interval& iv, int grid_n, double tol) {
          return certify_convex_on(wrap(f), iv, grid_n, tol);
        },
        py::arg("f"), py::arg("iv"), py::arg("grid_n") = kDefaultCertGrid,
        py::arg("tol") = kDefaultCertTol);
  m.def("certify_concave_nonneg",
        [wrap](py::function f, const Interval& iv, int grid_n, double tol) {
          return certify_concave_nonneg(wrap(f), iv, grid_n, tol);
        },
        py::arg("f"), py::arg("iv"), py::arg("grid_n") = kDefaultCertGrid,
        py::arg("tol") = kDefaultCertTol);
  m.def("certify_thunsdorff",
        [wrap](py::function f, const Interval& iv, int grid_n, double tol) {
          return certify_thunsdorff(wrap(f), iv, grid_n, tol);
        },
        py::arg("f"), py::arg("iv"), py::arg("grid_n") = kDefaultCertGrid,
        py::arg("tol") = kDefaultCertTol);
  m.def("anchor_nonpositive",
        [wrap](py::function g, double tol) { return anchor_nonpositive(wrap(g), tol); },
        py::arg("g"), py::arg("tol") = kDefaultCertTol);

  py::enum_<BoundFamily>(m, "BoundFamily")
      .value("T", BoundFamily::T)
      .value("U", BoundFamily::U)
      .value("V", BoundFamily::V)
      .value("K", BoundFamily::K)
      .value("L", BoundFamily::L);

  py::class_<BoundSet>(m, "BoundSet")
      .def_readonly("family", &BoundSet::family)
      .def_property_readonly("values",
                             [](const BoundSet& bs) {
                               return std::vector<double>(bs.values.begin(),
                                                          bs.values.end());
                             })
      .def_readonly("minimum", &BoundSet::minimum)
      .def_readonly("argmin", &BoundSet::argmin);

  py::class_<UBounds>(m, "UBounds")
      .def_readonly("tight", &UBounds::tight)
      .def_readonly("loose", &UBounds::loose);

  py::class_<SandwichResult>(m, "SandwichResult")
      .def_readonly("left", &SandwichResult::left)
      .def_readonly("middle", &SandwichResult::middle)
      .def_readonly("right", &SandwichResult::right);

  py::class_<PearcePecaricBounds>(m, "PearcePecaricBounds")
      .def_readonly("trapezoid", &PearcePecaricBounds::trapezoid)
      .def_readonly("midpoint", &PearcePecaricBounds::midpoint);

  py::class_<FavardSides>(m, "FavardSides")
      .def_readonly("lhs", &FavardSides::lhs)
      .def_readonly("rhs", &FavardSides::rhs);

  py::enum_<ProductDirection>(m, "ProductDirection")
      .value("lower_bound", ProductDirection::lower_bound)
      .value("upper_bound", ProductDirection::upper_bound);

  py::class_<ProductBoundResult>(m, "ProductBoundResult")
      .def_readonly("lhs", &ProductBoundResult::lhs)
      .def_readonly("rhs", &ProductBoundResult::rhs)
      .def_readonly("direction", &ProductBoundResult::direction);

  py::enum_<SpecialCase>(m, "SpecialCase")
      .value("general", SpecialCase::general)
      .value("increasing", SpecialCase::increasing)
      .value("decreasing", SpecialCase::decreasing)
      .value("mid_zero", SpecialCase::mid_zero)
      .value("ends_zero", SpecialCase::ends_zero);

  m.def("t_bounds", &t_bounds, py::arg("spec"), py::arg("iv"), py::arg("m"));
  m.def("u_bounds", &u_bounds, py::arg("spec"), py::arg("iv"), py::arg("m"),
        py::arg("exps"));
  m.def("v_bounds", &v_bounds, py::arg("spec"), py::arg("iv"), py::arg("m"),
        py::arg("q"));
  m.def("classical_trapezoid_bound", &classical_trapezoid_bound, py::arg("spec"),
        py::arg("iv"));
  m.def("pearce_pecaric_bounds", &pearce_pecaric_bounds, py::arg("spec"),
        py::arg("iv"), py::arg("q"));
  m.def("bakula_midpoint_bound", &bakula_midpoint_bound, py::arg("spec"),
        py::arg("iv"), py::arg("m"), py::arg("q"));
  m.def("dragomir_sandwich", &dragomir_sandwich, py::arg("spec"), py::arg("iv"),
        py::arg("m"), py::arg("tol") = kDefaultQuadTol);
  m.def("favard_sides", &favard_sides, py::arg("spec"), py::arg("iv"),
        py::arg("q"), py::arg("tol") = kDefaultQuadTol);
  m.def("product_bound", &product_bound, py::arg("f"), py::arg("g"),
        py::arg("iv"), py::arg("m"), py::arg("exps"),
        py::arg("tol") = kDefaultQuadTol, py::arg("grid_n") = kDefaultCertGrid,
        py::arg("cert_tol") = kDefaultCertTol);
  m.def("specialize_m1", &specialize_m1, py::arg("family"), py::arg("spec"),
        py::arg("iv"), py::arg("case"), py::arg("q") = 1.0,
        py::arg("hypothesis_tol") = kDefaultCertTol);

  m.def("arithmetic_mean", &arithmetic_mean, py::arg("a"), py::arg("b"));
  m.def("logarithmic_mean", &logarithmic_mean, py::arg("a"), py::arg("b"));
  m.def("p_log_mean", &p_log_mean, py::arg("a"), py::arg("b"), py::arg("p"));

  py::class_<Prop1Result>(m, "Prop1Result")
      .def_readonly("lhs", &Prop1Result::lhs)
      .def_readonly("bounds", &Prop1Result::bounds);

  py::class_<Prop2Result>(m, "Prop2Result")
      .def_readonly("lhs", &Prop2Result::lhs)
      .def_readonly("paper_lhs", &Prop2Result::paper_lhs)
      .def_readonly("bounds", &Prop2Result::bounds)
      .def_readonly("prefactor", &Prop2Result::prefactor)
      .def_readonly("bound_min", &Prop2Result::bound_min);

  m.def("prop1_bounds", &prop1_bounds, py::arg("a"), py::arg("b"), py::arg("n"),
        py::arg("m"));
  m.def("prop2_bounds", &prop2_bounds, py::arg("a"), py::arg("b"), py::arg("n"),
        py::arg("k"), py::arg("m"), py::arg("q"),
        py::arg("quad_tol") = kDefaultQuadTol);

  m.def("run_campaign_text",
        [](const std::string& config_text) {
          const auto cfg = parse_config_text(config_text);
          const auto records = run_campaign(cfg);
          const auto s = summarize(records);
          py::dict counts;
          counts["pass"] = s.passed;
          counts["fail"] = s.failed;
          counts["skipped"] = s.skipped;
          counts["errored"] = s.errored;
          return py::make_tuple(to_csv(records), to_json(records), counts);
        },
        py::arg("config_text"),
        "Run a campaign from JSON text; returns (csv, json, counts)");

#ifdef HHBOUNDS_VERSION
  m.attr("__version__") = HHBOUNDS_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
