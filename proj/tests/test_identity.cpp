#include <doctest.h>

#include <cmath>

#include "hhbounds/builtins.hpp"
#include "hhbounds/identity.hpp"
#include "oracle.hpp"

using hh::FunctionSpec;
using hh::Interval;
using hh::RealFn;

TEST_SUITE("identity") {

TEST_CASE("x^2 on [0,1]: both sides equal -1/12") {
  const auto f = hh::make_power(2.0, 2.0);
  // Oracle: f((a+b)/2) - avg = 1/4 - 1/3 = -1/12.
  const double lhs = 0.25 - oracle::avg_power(0.0, 1.0, 2.0);
  CHECK(lhs == doctest::Approx(-1.0 / 12.0).epsilon(1e-14));
  CHECK(hh::midpoint_identity_residual(f, Interval(0.0, 1.0), 1e-10) <= 1e-9);
}

TEST_CASE("affine functions are an exact zero of the identity") {
  const FunctionSpec f([](double x) { return 2.5 * x - 0.75; },
                       RealFn([](double) { return 2.5; }), 4.0, "affine");
  CHECK(hh::midpoint_identity_residual(f, Interval(0.0, 1.0), 1e-10) <= 1e-12);
  CHECK(hh::midpoint_identity_residual(f, Interval(1.0, 3.0), 1e-10) <= 1e-12);
}

TEST_CASE("exp on [0,2] with the antiderivative oracle") {
  const FunctionSpec f([](double x) { return std::exp(x); },
                       RealFn([](double x) { return std::exp(x); }), 4.0, "exp");
  const double lhs = std::exp(1.0) - oracle::avg_exp(0.0, 2.0, 1.0);
  CHECK(lhs == doctest::Approx(std::exp(1.0) - (std::exp(2.0) - 1.0) / 2.0)
                   .epsilon(1e-14));
  CHECK(hh::midpoint_identity_residual(f, Interval(0.0, 2.0), 1e-8) <= 1e-8);
}

TEST_CASE("residual stays below 10*tol across families and intervals") {
  const double tol = 1e-10;
  const FunctionSpec fams[] = {
      hh::make_power(2.0, 16.0),
      hh::make_power(3.0, 16.0),
      hh::make_power(4.0, 16.0),
      FunctionSpec([](double x) { return std::exp(x); },
                   RealFn([](double x) { return std::exp(x); }), 16.0, "exp"),
      FunctionSpec([](double x) { return 1.0 + 2.0 * x; },
                   RealFn([](double) { return 2.0; }), 16.0, "affine"),
  };
  // Log-spaced widths anchored at a few left endpoints.
  for (const auto& f : fams) {
    for (const double a : {0.0, 0.5, 2.0}) {
      for (const double w : {0.01, 0.1, 1.0, 10.0}) {
        const double b = a + w;
        if (b > f.domain_upper()) continue;
        CHECK(hh::midpoint_identity_residual(f, Interval(a, b), tol) <= 10.0 * tol);
      }
    }
  }
}

TEST_CASE("translation invariance: f + c changes neither side") {
  const double tol = 1e-10;
  for (const double c : {-5.0, 3.25}) {
    const FunctionSpec base = hh::make_power(3.0, 4.0);
    const FunctionSpec shifted([c](double x) { return std::pow(x, 3.0) + c; },
                               RealFn([](double x) { return 3.0 * x * x; }), 4.0,
                               "x^3+c");
    const double r0 = hh::midpoint_identity_residual(base, Interval(0.5, 2.0), tol);
    const double r1 = hh::midpoint_identity_residual(shifted, Interval(0.5, 2.0), tol);
    CHECK(std::abs(r0 - r1) <= 2.0 * tol);
  }
}

}  // TEST_SUITE
