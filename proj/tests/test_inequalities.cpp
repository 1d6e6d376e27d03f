#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "detail.hpp"
#include "ptrig/inequalities.hpp"

using namespace ptrig;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

GridSpec grid_of(int n, Spacing s = Spacing::Cosine) {
  GridSpec g;
  g.n = n;
  g.spacing = s;
  return g;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("tags round-trip") {
  for (FunctionId id : kAllFunctionIds) {
    CHECK(parse_function_id(to_string(id)) == id);
  }
  CHECK(parse_function_id("thm2_chain") == FunctionId::THM2_CHAIN);
  CHECK_FALSE(parse_function_id("THM3"));
  CHECK(minimum_asserted_p(FunctionId::LEM24_GAP) == 1.0);
  CHECK(minimum_asserted_p(FunctionId::THM1_F) == 2.0);
}

TEST_CASE("functionals reduce to classical formulas at p = 2") {
  const PParam p(2.0);
  const double s = std::sin(1.0), c = std::cos(1.0), sh = std::sinh(1.0), ch = std::cosh(1.0);
  const double A = std::log(1.0 / s);
  CHECK_THAT(thm1_f(1.0, p).value(), WithinRel(A / std::log(sh), 1e-13));
  CHECK_THAT(thm2_g(1.0, p).value(), WithinRel(A / std::log(ch), 1e-13));
  CHECK_THAT(lem22_f(1.0, p).value(), WithinRel(2.0 * s * A / (s - c), 1e-13));
  CHECK_THAT(lem23_g(1.0, p).value(), WithinRel(2.0 * sh * std::log(sh) / (ch - sh), 1e-13));
  CHECK_THAT(lem24_gap(1.0, p).value(), WithinRel(std::log(ch) - std::tanh(1.0) / 2.0, 1e-13));
  CHECK_THAT(lem24_gap(1.0, p).value(), WithinAbs(0.0530, 1e-4));
}

TEST_CASE("limits at the left end") {
  const double pv = GENERATE(2.0, 3.0, 5.0, 10.0);
  const PParam p(pv);
  CAPTURE(pv);
  CHECK_THAT(thm1_f(1e-3, p).value(), WithinAbs(1.0, 2e-3));
  CHECK_THAT(thm2_g(1e-3, p).value(), WithinAbs(1.0 / (1.0 + pv), 2e-3));
  CHECK_THAT(lem22_f(1e-3, p).value(), WithinAbs(1.0, 5e-3));
  CHECK_THAT(lem23_g(1e-3, p).value(), WithinAbs(1.0, 5e-3));
  CHECK(std::abs(lem24_gap(1e-4, p).value()) <= 1e-7);
  CHECK(lem24_gap(1e-4, p).value() > 0.0);
}

TEST_CASE("values near the right end at p = 2") {
  const PParam p(2.0);
  const double x = kHalfPi * (1.0 - 1e-9);
  CHECK_THAT(thm1_f(x, p).value(), WithinAbs(1.1825, 5e-4));
  CHECK_THAT(thm2_g(x, p).value(), WithinAbs(sharp_constants(p).beta.value(), 1e-6));
  CHECK_THAT(lem22_f(x, p).value(), WithinAbs(2.0 * std::log(kHalfPi), 1e-6));
}

TEST_CASE("gap with the displayed extra factor x goes negative") {
  const PParam p(2.0);
  const Evaluation v = lem24_displayed_gap(2.0, p);
  CHECK(v.value() + v.abs_err() < 0.0);
  CHECK(lem24_gap(2.0, p).value() > 0.0);
}

TEST_CASE("lem24 gap is stable across tolerances") {
  const PParam p(3.0);
  for (double x : {1e-3, 0.5, 2.0}) {
    const Evaluation fine = lem24_gap(x, p);
    const Evaluation coarse = lem24_gap(x, p, Tolerance(1e-8, 1e-8));
    CHECK(fine.value() > 0.0);
    CHECK(std::abs(fine.value() - coarse.value()) <= coarse.abs_err() + fine.abs_err() + 1e-15);
  }
}

TEST_CASE("sharp constants") {
  const SharpConstants k2 = sharp_constants(PParam(2.0));
  CHECK(k2.alpha == 1.0 / 3.0);
  CHECK_THAT(k2.beta.value(), WithinAbs(0.4909, 5e-5));
  CHECK_THAT(k2.beta.value(), WithinAbs(std::log(kHalfPi) / std::log(std::cosh(kHalfPi)), 1e-14));
  CHECK(sharp_constants(PParam(3.0)).alpha == 0.25);
  CHECK(kind_of([] { sharp_constants(PParam(1.5)); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("second-order gap coefficients at p = 2") {
  const auto e = detail::expansions(PParam(2.0));
  CHECK(e->AmB[1] == 0.0L);
  CHECK_THAT(static_cast<double>(e->AmB[2]), WithinAbs(1.0 / 90.0, 1e-17));
  CHECK_THAT(static_cast<double>(e->AmaC[2]), WithinAbs(1.0 / 30.0, 1e-17));
  CHECK_THAT(static_cast<double>(e->CmTg[2]), WithinAbs(1.0 / 12.0, 1e-17));
  CHECK_THAT(static_cast<double>(e->A[1]), WithinAbs(1.0 / 6.0, 1e-17));
}

TEST_CASE("series and direct routes agree at the switch point") {
  const double pv = GENERATE(1.5, 2.0, 3.0, 5.0, 10.0);
  const PParam p(pv);
  const auto e = detail::expansions(p);
  const double x = std::pow(e->u_limit, 1.0 / pv);
  const detail::Quantities lo = detail::quantities(x * (1.0 - 1e-12), p, detail::kBoth,
                                                   core_tolerance());
  const detail::Quantities hi = detail::quantities(x * (1.0 + 1e-12), p, detail::kBoth,
                                                   core_tolerance());
  REQUIRE(lo.series);
  REQUIRE_FALSE(hi.series);
  CAPTURE(pv, x);
  auto close = [](const Evaluation& a, const Evaluation& b) {
    // The points differ by 2e-12 relative; all quantities scale like u.
    const double drift = 1e-11 * std::abs(a.value()) * 4.0;
    return std::abs(a.value() - b.value()) <= a.abs_err() + b.abs_err() + drift;
  };
  CHECK(close(lo.A, hi.A));
  CHECK(close(lo.B, hi.B));
  CHECK(close(lo.C, hi.C));
  CHECK(close(lo.Lc, hi.Lc));
  CHECK(close(lo.Q, hi.Q));
  CHECK(close(lo.R, hi.R));
  CHECK(close(lo.Tg, hi.Tg));
  CHECK(close(lo.AmB, hi.AmB));
  CHECK(close(lo.AmaC, hi.AmaC));
  CHECK(close(lo.CmTg, hi.CmTg));
}

TEST_CASE("functional domains") {
  const PParam p(3.0);
  CHECK(kind_of([&] { thm1_f(0.0, p); }) == ErrorKind::DomainError);
  CHECK(kind_of([&] { thm2_g(pi_p(p).value() / 2.0, p); }) == ErrorKind::DomainError);
  CHECK(kind_of([&] { lem23_g(-1.0, p); }) == ErrorKind::DomainError);
  CHECK(kind_of([&] { evaluate_functional(FunctionId::THM1_CHAIN, 0.5, p); }) ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("grid construction") {
  for (Spacing s : {Spacing::Uniform, Spacing::Log, Spacing::Cosine}) {
    CAPTURE(to_string(s));
    const std::vector<double> xs = grid_points(grid_of(50, s), 0.0, 2.0);
    REQUIRE(xs.size() == 50);
    CHECK_THAT(xs.front(), WithinAbs(2e-4, 1e-15));
    CHECK_THAT(xs.back(), WithinAbs(2.0 - 2e-4, 1e-15));
    for (std::size_t i = 1; i < xs.size(); ++i) {
      CHECK(xs[i] > xs[i - 1]);
    }
  }
  CHECK(kind_of([] { grid_of(2).validate(); }) == ErrorKind::InvalidArgument);
  GridSpec g;
  g.left_offset = 1e-5;
  CHECK(kind_of([&] { g.validate(); }) == ErrorKind::InvalidArgument);
  g.left_offset = 0.6;
  g.right_offset = 0.5;
  CHECK(kind_of([&] { g.validate(); }) == ErrorKind::InvalidArgument);
  CHECK(parse_spacing("log") == Spacing::Log);
  CHECK_FALSE(parse_spacing("chebyshev"));
}

TEST_CASE("chains pass on small grids") {
  const PParam p2(2.0), p3(3.0);
  const GridSpec g = grid_of(50);
  const VerificationReport t2 = verify_chain(FunctionId::THM2_CHAIN, p2, g);
  CHECK(t2.passed);
  CHECK(t2.points.size() == 50);
  CHECK(t2.min_margin > 0.0);
  REQUIRE(t2.routes_agree.has_value());
  CHECK(*t2.routes_agree);
  CHECK(verify_chain(FunctionId::COROLLARY_CHAIN, p2, g).passed);
  CHECK(verify_chain(FunctionId::THM1_CHAIN, p3, g).passed);
  for (double pv : {2.0, 3.0, 5.0, 10.0}) {
    CAPTURE(pv);
    CHECK(verify_chain(FunctionId::LEM22_CHAIN, PParam(pv), g).passed);
    CHECK(verify_chain(FunctionId::LEM23_CHAIN, PParam(pv), g).passed);
  }
  for (const ReportPoint& pt : t2.points) {
    for (std::size_t i = 1; i < pt.values.size(); ++i) {
      CHECK(pt.values[i] >= pt.values[i - 1]);
    }
  }
}

TEST_CASE("monotone checks") {
  const PParam p(3.0);
  const GridSpec g = grid_of(60);
  const VerificationReport inc = verify_monotone(FunctionId::THM1_F, p, g, Direction::Increasing);
  CHECK(inc.monotone_verdict == MonotoneVerdict::Increasing);
  CHECK(inc.passed);
  REQUIRE(inc.observed_supremum.has_value());
  CHECK(*inc.observed_supremum < 3.0);
  const VerificationReport dec = verify_monotone(FunctionId::THM1_F, p, g, Direction::Decreasing);
  CHECK(dec.monotone_verdict == MonotoneVerdict::Violated);
  CHECK_FALSE(dec.passed);
  CHECK(verify_claim(FunctionId::LEM22_F, p, g).monotone_verdict == MonotoneVerdict::Decreasing);
  // Steps smaller than a loose error budget cannot be certified.
  VerifyOptions loose;
  loose.tol = Tolerance(1e-4, 1e-4);
  const VerificationReport vague =
      verify_monotone(FunctionId::THM1_F, p, grid_of(2000), Direction::Increasing, loose);
  CHECK(vague.monotone_verdict == MonotoneVerdict::Inconclusive);
  CHECK_FALSE(vague.passed);
  CHECK(stated_direction(FunctionId::LEM23_G) == Direction::Increasing);
}

TEST_CASE("bounds sandwich and ranges") {
  for (double pv : {2.0, 10.0}) {
    const VerificationReport r = bounds_sandwich(PParam(pv), grid_of(80));
    CHECK(r.passed);
    CHECK(r.check == "bounds");
    CHECK(r.claim == FunctionId::THM1_F);
    for (FunctionId id : {FunctionId::THM1_F, FunctionId::THM2_G, FunctionId::LEM22_F,
                          FunctionId::LEM23_G, FunctionId::LEM24_GAP}) {
      CHECK(verify_range(id, PParam(pv), grid_of(80)).passed);
    }
  }
}

TEST_CASE("claims below their hypothesis are exploratory") {
  const PParam p(1.5);
  const GridSpec g = grid_of(30);
  CHECK(kind_of([&] { verify_claim(FunctionId::THM1_CHAIN, p, g); }) ==
        ErrorKind::InvalidArgument);
  VerifyOptions opt;
  opt.allow_exploratory = true;
  const VerificationReport r = verify_claim(FunctionId::THM1_CHAIN, p, g, opt);
  CHECK_FALSE(r.asserted);
  const VerificationReport lem24 = verify_claim(FunctionId::LEM24_GAP, p, g);
  CHECK(lem24.asserted);
  CHECK(lem24.passed);
}

TEST_CASE("reports do not depend on the thread count") {
  const PParam p(3.0);
  const GridSpec g = grid_of(120);
  for (FunctionId id : kAllFunctionIds) {
    VerifyOptions one, many;
    one.threads = 1;
    many.threads = 8;
    const VerificationReport a = verify_claim(id, p, g, one);
    const VerificationReport b = verify_claim(id, p, g, many);
    CAPTURE(to_string(id));
    CHECK(a.passed == b.passed);
    CHECK(a.min_margin == b.min_margin);
    CHECK(a.min_margin_x == b.min_margin_x);
    CHECK(a.error_budget == b.error_budget);
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
      CHECK(a.points[i].values == b.points[i].values);
      CHECK(a.points[i].margin == b.points[i].margin);
    }
  }
}

TEST_CASE("per-point failures are wrapped with their cause") {
  VerifyOptions opt;
  opt.tol = Tolerance(1e-15, 1e-15, 1);
  opt.threads = 4;
  try {
    // The hyperbolic window needs no up-front constants, so the first
    // failure comes from a grid point.
    verify_claim(FunctionId::LEM24_GAP, PParam(3.0), grid_of(40), opt);
    FAIL("expected EvaluationFailed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EvaluationFailed);
    CHECK(e.cause() == ErrorKind::NonConvergence);
  }
}
