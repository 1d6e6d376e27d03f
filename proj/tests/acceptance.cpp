// Acceptance criteria, one per invocation: `acceptance <criterion>`.
// Prints one line per sub-check and exits 0 only when all of them hold.

#include <boost/math/special_functions/beta.hpp>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "ptrig/cli.hpp"

using namespace ptrig;

namespace {

constexpr double kPi = std::numbers::pi;
const std::vector<double> kPs = {2.0, 2.5, 3.0, 5.0, 10.0};

class Checker {
 public:
  void check(bool ok, const std::string& what) {
    std::printf("  %s %s\n", ok ? "ok  " : "FAIL", what.c_str());
    all_ &= ok;
  }
  bool passed() const { return all_; }

 private:
  bool all_ = true;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

std::vector<double> interior(double a, double b, int n) {
  std::vector<double> xs;
  for (int i = 0; i < n; ++i) {
    xs.push_back(a + (b - a) * (i + 0.5) / n);
  }
  return xs;
}

double half_pi_p(PParam p) { return pi_p(p).value() / 2.0; }

GridSpec cosine_grid(int n) {
  GridSpec g;
  g.n = n;
  g.spacing = Spacing::Cosine;
  return g;
}

void classical_reduction(Checker& c) {
  const PParam p(2.0);
  using Fn = Evaluation (*)(double, PParam, const Tolerance&);
  struct Case {
    const char* name;
    Fn f;
    double (*ref)(double);
    double hi;
  };
  const std::vector<Case> cases = {
      {"sin", sin_p, [](double x) { return std::sin(x); }, kPi / 2.0},
      {"cos", cos_p, [](double x) { return std::cos(x); }, kPi / 2.0},
      {"tan", tan_p, [](double x) { return std::tan(x); }, kPi / 2.0},
      {"sinh", sinh_p, [](double x) { return std::sinh(x); }, 3.0},
      {"cosh", cosh_p, [](double x) { return std::cosh(x); }, 3.0},
      {"tanh", tanh_p, [](double x) { return std::tanh(x); }, 3.0},
  };
  for (const Case& k : cases) {
    double worst = 0.0;
    for (double x : interior(0.0, k.hi, 100)) {
      const double ref = k.ref(x);
      worst = std::max(worst, std::abs(k.f(x, p, core_tolerance()).value() - ref));
    }
    c.check(worst <= 1e-10,
            std::string(k.name) + fmt("_2 vs std, 100 points: worst error %.3g", worst));
  }
}

void constant_reproduction(Checker& c) {
  const SharpConstants k = sharp_constants(PParam(2.0));
  c.check(k.alpha == 1.0 / 3.0, fmt("alpha(2) = %.17g", k.alpha));
  c.check(std::abs(k.beta.value() - 0.4909) <= 5e-5,
          fmt("beta(2) = %.16g, within 5e-5 of 0.4909", k.beta.value()));
  const double pi2 = pi_p(PParam(2.0)).value();
  c.check(std::abs(pi2 - kPi) <= 1e-12, fmt("pi_2 - pi = %.3g", pi2 - kPi));
}

void pi_p_closed_form(Checker& c) {
  for (double pv : kPs) {
    const double got = pi_p(PParam(pv)).value();
    const double closed = 2.0 * kPi / (pv * std::sin(kPi / pv));
    const double beta = 2.0 / pv * boost::math::beta(1.0 / pv, 1.0 - 1.0 / pv);
    c.check(std::abs(got - closed) <= 1e-10 && std::abs(closed - beta) <= 1e-12,
            fmt("p=%g: |pi_p - closed| = %.3g, |closed - Beta form| = %.3g", pv, got - closed,
                closed - beta));
  }
}

void identity_suites(Checker& c) {
  for (double pv : kPs) {
    const PParam p(pv);
    double circ = 0.0, hyp = 0.0, hyp_scaled = 0.0;
    for (double x : interior(0.0, half_pi_p(p), 50)) {
      circ = std::max(circ, std::abs(std::pow(sin_p(x, p).value(), pv) +
                                     std::pow(cos_p(x, p).value(), pv) - 1.0));
    }
    for (double x : interior(0.0, 3.0, 50)) {
      const double cp = std::pow(cosh_p(x, p).value(), pv);
      const double r = std::abs(cp - std::pow(sinh_p(x, p).value(), pv) - 1.0);
      hyp = std::max(hyp, r);
      hyp_scaled = std::max(hyp_scaled, r / cp);
    }
    c.check(circ <= 1e-9 && hyp <= 1e-9,
            fmt("p=%g: worst circular %.3g, hyperbolic %.3g", pv, circ, hyp));
    // cosh_p^p reaches ~4e8 at p = 10, x = 3, where one ulp of cosh_p
    // already moves it by ~5e-7; the scaled residual shows the accuracy.
    std::printf("       hyperbolic residual / cosh_p^p: %.3g\n", hyp_scaled);
  }
}

void round_trip_inversion(Checker& c) {
  for (double pv : kPs) {
    const PParam p(pv);
    double circ = 0.0, hyp = 0.0;
    for (double x : interior(0.0, half_pi_p(p), 50)) {
      circ = std::max(circ, std::abs(arcsin_p(sin_p(x, p).value(), p).value() - x));
    }
    for (double x : interior(0.0, 3.0, 50)) {
      hyp = std::max(hyp, std::abs(arsinh_p(sinh_p(x, p).value(), p).value() - x));
    }
    c.check(circ <= 1e-9 && hyp <= 1e-9,
            fmt("p=%g: worst arcsin round trip %.3g, arsinh %.3g", pv, circ, hyp));
  }
}

void derivative_formulas(Checker& c) {
  using Fn = Evaluation (*)(double, PParam, const Tolerance&);
  struct Pair {
    const char* name;
    Fn f, df;
    bool circular;
  };
  const std::vector<Pair> pairs = {{"sin", sin_p, d_sin_p, true},
                                   {"cos", cos_p, d_cos_p, true},
                                   {"sinh", sinh_p, d_sinh_p, false},
                                   {"cosh", cosh_p, d_cosh_p, false},
                                   {"tanh", tanh_p, d_tanh_p, false}};
  for (double pv : kPs) {
    const PParam p(pv);
    for (const Pair& k : pairs) {
      const double hi = k.circular ? half_pi_p(p) : 3.0;
      double worst = 0.0;
      for (double x : interior(0.05 * hi, 0.95 * hi, 20)) {
        const double fd = numerics::central_diff(
            [&](double t) { return k.f(t, p, core_tolerance()).value(); }, x, 1e-5);
        worst = std::max(worst, std::abs(k.df(x, p, core_tolerance()).value() - fd));
      }
      c.check(worst <= 1e-6, fmt("p=%g: ", pv) + k.name + fmt(" derivative, worst %.3g", worst));
    }
  }
}

// Prints the smallest margin next to the budget at that same point.
void report_line(Checker& c, const VerificationReport& r, const std::string& what) {
  double budget = 0.0;
  for (const ReportPoint& pt : r.points) {
    if (pt.x == r.min_margin_x && pt.margin == r.min_margin) {
      budget = pt.budget;
    }
  }
  c.check(r.passed, what + fmt(" p=%g: min margin %.3g against budget %.3g there", r.p.value(),
                               r.min_margin, budget));
}

void thm1_claims(Checker& c) {
  for (double pv : kPs) {
    const PParam p(pv);
    const GridSpec g = cosine_grid(200);
    report_line(c, verify_chain(FunctionId::THM1_CHAIN, p, g), "THM1_CHAIN");
    const VerificationReport mono = verify_monotone(FunctionId::THM1_F, p, g,
                                                    Direction::Increasing);
    report_line(c, mono, "THM1_F increasing");
    const VerificationReport range = verify_range(FunctionId::THM1_F, p, g);
    report_line(c, range, "1 < THM1_F < p");
    std::printf("       observed supremum %.6f\n", mono.observed_supremum.value_or(0.0));
  }
}

void thm2_claims(Checker& c) {
  for (double pv : kPs) {
    const PParam p(pv);
    const GridSpec g = cosine_grid(200);
    const VerificationReport chain = verify_chain(FunctionId::THM2_CHAIN, p, g);
    report_line(c, chain, "THM2_CHAIN");
    c.check(chain.routes_agree.value_or(false), fmt("p=%g: chain and g routes agree", pv));
    report_line(c, verify_monotone(FunctionId::THM2_G, p, g, Direction::Increasing),
                "THM2_G increasing");
    const VerificationReport range = verify_range(FunctionId::THM2_G, p, g);
    report_line(c, range, "alpha < THM2_G < beta");
    const SharpConstants k = sharp_constants(p);
    const double left = range.points.front().values.front();
    const double right = range.points.back().values.front();
    c.check(std::abs(left - k.alpha) <= 1e-2 && std::abs(right - k.beta.value()) <= 1e-2,
            fmt("p=%g: g at the outermost grid points %.6f, %.6f", pv, left, right) +
                fmt(" vs alpha %.6f, beta %.6f", k.alpha, k.beta.value()));
  }
}

void lem22_claims(Checker& c) {
  for (double pv : kPs) {
    const PParam p(pv);
    const GridSpec g = cosine_grid(200);
    report_line(c, verify_monotone(FunctionId::LEM22_F, p, g, Direction::Decreasing),
                "LEM22_F decreasing");
    report_line(c, verify_range(FunctionId::LEM22_F, p, g), "p log(pi_p/2) < LEM22_F < 1");
    report_line(c, verify_chain(FunctionId::LEM22_CHAIN, p, g), "LEM22_CHAIN");
    const double f0 = lem22_f(1e-3, p).value();
    c.check(std::abs(f0 - 1.0) <= 5e-3, fmt("p=%g: f(1e-3) = %.8f", pv, f0));
  }
}

void lem23_claims(Checker& c) {
  for (double pv : kPs) {
    const PParam p(pv);
    const GridSpec g = cosine_grid(200);
    report_line(c, verify_monotone(FunctionId::LEM23_G, p, g, Direction::Increasing),
                "LEM23_G increasing on (0, 3)");
    report_line(c, verify_range(FunctionId::LEM23_G, p, g), "1 < LEM23_G < p");
    report_line(c, verify_chain(FunctionId::LEM23_CHAIN, p, g), "LEM23_CHAIN");
    const double g0 = lem23_g(1e-3, p).value();
    c.check(std::abs(g0 - 1.0) <= 5e-3, fmt("p=%g: g(1e-3) = %.8f", pv, g0));
  }
  // g approaches p only slowly; at x = 20 it is still about 0.28 short.
  const double g20 = lem23_g(20.0, PParam(2.0)).value();
  c.check(std::abs(g20 - 2.0) <= 0.2, fmt("p=2: g(20) = %.6f, required within 0.2 of 2", g20));
}

void lem24_claims(Checker& c) {
  for (double pv : {1.5, 2.0, 3.0, 10.0}) {
    report_line(c, verify_claim(FunctionId::LEM24_GAP, PParam(pv), cosine_grid(200)),
                "LEM24_GAP > 0 on (0, 3)");
  }
}

void corollary_chain(Checker& c) {
  for (double pv : {2.0, 3.0, 5.0, 10.0}) {
    report_line(c, verify_chain(FunctionId::COROLLARY_CHAIN, PParam(pv), cosine_grid(200)),
                "COROLLARY_CHAIN");
  }
}

void determinism(Checker& c) {
  const std::vector<std::string> args = {"verify", "--claim", "all", "--p", "3", "--format",
                                         "json"};
  std::ostringstream a, b, err;
  const int ca = cli::run(args, a, err);
  const int cb = cli::run(args, b, err);
  c.check(ca == 0 && cb == 0, fmt("exit codes %g, %g", ca, cb));
  c.check(!a.str().empty() && a.str() == b.str(),
          fmt("two runs byte-identical (%g bytes)", static_cast<double>(a.str().size())));
}

}  // namespace

int main(int argc, char** argv) {
  const std::map<std::string, std::function<void(Checker&)>> criteria = {
      {"classical_reduction", classical_reduction},
      {"constant_reproduction", constant_reproduction},
      {"pi_p_closed_form", pi_p_closed_form},
      {"identity_suites", identity_suites},
      {"round_trip_inversion", round_trip_inversion},
      {"derivative_formulas", derivative_formulas},
      {"thm1_claims", thm1_claims},
      {"thm2_claims", thm2_claims},
      {"lem22_claims", lem22_claims},
      {"lem23_claims", lem23_claims},
      {"lem24_claims", lem24_claims},
      {"corollary_chain", corollary_chain},
      {"determinism", determinism},
  };
  std::vector<std::string> names;
  if (argc > 1) {
    names.assign(argv + 1, argv + argc);
  } else {
    for (const auto& [name, fn] : criteria) {
      names.push_back(name);
    }
  }
  bool all = true;
  for (const std::string& name : names) {
    const auto it = criteria.find(name);
    if (it == criteria.end()) {
      std::fprintf(stderr, "unknown criterion '%s'\n", name.c_str());
      return 2;
    }
    std::printf("%s\n", name.c_str());
    Checker c;
    try {
      it->second(c);
    } catch (const std::exception& e) {
      c.check(false, std::string("threw: ") + e.what());
    }
    std::printf("%s %s\n", c.passed() ? "PASS" : "FAIL", name.c_str());
    all &= c.passed();
  }
  return all ? 0 : 1;
}
