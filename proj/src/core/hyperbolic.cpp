#include <cmath>
#include <sstream>

#include "family.hpp"

namespace ptrig {

namespace {

// sinh_p grows like e^x; beyond this its p-th power is meaningless in
// double precision.
constexpr double kMaxHyperbolicArgument = 700.0;

void check_argument(const char* fn, double x) {
  if (!(x >= 0.0) || !(x <= kMaxHyperbolicArgument)) {
    std::ostringstream msg;
    msg << fn << " argument " << x << " outside [0, " << kMaxHyperbolicArgument << "]";
    throw Error(ErrorKind::DomainError, msg.str());
  }
}

// (1 + S^p)^(1/p) without forming S^p for large S.
Evaluation cosh_from_sinh(const Evaluation& s, double p) {
  if (s.value() > 1.0) {
    return s * pow(1.0 + pow(s, -p), 1.0 / p);
  }
  return pow(1.0 + pow(s, p), 1.0 / p);
}

// Solves arsinh_p(e^y) = x for y. The map y -> arsinh_p(e^y) has slope
// (1 + e^(-py))^(-1/p) in (2^(-1/p), 1), and the root lies between
// log x (arsinh_p(S) <= S) and log(e^x - 1) (arsinh_p(S) >= log(1 + S)).
Evaluation invert_sinh(double x, double p, const detail::FamilyConstants& fam,
                       const Tolerance& tol) {
  double quad_err = 0.0;
  auto arsinh_exp = [&](double y) -> Evaluation {
    if (y <= 0.0) {
      return detail::arsinh_lower(std::exp(y), p, tol);
    }
    return fam.arsinh_one + detail::arsinh_log_tail(y, p, tol);
  };
  auto f = [&](double y) {
    const Evaluation v = arsinh_exp(y);
    quad_err = v.abs_err();
    return v.value() / x;
  };
  auto slope = [p](double y) { return std::pow(1.0 + std::exp(-p * y), -1.0 / p); };
  auto df = [&](double y) { return slope(y) / x; };
  const double lo = std::log(x);
  const double hi = x + std::log(-std::expm1(-x));
  const double guess = lo + 0.5 * (hi - lo);
  const Evaluation y = numerics::invert_monotone(f, 1.0, lo, hi, df, tol, guess);
  const double y_err = y.abs_err() + quad_err / slope(y.value());
  const double s = std::exp(y.value());
  return Evaluation(s, s * std::expm1(y_err));
}

}  // namespace

HyperbolicPair sinh_cosh_p(double x, PParam pp, const Tolerance& tol) {
  check_argument("sinh_p", x);
  if (x == 0.0) {
    return {Evaluation(0.0), Evaluation(1.0)};
  }
  const double p = pp.value();
  const double u = std::pow(x, p);
  const auto series = small_argument_series(pp);
  Evaluation s;
  if (u <= series->u_limit) {
    s = Evaluation(x) * series->sinh_ratio.evaluate(u);
  } else {
    s = invert_sinh(x, p, *detail::family(pp, tol), tol);
  }
  return {s, cosh_from_sinh(s, p)};
}

Evaluation arsinh_p(double x, PParam pp, const Tolerance& tol) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    std::ostringstream msg;
    msg << "arsinh_p argument " << x << " must be finite and >= 0";
    throw Error(ErrorKind::DomainError, msg.str());
  }
  const double p = pp.value();
  if (x <= 1.0) {
    return detail::arsinh_lower(x, p, tol);
  }
  return detail::family(pp, tol)->arsinh_one + detail::arsinh_log_tail(std::log(x), p, tol);
}

Evaluation sinh_p(double x, PParam p, const Tolerance& tol) { return sinh_cosh_p(x, p, tol).sinh; }

Evaluation cosh_p(double x, PParam p, const Tolerance& tol) { return sinh_cosh_p(x, p, tol).cosh; }

Evaluation tanh_p(double x, PParam pp, const Tolerance& tol) {
  const double p = pp.value();
  const Evaluation s = sinh_p(x, pp, tol);
  if (s.value() > 1.0) {
    return pow(1.0 + pow(s, -p), -1.0 / p);
  }
  return s / pow(1.0 + pow(s, p), 1.0 / p);
}

Evaluation d_sinh_p(double x, PParam p, const Tolerance& tol) { return cosh_p(x, p, tol); }

Evaluation d_cosh_p(double x, PParam pp, const Tolerance& tol) {
  const double p = pp.value();
  const HyperbolicPair sc = sinh_cosh_p(x, pp, tol);
  return pow(sc.cosh, 2.0 - p) * pow(sc.sinh, p - 1.0);
}

Evaluation d_tanh_p(double x, PParam pp, const Tolerance& tol) {
  return 1.0 - pow(tanh_p(x, pp, tol), pp.value());
}

}  // namespace ptrig
