#include <cmath>
#include <limits>
#include <sstream>

#include "family.hpp"

namespace ptrig {

namespace {

using numerics::invert_monotone;

[[noreturn]] void outside(const char* fn, double x, double hi) {
  std::ostringstream msg;
  msg.precision(17);
  msg << fn << " argument " << x << " outside [0, " << hi << "]";
  throw Error(ErrorKind::DomainError, msg.str());
}

// Largest x accepted as the right endpoint pi_p/2.
double right_end_slack(const Evaluation& half_pi) {
  return half_pi.abs_err() + 4.0 * std::numeric_limits<double>::epsilon() * half_pi.value();
}

CircularPair from_sin(const Evaluation& s, double p) {
  const Evaluation c = pow(1.0 - pow(s, p), 1.0 / p);
  return {s, c};
}

CircularPair from_cos(const Evaluation& c, double p) {
  const Evaluation s = pow(1.0 - pow(c, p), 1.0 / p);
  return {s, c};
}

// Inverts arcsin_p on [0, 2^(-1/p)].
Evaluation invert_lower(double x, double p, const detail::FamilyConstants& fam,
                        const Tolerance& tol) {
  double quad_err = 0.0;
  auto f = [&](double s) {
    const Evaluation v = detail::arcsin_lower(s, p, tol);
    quad_err = v.abs_err();
    return v.value();
  };
  auto df = [p](double s) { return std::pow(-std::expm1(p * std::log(s)), -1.0 / p); };
  const double u = std::pow(x, p);
  const double guess = std::min(x * (1.0 - u / (p * (p + 1.0))), fam.mid_argument);
  const Evaluation s =
      invert_monotone(f, x, 0.0, fam.mid_argument, df, tol, guess);
  // Quadrature error maps through d(sin_p)/dx = cos_p <= 1.
  const double cos_bound = std::pow(-std::expm1(p * std::log(s.value())), 1.0 / p);
  return s.with_added_error(quad_err * cos_bound);
}

// Inverts arccos_integral(c) = y on c^p <= 0.6, scaled so the residual test
// is relative to y.
Evaluation invert_upper(const Evaluation& y, double p, const Tolerance& tol) {
  if (y.value() == 0.0) {
    return Evaluation(0.0, std::pow((p - 1.0) * y.abs_err(), 1.0 / (p - 1.0)));
  }
  const double yv = y.value();
  double quad_err = 0.0;
  auto f = [&](double c) {
    const Evaluation v = detail::arccos_integral(c, p, tol);
    quad_err = v.abs_err();
    return v.value() / yv;
  };
  auto slope = [p](double c) {
    return std::pow(c, p - 2.0) * std::pow(-std::expm1(p * std::log(c)), 1.0 / p - 1.0);
  };
  auto df = [&](double c) { return slope(c) / yv; };
  const double hi = std::pow(0.6, 1.0 / p);
  const double guess = std::min(std::pow((p - 1.0) * yv, 1.0 / (p - 1.0)), 0.5 * hi);
  const Evaluation c = invert_monotone(f, 1.0, 0.0, hi, df, tol, guess);
  const double g = slope(c.value());
  double extra = 0.0;
  if (std::isfinite(g) && g > 0.0) {
    extra = (quad_err + y.abs_err()) / g;
  } else {
    extra = std::pow((p - 1.0) * (quad_err + y.abs_err()), 1.0 / (p - 1.0));
  }
  const double cv = std::max(c.value(), 0.0);
  return Evaluation(cv, c.abs_err() + extra);
}

}  // namespace

CircularPair sin_cos_p(double x, PParam pp, const Tolerance& tol) {
  const double p = pp.value();
  const auto fam = detail::family(pp, tol);
  const Evaluation& half_pi = fam->half_pi;
  if (!(x >= 0.0)) {
    outside("sin_p", x, half_pi.value());
  }
  if (x == 0.0) {
    return {Evaluation(0.0), Evaluation(1.0)};
  }
  if (x >= half_pi.value()) {
    if (x - half_pi.value() > right_end_slack(half_pi)) {
      outside("sin_p", x, half_pi.value());
    }
    // At the endpoint within the accuracy of pi_p/2.
    const Evaluation y(0.0, x - half_pi.value() + half_pi.abs_err());
    return from_cos(invert_upper(y, p, tol), p);
  }

  const double u = std::pow(x, p);
  const auto series = small_argument_series(pp);
  if (u <= series->u_limit) {
    return from_sin(Evaluation(x) * series->sin_ratio.evaluate(u), p);
  }
  if (x <= fam->mid_angle.value()) {
    return from_sin(invert_lower(x, p, *fam, tol), p);
  }
  return from_cos(invert_upper(half_pi - x, p, tol), p);
}

Evaluation arcsin_p(double x, PParam pp, const Tolerance& tol) {
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "arcsin_p argument " << x << " outside [0, 1]";
    throw Error(ErrorKind::DomainError, msg.str());
  }
  const double p = pp.value();
  const auto fam = detail::family(pp, tol);
  if (x == 1.0) {
    return fam->half_pi;
  }
  if (x <= fam->mid_argument) {
    return detail::arcsin_lower(x, p, tol);
  }
  return fam->half_pi - detail::arcsin_upper(x, p, tol);
}

Evaluation sin_p(double x, PParam p, const Tolerance& tol) { return sin_cos_p(x, p, tol).sin; }

Evaluation cos_p(double x, PParam p, const Tolerance& tol) { return sin_cos_p(x, p, tol).cos; }

Evaluation tan_p(double x, PParam pp, const Tolerance& tol) {
  const Evaluation half_pi = detail::family(pp, tol)->half_pi;
  if (std::abs(x - half_pi.value()) <= 1e-12) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "tan_p has a pole at pi_p/2 = " << half_pi.value() << ", got x = " << x;
    throw Error(ErrorKind::PoleError, msg.str());
  }
  const CircularPair sc = sin_cos_p(x, pp, tol);
  return sc.sin / sc.cos;
}

Evaluation d_sin_p(double x, PParam p, const Tolerance& tol) { return cos_p(x, p, tol); }

Evaluation d_cos_p(double x, PParam pp, const Tolerance& tol) {
  const double p = pp.value();
  const CircularPair sc = sin_cos_p(x, pp, tol);
  if (p > 2.0 && !sc.cos.certainly_positive()) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "d_cos_p diverges at pi_p/2 for p > 2 (x = " << x << ", p = " << p << ")";
    throw Error(ErrorKind::DomainError, msg.str());
  }
  return -(pow(sc.cos, 2.0 - p) * pow(sc.sin, p - 1.0));
}

}  // namespace ptrig
