#include <cmath>
#include <limits>
#include <sstream>

#include "ptrig/numerics.hpp"

namespace ptrig::numerics {

namespace {

double checked(double fx, double x) {
  if (!std::isfinite(fx)) {
    std::ostringstream msg;
    msg << "function is not finite at x = " << x;
    throw Error(ErrorKind::EvaluationFailed, msg.str());
  }
  return fx;
}

}  // namespace

Evaluation invert_monotone(const Function& f, double target, double lo, double hi,
                           const Function& deriv, const Tolerance& tol,
                           std::optional<double> guess) {
  if (!(lo < hi)) {
    throw Error(ErrorKind::InvalidInterval, "inversion bracket must satisfy lo < hi");
  }
  const double res_tol = tol.abs_tol() * (1.0 + std::abs(target));
  double r_lo = checked(f(lo), lo) - target;
  double r_hi = checked(f(hi), hi) - target;

  // |x - root| from a residual, preferring the analytic slope.
  auto error_of = [&](double x, double r) {
    if (r == 0.0) {
      return 0.0;
    }
    double slope = std::abs(r_hi - r_lo) / (hi - lo);
    if (deriv) {
      const double d = std::abs(deriv(x));
      if (std::isfinite(d) && d > 0.0) {
        slope = d;
      } else if (std::isinf(d)) {
        return 0.0;
      }
    }
    if (!(slope > 0.0)) {
      return hi - lo;
    }
    return std::min(std::abs(r) / slope, hi - lo);
  };

  if (std::abs(r_lo) <= res_tol || std::abs(r_hi) <= res_tol) {
    const bool at_lo = std::abs(r_lo) <= std::abs(r_hi);
    const double x = at_lo ? lo : hi;
    return Evaluation(x, error_of(x, at_lo ? r_lo : r_hi));
  }
  if ((r_lo < 0.0) == (r_hi < 0.0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "target " << target << " outside [" << (r_lo + target) << ", " << (r_hi + target)
        << "]";
    throw Error(ErrorKind::NotBracketed, msg.str());
  }

  double x = lo + 0.5 * (hi - lo);
  if (guess && *guess > lo && *guess < hi) {
    x = *guess;
  }
  double r_prev2 = std::numeric_limits<double>::infinity();
  double r_prev1 = std::numeric_limits<double>::infinity();
  double best_x = x;
  double best_r = std::numeric_limits<double>::infinity();

  for (int iter = 0; iter < tol.max_iter(); ++iter) {
    const double r = checked(f(x), x) - target;
    if (std::abs(r) < std::abs(best_r)) {
      best_x = x;
      best_r = r;
    }
    if (std::abs(r) <= res_tol) {
      return Evaluation(x, error_of(x, r));
    }
    if ((r < 0.0) == (r_lo < 0.0)) {
      lo = x;
      r_lo = r;
    } else {
      hi = x;
      r_hi = r;
    }

    const bool stalled = std::abs(r) > 0.5 * r_prev2;
    r_prev2 = r_prev1;
    r_prev1 = std::abs(r);

    double next = std::numeric_limits<double>::quiet_NaN();
    if (deriv && !stalled) {
      const double d = deriv(x);
      if (std::isfinite(d) && d != 0.0) {
        next = x - r / d;
      }
    }
    if (!(next > lo && next < hi)) {
      next = lo + 0.5 * (hi - lo);
    }
    if (!(next > lo && next < hi)) {
      // Bracket has collapsed to adjacent doubles.
      return Evaluation(best_x, hi - lo);
    }
    x = next;
  }
  std::ostringstream msg;
  msg << "no convergence after " << tol.max_iter() << " iterations; residual " << best_r;
  throw Error(ErrorKind::NonConvergence, msg.str());
}

}  // namespace ptrig::numerics
