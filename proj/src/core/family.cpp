#include "family.hpp"

#include <cmath>
#include <sstream>

namespace ptrig {

PParam::PParam(double p) : p_(p) {
  if (!std::isfinite(p) || !(p > 1.0)) {
    std::ostringstream msg;
    msg << "p must be a finite real greater than 1, got " << p;
    throw Error(ErrorKind::InvalidArgument, msg.str());
  }
}

const Tolerance& core_tolerance() {
  static const Tolerance tol(1e-15, 1e-15, 100);
  return tol;
}

namespace detail {

Evaluation arcsin_lower(double s, double p, const Tolerance& tol) {
  if (s == 0.0) {
    return Evaluation(0.0);
  }
  auto f = [p](double, double t, double) { return std::pow(-std::expm1(p * std::log(t)), -1.0 / p); };
  return numerics::integrate(numerics::DistanceFunction(f), 0.0, s, tol);
}

Evaluation arcsin_upper(double s, double p, const Tolerance& tol) {
  if (s >= 1.0) {
    return Evaluation(0.0);
  }
  auto f = [p](double, double, double d) {
    return std::pow(-std::expm1(p * std::log1p(-d)), -1.0 / p);
  };
  return numerics::integrate(numerics::DistanceFunction(f), s, 1.0, tol);
}

Evaluation arccos_integral(double c, double p, const Tolerance& tol) {
  if (c == 0.0) {
    return Evaluation(0.0);
  }
  auto f = [p](double, double r, double) {
    return std::pow(r, p - 2.0) * std::pow(-std::expm1(p * std::log(r)), 1.0 / p - 1.0);
  };
  return numerics::integrate(numerics::DistanceFunction(f), 0.0, c, tol);
}

Evaluation arsinh_lower(double x, double p, const Tolerance& tol) {
  if (x == 0.0) {
    return Evaluation(0.0);
  }
  auto f = [p](double, double t, double) { return std::pow(1.0 + std::pow(t, p), -1.0 / p); };
  return numerics::integrate(numerics::DistanceFunction(f), 0.0, x, tol);
}

Evaluation arsinh_log_tail(double y, double p, const Tolerance& tol) {
  if (y == 0.0) {
    return Evaluation(0.0);
  }
  auto f = [p](double v) { return std::pow(1.0 + std::exp(-p * v), -1.0 / p); };
  return numerics::integrate(numerics::Function(f), 0.0, y, tol);
}

std::shared_ptr<const FamilyConstants> family(PParam p, const Tolerance& tol) {
  static Memo<ToleranceKey, FamilyConstants> memo;
  return memo.get(key_of(p, tol), [&] {
    const double q = p.value();
    FamilyConstants k;
    k.half_pi = arcsin_upper(0.0, q, tol);
    k.mid_argument = std::pow(2.0, -1.0 / q);
    k.mid_angle = arcsin_lower(k.mid_argument, q, tol);
    k.arsinh_one = arsinh_lower(1.0, q, tol);
    return k;
  });
}

namespace {

// Solves 1 = w + sum_k sign^k c_k u^k w^(kp+1) for w(u) by fixed-point
// iteration on truncated series; each sweep fixes one more coefficient.
PowerSeries revert_ratio(long double p, int sign, std::size_t terms) {
  std::vector<long double> c(terms, 0.0L);
  long double rising = 1.0L;
  for (std::size_t k = 1; k < terms; ++k) {
    const auto kk = static_cast<long double>(k);
    rising *= (1.0L / p + kk - 1.0L) / kk;
    const long double signed_rising = (sign < 0 && k % 2 == 1) ? -rising : rising;
    c[k] = signed_rising / (kk * p + 1.0L);
  }
  PowerSeries w = PowerSeries::one(terms);
  for (std::size_t sweep = 1; sweep < terms; ++sweep) {
    const PowerSeries log_w = log(w);
    PowerSeries next = PowerSeries::one(terms);
    for (std::size_t k = 1; k < terms; ++k) {
      const std::size_t keep = terms - k;
      const PowerSeries power =
          exp((static_cast<long double>(k) * p + 1.0L) * log_w.truncated(keep));
      for (std::size_t i = 0; i < keep; ++i) {
        next[i + k] -= c[k] * power[i];
      }
    }
    w = next;
  }
  return w;
}

}  // namespace

}  // namespace detail

std::shared_ptr<const SmallArgumentSeries> small_argument_series(PParam p) {
  static detail::Memo<double, SmallArgumentSeries> memo;
  return memo.get(p.value(), [&] {
    const long double q = p.value();
    SmallArgumentSeries s{detail::revert_ratio(q, +1, kSeriesTerms),
                          detail::revert_ratio(q, -1, kSeriesTerms), kSeriesMaxU};
    s.u_limit = std::min({kSeriesMaxU, s.sin_ratio.radius_for(1e-18),
                          s.sinh_ratio.radius_for(1e-18)});
    return s;
  });
}

Evaluation pi_p(PParam p, const Tolerance& tol) { return 2.0 * detail::family(p, tol)->half_pi; }

}  // namespace ptrig
