#pragma once

// Generalized trigonometric and hyperbolic functions of one parameter p > 1.
//
//   arcsin_p(x) = int_0^x (1 - t^p)^(-1/p) dt,   arcsin_p(1) = pi_p / 2
//   arsinh_p(x) = int_0^x (1 + t^p)^(-1/p) dt
//
// sin_p and sinh_p are their inverses, cos_p = (1 - sin_p^p)^(1/p) and
// cosh_p = (1 + sinh_p^p)^(1/p). The circular functions live on
// [0, pi_p/2], the hyperbolic ones on [0, inf). Everything returns a value
// with an absolute-error bound.

#include <compare>
#include <memory>

#include "ptrig/numerics.hpp"
#include "ptrig/power_series.hpp"

namespace ptrig {

using numerics::Evaluation;
using numerics::Tolerance;

/// The family index p; construction rejects p <= 1 and non-finite p.
class PParam {
 public:
  explicit PParam(double p);
  double value() const noexcept { return p_; }
  friend auto operator<=>(const PParam&, const PParam&) = default;

 private:
  double p_;
};

struct TrigValue {
  double x;
  PParam p;
  Evaluation value;
};

/// Tolerance used by every evaluator unless the caller passes one.
const Tolerance& core_tolerance();

Evaluation pi_p(PParam p, const Tolerance& tol = core_tolerance());

Evaluation arcsin_p(double x, PParam p, const Tolerance& tol = core_tolerance());
Evaluation sin_p(double x, PParam p, const Tolerance& tol = core_tolerance());
Evaluation cos_p(double x, PParam p, const Tolerance& tol = core_tolerance());
/// PoleError within 1e-12 of pi_p / 2.
Evaluation tan_p(double x, PParam p, const Tolerance& tol = core_tolerance());

Evaluation arsinh_p(double x, PParam p, const Tolerance& tol = core_tolerance());
Evaluation sinh_p(double x, PParam p, const Tolerance& tol = core_tolerance());
Evaluation cosh_p(double x, PParam p, const Tolerance& tol = core_tolerance());
Evaluation tanh_p(double x, PParam p, const Tolerance& tol = core_tolerance());

// Closed-form derivatives.
Evaluation d_sin_p(double x, PParam p, const Tolerance& tol = core_tolerance());
/// -cos_p^(2-p) sin_p^(p-1); DomainError at pi_p/2 when p > 2.
Evaluation d_cos_p(double x, PParam p, const Tolerance& tol = core_tolerance());
Evaluation d_sinh_p(double x, PParam p, const Tolerance& tol = core_tolerance());
/// cosh_p^(2-p) sinh_p^(p-1)
Evaluation d_cosh_p(double x, PParam p, const Tolerance& tol = core_tolerance());
/// 1 - tanh_p^p
Evaluation d_tanh_p(double x, PParam p, const Tolerance& tol = core_tolerance());

/// sin_p and cos_p from one inversion.
struct CircularPair {
  Evaluation sin;
  Evaluation cos;
};
CircularPair sin_cos_p(double x, PParam p, const Tolerance& tol = core_tolerance());

/// sinh_p and cosh_p from one inversion.
struct HyperbolicPair {
  Evaluation sinh;
  Evaluation cosh;
};
HyperbolicPair sinh_cosh_p(double x, PParam p, const Tolerance& tol = core_tolerance());

/// Number of terms kept in the small-argument expansions.
inline constexpr std::size_t kSeriesTerms = 40;
/// Upper limit on u = x^p for using the expansions.
inline constexpr double kSeriesMaxU = 0.05;

/// sin_p(x)/x and sinh_p(x)/x as power series in u = x^p, obtained by
/// reverting the binomial expansions of the defining integrals:
///   arcsin_p(s) = s + sum_k c_k s^(kp+1),  c_k = (1/p)_k / (k! (kp+1))
///   arsinh_p(s) = s + sum_k (-1)^k c_k s^(kp+1)
/// The series are used where u <= u_limit.
struct SmallArgumentSeries {
  PowerSeries sin_ratio;
  PowerSeries sinh_ratio;
  double u_limit;
};
std::shared_ptr<const SmallArgumentSeries> small_argument_series(PParam p);

}  // namespace ptrig
