#pragma once

// Numerical foundation: error-carrying values, tanh-sinh quadrature,
// safeguarded inversion of monotone functions and central differences.

#include <functional>
#include <optional>

#include "ptrig/error.hpp"

namespace ptrig::numerics {

/// A finite value together with a claimed bound on its absolute error.
///
/// The arithmetic below propagates bounds to first order and adds one
/// rounding unit per operation. Bounds are heuristic: they assume the
/// operand errors are independent and that no operation is evaluated at a
/// point where its derivative changes by orders of magnitude inside the
/// error interval.
class Evaluation {
 public:
  Evaluation() = default;
  /// Throws DomainError when value is not finite or abs_err is negative or
  /// not finite.
  Evaluation(double value, double abs_err = 0.0);

  double value() const noexcept { return value_; }
  double abs_err() const noexcept { return abs_err_; }

  /// Lower and upper ends of the enclosing interval.
  double lower() const noexcept { return value_ - abs_err_; }
  double upper() const noexcept { return value_ + abs_err_; }

  /// True when the value is positive by more than its error bound.
  bool certainly_positive() const noexcept { return value_ > abs_err_; }

  Evaluation with_added_error(double extra) const;

 private:
  double value_ = 0.0;
  double abs_err_ = 0.0;
};

Evaluation operator-(const Evaluation& a);
Evaluation operator+(const Evaluation& a, const Evaluation& b);
Evaluation operator-(const Evaluation& a, const Evaluation& b);
Evaluation operator*(const Evaluation& a, const Evaluation& b);
Evaluation operator/(const Evaluation& a, const Evaluation& b);

// Mixed forms treat the double operand as exact.
Evaluation operator+(const Evaluation& a, double b);
Evaluation operator+(double a, const Evaluation& b);
Evaluation operator-(const Evaluation& a, double b);
Evaluation operator-(double a, const Evaluation& b);
Evaluation operator*(const Evaluation& a, double b);
Evaluation operator*(double a, const Evaluation& b);
Evaluation operator/(const Evaluation& a, double b);
Evaluation operator/(double a, const Evaluation& b);

Evaluation log(const Evaluation& a);
Evaluation log1p(const Evaluation& a);
Evaluation exp(const Evaluation& a);
Evaluation expm1(const Evaluation& a);
/// a^q for a >= 0; a must be certainly positive when q <= 0.
Evaluation pow(const Evaluation& a, double q);

class Tolerance {
 public:
  /// 1e-10 absolute and relative, 100 iterations.
  Tolerance();
  /// Throws InvalidArgument unless abs_tol, rel_tol lie in (0, 1) and
  /// max_iter >= 1.
  Tolerance(double abs_tol, double rel_tol, int max_iter = 100);

  double abs_tol() const noexcept { return abs_tol_; }
  double rel_tol() const noexcept { return rel_tol_; }
  int max_iter() const noexcept { return max_iter_; }

  /// max(abs_tol, rel_tol * |value|)
  double bound(double value) const noexcept;

  friend bool operator==(const Tolerance&, const Tolerance&) = default;

 private:
  double abs_tol_;
  double rel_tol_;
  int max_iter_;
};

using Function = std::function<double(double)>;

/// Integrand that also receives the exact distances of the node to the
/// left and right ends of the interval: f(x, x - a, b - x). Singular
/// integrands should compute their singular factor from the distance so
/// nodes closer to an endpoint than its rounding unit stay resolvable.
using DistanceFunction = std::function<double(double x, double from_a, double to_b)>;

inline constexpr int kMaxQuadratureLevel = 12;

/// Tanh-sinh quadrature of f over [a, b]. Levels halve the node spacing
/// until two successive levels agree; abs_err is twice their difference.
///
/// Nodes that round onto an endpoint cannot be evaluated; the mass hidden
/// there is estimated from a power-law fit of the outermost nodes and added
/// to abs_err, so an endpoint singularity in a plain integrand usually
/// limits the attainable tolerance (use the DistanceFunction overload).
///
/// A requested tolerance below the rounding floor of the weighted sum
/// (a few ulps of the sum of |terms|) is raised to that floor.
///
/// Throws InvalidInterval if !(a < b), NonConvergence when the error
/// estimate stays above tol.bound(value) through kMaxQuadratureLevel, and
/// EvaluationFailed when f is not finite at an interior node.
Evaluation integrate(const Function& f, double a, double b, const Tolerance& tol = {});
Evaluation integrate(const DistanceFunction& f, double a, double b, const Tolerance& tol = {});

/// Finds x in [lo, hi] with |f(x) - target| <= tol.abs_tol() * (1 + |target|)
/// for f strictly monotone on [lo, hi]. Newton steps from `deriv` are only
/// taken while they stay inside the current bracket and keep shrinking the
/// residual (by 0.5 over two steps); otherwise the step bisects.
///
/// abs_err estimates |x - root| from the final residual and derivative, or
/// from the bracket width when no derivative is available.
///
/// Throws NotBracketed when target lies outside [f(lo), f(hi)] and
/// NonConvergence after tol.max_iter() evaluations.
Evaluation invert_monotone(const Function& f, double target, double lo, double hi,
                           const Function& deriv = nullptr, const Tolerance& tol = {},
                           std::optional<double> guess = std::nullopt);

/// (f(x + h) - f(x - h)) / (2h)
double central_diff(const Function& f, double x, double h);

}  // namespace ptrig::numerics
