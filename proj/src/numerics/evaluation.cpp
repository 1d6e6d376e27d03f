#include <cmath>
#include <limits>
#include <sstream>

#include "ptrig/numerics.hpp"

namespace ptrig::numerics {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// One rounding unit of the result on top of the propagated bound.
Evaluation rounded(double value, double propagated) {
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::DomainError, "arithmetic result is not finite");
  }
  return Evaluation(value, propagated + kEps * std::abs(value));
}

// Relative error of a positive operand, measured against its lower end.
double relative_spread(const Evaluation& a, const char* what) {
  if (!(a.lower() > 0.0)) {
    std::ostringstream msg;
    msg << what << " needs a certainly positive argument, got " << a.value() << " +- "
        << a.abs_err();
    throw Error(ErrorKind::DomainError, msg.str());
  }
  return a.abs_err() / a.lower();
}

}  // namespace

Evaluation::Evaluation(double value, double abs_err) : value_(value), abs_err_(abs_err) {
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::DomainError, "evaluation value is not finite");
  }
  if (!std::isfinite(abs_err) || abs_err < 0.0) {
    throw Error(ErrorKind::DomainError, "evaluation error bound must be finite and >= 0");
  }
}

Evaluation Evaluation::with_added_error(double extra) const {
  return Evaluation(value_, abs_err_ + std::abs(extra));
}

Evaluation operator-(const Evaluation& a) { return Evaluation(-a.value(), a.abs_err()); }

Evaluation operator+(const Evaluation& a, const Evaluation& b) {
  return rounded(a.value() + b.value(), a.abs_err() + b.abs_err());
}

Evaluation operator-(const Evaluation& a, const Evaluation& b) {
  return rounded(a.value() - b.value(), a.abs_err() + b.abs_err());
}

Evaluation operator*(const Evaluation& a, const Evaluation& b) {
  const double err = std::abs(a.value()) * b.abs_err() + std::abs(b.value()) * a.abs_err() +
                     a.abs_err() * b.abs_err();
  return rounded(a.value() * b.value(), err);
}

Evaluation operator/(const Evaluation& a, const Evaluation& b) {
  const double mag = std::abs(b.value()) - b.abs_err();
  if (!(mag > 0.0)) {
    throw Error(ErrorKind::DomainError, "division by a value indistinguishable from zero");
  }
  const double q = a.value() / b.value();
  return rounded(q, (a.abs_err() + std::abs(q) * b.abs_err()) / mag);
}

Evaluation operator+(const Evaluation& a, double b) { return a + Evaluation(b); }
Evaluation operator+(double a, const Evaluation& b) { return Evaluation(a) + b; }
Evaluation operator-(const Evaluation& a, double b) { return a - Evaluation(b); }
Evaluation operator-(double a, const Evaluation& b) { return Evaluation(a) - b; }
Evaluation operator*(const Evaluation& a, double b) { return a * Evaluation(b); }
Evaluation operator*(double a, const Evaluation& b) { return Evaluation(a) * b; }
Evaluation operator/(const Evaluation& a, double b) { return a / Evaluation(b); }
Evaluation operator/(double a, const Evaluation& b) { return Evaluation(a) / b; }

Evaluation log(const Evaluation& a) {
  const double r = relative_spread(a, "log");
  return rounded(std::log(a.value()), r);
}

Evaluation log1p(const Evaluation& a) {
  if (!(1.0 + a.value() - a.abs_err() > 0.0)) {
    throw Error(ErrorKind::DomainError, "log1p needs an argument certainly above -1");
  }
  return rounded(std::log1p(a.value()), a.abs_err() / (1.0 + a.value() - a.abs_err()));
}

Evaluation exp(const Evaluation& a) {
  const double z = std::exp(a.value());
  return rounded(z, z * std::expm1(a.abs_err()));
}

Evaluation expm1(const Evaluation& a) {
  const double z = std::expm1(a.value());
  return rounded(z, std::exp(a.value()) * std::expm1(a.abs_err()));
}

Evaluation pow(const Evaluation& a, double q) {
  if (q == 0.0) {
    return Evaluation(1.0);
  }
  if (a.value() == 0.0 && a.abs_err() == 0.0 && q > 0.0) {
    return Evaluation(0.0);
  }
  if (q > 0.0 && !(a.lower() > 0.0)) {
    // Interval touches zero: bound by the value at the upper end.
    if (a.value() < 0.0 && a.upper() < 0.0) {
      throw Error(ErrorKind::DomainError, "pow of a negative base");
    }
    const double v = std::max(a.value(), 0.0);
    const double z = std::pow(v, q);
    return rounded(z, std::pow(a.upper(), q));
  }
  const double r = relative_spread(a, "pow");
  const double z = std::pow(a.value(), q);
  return rounded(z, z * std::expm1(std::abs(q) * std::log1p(r)));
}

Tolerance::Tolerance() : Tolerance(1e-10, 1e-10, 100) {}

Tolerance::Tolerance(double abs_tol, double rel_tol, int max_iter)
    : abs_tol_(abs_tol), rel_tol_(rel_tol), max_iter_(max_iter) {
  if (!(abs_tol > 0.0 && abs_tol < 1.0) || !(rel_tol > 0.0 && rel_tol < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "tolerances must lie in (0, 1)");
  }
  if (max_iter < 1) {
    throw Error(ErrorKind::InvalidArgument, "max_iter must be at least 1");
  }
}

double Tolerance::bound(double value) const noexcept {
  return std::max(abs_tol_, rel_tol_ * std::abs(value));
}

double central_diff(const Function& f, double x, double h) {
  if (!(h > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "central_diff step must be positive");
  }
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace ptrig::numerics
