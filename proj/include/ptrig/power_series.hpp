#pragma once

// Truncated power series in one variable with extended-precision
// coefficients. Used for the small-argument expansions, which are series in
// u = x^p.

#include <cstddef>
#include <vector>

#include "ptrig/numerics.hpp"

namespace ptrig {

class PowerSeries {
 public:
  explicit PowerSeries(std::size_t terms);
  PowerSeries(std::vector<long double> coefficients);

  static PowerSeries constant(long double c, std::size_t terms);
  /// 1 + 0u + ...
  static PowerSeries one(std::size_t terms) { return constant(1.0L, terms); }

  std::size_t size() const noexcept { return c_.size(); }
  long double operator[](std::size_t k) const { return c_[k]; }
  long double& operator[](std::size_t k) { return c_[k]; }
  const std::vector<long double>& coefficients() const noexcept { return c_; }

  /// Multiplies by u^k, dropping terms beyond the truncation order.
  PowerSeries shifted(std::size_t k) const;
  PowerSeries truncated(std::size_t terms) const;
  /// Copy with the first `terms` coefficients set to zero; used when the
  /// leading terms are known to cancel analytically.
  PowerSeries without_leading(std::size_t terms) const;

  /// Horner evaluation. The error bound covers coefficient rounding and
  /// the truncated tail, estimated geometrically from the last two
  /// non-zero terms.
  numerics::Evaluation evaluate(double u) const;

  /// Largest u for which the truncated tail stays below `rel` times the
  /// leading non-zero term.
  double radius_for(double rel) const;

  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator-=(const PowerSeries& o);
  PowerSeries& operator*=(long double s);

 private:
  std::vector<long double> c_;
};

PowerSeries operator+(PowerSeries a, const PowerSeries& b);
PowerSeries operator-(PowerSeries a, const PowerSeries& b);
PowerSeries operator*(PowerSeries a, long double s);
PowerSeries operator*(long double s, PowerSeries a);
/// Cauchy product truncated to the shorter length.
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);

/// log(w) for w[0] == 1.
PowerSeries log(const PowerSeries& w);
/// exp(v) for v[0] == 0.
PowerSeries exp(const PowerSeries& v);
/// w^alpha for w[0] == 1.
PowerSeries pow(const PowerSeries& w, long double alpha);

}  // namespace ptrig
