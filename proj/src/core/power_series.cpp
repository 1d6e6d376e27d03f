#include "ptrig/power_series.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>

namespace ptrig {

namespace {

void require_unit_constant(const PowerSeries& w, const char* what) {
  if (w.size() == 0 || w[0] != 1.0L) {
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " needs a series with w[0] == 1");
  }
}

}  // namespace

PowerSeries::PowerSeries(std::size_t terms) : c_(terms, 0.0L) {}

PowerSeries::PowerSeries(std::vector<long double> coefficients) : c_(std::move(coefficients)) {}

PowerSeries PowerSeries::constant(long double c, std::size_t terms) {
  PowerSeries s(terms);
  if (terms > 0) {
    s.c_[0] = c;
  }
  return s;
}

PowerSeries PowerSeries::shifted(std::size_t k) const {
  PowerSeries s(size());
  for (std::size_t i = 0; i + k < size(); ++i) {
    s.c_[i + k] = c_[i];
  }
  return s;
}

PowerSeries PowerSeries::truncated(std::size_t terms) const {
  PowerSeries s(terms);
  std::copy_n(c_.begin(), std::min(terms, size()), s.c_.begin());
  return s;
}

PowerSeries PowerSeries::without_leading(std::size_t terms) const {
  PowerSeries s = *this;
  std::fill_n(s.c_.begin(), std::min(terms, size()), 0.0L);
  return s;
}

numerics::Evaluation PowerSeries::evaluate(double u) const {
  const long double x = u;
  long double acc = 0.0L;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * x + *it;
  }
  long double magnitude = 0.0L;
  long double last = 0.0L;
  long double before_last = 0.0L;
  long double power = 1.0L;
  for (long double c : c_) {
    const long double term = std::fabs(c) * power;
    magnitude += term;
    if (c != 0.0L) {
      before_last = last;
      last = term;
    }
    power *= std::fabs(x);
  }
  long double tail = 0.0L;
  if (last > 0.0L) {
    const long double ratio = before_last > 0.0L ? last / before_last : 1.0L;
    tail = ratio < 0.5L ? last : magnitude;
  }
  const double value = static_cast<double>(acc);
  const long double rounding = 16.0L * static_cast<long double>(size()) * LDBL_EPSILON * magnitude;
  const double err = static_cast<double>(tail + rounding) +
                     std::numeric_limits<double>::epsilon() * std::abs(value);
  return numerics::Evaluation(value, err);
}

double PowerSeries::radius_for(double rel) const {
  std::size_t lead = 0;
  while (lead < size() && c_[lead] == 0.0L) {
    ++lead;
  }
  if (lead + 1 >= size()) {
    return std::numeric_limits<double>::infinity();
  }
  double radius = std::numeric_limits<double>::infinity();
  const std::size_t from = size() > lead + 4 ? size() - 4 : lead + 1;
  for (std::size_t j = from; j < size(); ++j) {
    if (c_[j] == 0.0L) {
      continue;
    }
    const long double r = std::pow(rel * std::fabs(c_[lead]) / std::fabs(c_[j]),
                                   1.0L / static_cast<long double>(j - lead));
    radius = std::min(radius, static_cast<double>(r));
  }
  return radius;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  for (std::size_t k = 0; k < std::min(size(), o.size()); ++k) {
    c_[k] += o.c_[k];
  }
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
  for (std::size_t k = 0; k < std::min(size(), o.size()); ++k) {
    c_[k] -= o.c_[k];
  }
  return *this;
}

PowerSeries& PowerSeries::operator*=(long double s) {
  for (auto& c : c_) {
    c *= s;
  }
  return *this;
}

PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
PowerSeries operator*(PowerSeries a, long double s) { return a *= s; }
PowerSeries operator*(long double s, PowerSeries a) { return a *= s; }

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.size(), b.size());
  PowerSeries out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0.0L) {
      continue;
    }
    for (std::size_t j = 0; i + j < n; ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

PowerSeries log(const PowerSeries& w) {
  require_unit_constant(w, "log");
  PowerSeries l(w.size());
  for (std::size_t n = 1; n < w.size(); ++n) {
    long double acc = 0.0L;
    for (std::size_t k = 1; k < n; ++k) {
      acc += static_cast<long double>(k) * l[k] * w[n - k];
    }
    l[n] = w[n] - acc / static_cast<long double>(n);
  }
  return l;
}

PowerSeries exp(const PowerSeries& v) {
  if (v.size() == 0 || v[0] != 0.0L) {
    throw Error(ErrorKind::InvalidArgument, "exp needs a series with v[0] == 0");
  }
  PowerSeries e(v.size());
  e[0] = 1.0L;
  for (std::size_t n = 1; n < v.size(); ++n) {
    long double acc = 0.0L;
    for (std::size_t k = 1; k <= n; ++k) {
      acc += static_cast<long double>(k) * v[k] * e[n - k];
    }
    e[n] = acc / static_cast<long double>(n);
  }
  return e;
}

PowerSeries pow(const PowerSeries& w, long double alpha) {
  require_unit_constant(w, "pow");
  PowerSeries p(w.size());
  p[0] = 1.0L;
  for (std::size_t n = 1; n < w.size(); ++n) {
    long double acc = 0.0L;
    for (std::size_t k = 1; k <= n; ++k) {
      acc += ((alpha + 1.0L) * static_cast<long double>(k) - static_cast<long double>(n)) * w[k] *
             p[n - k];
    }
    p[n] = acc / static_cast<long double>(n);
  }
  return p;
}

}  // namespace ptrig
