#include <cmath>
#include <limits>

#include "detail.hpp"

namespace ptrig::detail {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Index of the first non-zero coefficient; u = x^p carries one rounding
// unit, which a term of order k amplifies k-fold.
std::size_t order_of(const PowerSeries& s) {
  std::size_t k = 0;
  while (k < s.size() && s[k] == 0.0L) {
    ++k;
  }
  return k;
}

Evaluation at(const PowerSeries& s, double u) {
  const Evaluation v = s.evaluate(u);
  return v.with_added_error(static_cast<double>(order_of(s)) * kEps * std::abs(v.value()));
}

void fill_series(Quantities& q, const Expansions& e, double u, unsigned needs) {
  if (needs & kCircular) {
    q.A = at(e.A, u);
    q.Lc = at(e.Lc, u);
    q.Q = at(e.Q, u);
    q.QpmA = at(e.QpmA, u);
  }
  if (needs & kHyperbolic) {
    q.B = at(e.B, u);
    q.C = at(e.C, u);
    q.R = at(e.R, u);
    q.Tg = at(e.Tg, u);
    q.BmRp = at(e.BmRp, u);
    q.CmTg = at(e.CmTg, u);
  }
  if (needs == kBoth) {
    q.AmB = at(e.AmB, u);
    q.AmaC = at(e.AmaC, u);
    q.LcmC = at(e.LcmC, u);
  }
}

void fill_direct(Quantities& q, double x, PParam pp, unsigned needs, const Tolerance& tol) {
  const double p = pp.value();
  const Evaluation ex(x);
  if (needs & kCircular) {
    const CircularPair sc = sin_cos_p(x, pp, tol);
    q.A = log(ex / sc.sin);
    q.Lc = -log(sc.cos);
    q.Q = 1.0 - ex * sc.cos / sc.sin;
    q.QpmA = q.Q / p - q.A;
  }
  if (needs & kHyperbolic) {
    const HyperbolicPair sc = sinh_cosh_p(x, pp, tol);
    const Evaluation tanh = sc.sinh / sc.cosh;
    q.B = log(sc.sinh / ex);
    q.C = log(sc.cosh);
    q.R = ex / tanh - 1.0;
    q.Tg = (x / p) * pow(tanh, p - 1.0);
    q.BmRp = q.B - q.R / p;
    q.CmTg = q.C - q.Tg;
  }
  if (needs == kBoth) {
    q.AmB = q.A - q.B;
    q.AmaC = q.A - q.C / (1.0 + p);
    q.LcmC = q.Lc - q.C;
  }
}

}  // namespace

Quantities quantities(double x, PParam p, unsigned needs, const Tolerance& tol) {
  Quantities q;
  q.x = x;
  const auto e = expansions(p);
  const double u = std::pow(x, p.value());
  if (u <= e->u_limit) {
    q.series = true;
    fill_series(q, *e, u, needs);
  } else {
    fill_direct(q, x, p, needs, tol);
  }
  return q;
}

}  // namespace ptrig::detail
