#include <algorithm>
#include <map>
#include <mutex>

#include "detail.hpp"

namespace ptrig::detail {

namespace {

Expansions build(PParam pp) {
  const auto base = small_argument_series(pp);
  const long double p = pp.value();
  const std::size_t n = base->sin_ratio.size();
  const PowerSeries one = PowerSeries::one(n);

  const PowerSeries A = -1.0L * log(base->sin_ratio);
  const PowerSeries B = log(base->sinh_ratio);
  // cos^p = 1 - u w_s^p and cosh^p = 1 + u w_h^p.
  const PowerSeries Lc = (-1.0L / p) * log(one - pow(base->sin_ratio, p).shifted(1));
  const PowerSeries C = (1.0L / p) * log(one + pow(base->sinh_ratio, p).shifted(1));
  // x/tan = cos/w_s = exp(A - Lc) and x/tanh = cosh/w_h = exp(C - B).
  const PowerSeries Q = one - exp(A - Lc);
  const PowerSeries R = exp(C - B) - one;
  // (x/p) tanh^(p-1) = (u/p) (w_h / cosh)^(p-1).
  const PowerSeries Tg = ((1.0L / p) * exp((p - 1.0L) * (B - C))).shifted(1);

  Expansions e{A,
               B,
               C,
               Lc,
               Q,
               R,
               Tg,
               (A - B).without_leading(2),
               (A - (1.0L / (1.0L + p)) * C).without_leading(2),
               ((1.0L / p) * Q - A).without_leading(2),
               (B - (1.0L / p) * R).without_leading(2),
               (C - Tg).without_leading(2),
               (Lc - C).without_leading(2),
               0.0};

  double limit = base->u_limit;
  for (const PowerSeries* s : {&e.A, &e.B, &e.C, &e.Lc, &e.Q, &e.R, &e.Tg, &e.AmB, &e.AmaC,
                               &e.QpmA, &e.BmRp, &e.CmTg, &e.LcmC}) {
    limit = std::min(limit, s->radius_for(1e-18));
  }
  e.u_limit = limit;
  return e;
}

}  // namespace

std::shared_ptr<const Expansions> expansions(PParam p) {
  static std::mutex mutex;
  static std::map<double, std::shared_ptr<const Expansions>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(p.value()); it != cache.end()) {
      return it->second;
    }
  }
  auto made = std::make_shared<const Expansions>(build(p));
  std::lock_guard lock(mutex);
  return cache.try_emplace(p.value(), std::move(made)).first->second;
}

}  // namespace ptrig::detail
