#pragma once

// Per-p constants and the defining integrals shared by the circular and
// hyperbolic evaluators.

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "ptrig/core.hpp"

namespace ptrig::detail {

/// Insert-only memo; values are immutable once published.
template <class Key, class Value>
class Memo {
 public:
  template <class Make>
  std::shared_ptr<const Value> get(const Key& key, Make&& make) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = entries_.find(key); it != entries_.end()) {
        return it->second;
      }
    }
    auto made = std::make_shared<const Value>(make());
    std::lock_guard lock(mutex_);
    return entries_.try_emplace(key, std::move(made)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<Key, std::shared_ptr<const Value>> entries_;
};

using ToleranceKey = std::tuple<double, double, double, int>;
inline ToleranceKey key_of(PParam p, const Tolerance& tol) {
  return {p.value(), tol.abs_tol(), tol.rel_tol(), tol.max_iter()};
}

struct FamilyConstants {
  Evaluation half_pi;      // arcsin_p(1)
  double mid_argument;     // 2^(-1/p), where sin_p^p = cos_p^p = 1/2
  Evaluation mid_angle;    // arcsin_p(2^(-1/p))
  Evaluation arsinh_one;   // arsinh_p(1)
};

std::shared_ptr<const FamilyConstants> family(PParam p, const Tolerance& tol);

/// int_0^s (1 - t^p)^(-1/p) dt for s^p <= 1/2.
Evaluation arcsin_lower(double s, double p, const Tolerance& tol);
/// int_s^1 (1 - t^p)^(-1/p) dt, singular at t = 1.
Evaluation arcsin_upper(double s, double p, const Tolerance& tol);
/// int_0^c r^(p-2) (1 - r^p)^(1/p - 1) dr = pi_p/2 - arcsin_p((1 - c^p)^(1/p)).
Evaluation arccos_integral(double c, double p, const Tolerance& tol);
/// int_0^x (1 + t^p)^(-1/p) dt for 0 < x <= 1.
Evaluation arsinh_lower(double x, double p, const Tolerance& tol);
/// int_0^y (1 + e^(-p v))^(-1/p) dv = arsinh_p(e^y) - arsinh_p(1).
Evaluation arsinh_log_tail(double y, double p, const Tolerance& tol);

}  // namespace ptrig::detail
