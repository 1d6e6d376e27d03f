#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

#include "ptrig/numerics.hpp"

namespace ptrig::numerics {

namespace {

constexpr int kFinestShift = kMaxQuadratureLevel;
constexpr double kTMax = 6.0;
constexpr int kMinLevel = 3;
// A term this small relative to the running sum of |terms| ends a sweep.
constexpr double kNegligible = 1e-20;

// Abscissa complements and weights of the tanh-sinh rule on [-1, 1] at the
// finest spacing; coarser levels take strided subsets. For node t >= 0 the
// abscissa is 1 - complement and the weight (without the step) is
// (pi/2) cosh(t) / cosh^2((pi/2) sinh t).
class TanhSinhTable {
 public:
  TanhSinhTable() {
    const double h = std::ldexp(1.0, -kFinestShift);
    const auto count = static_cast<std::size_t>(kTMax / h);
    complement_.resize(count + 1);
    weight_.resize(count + 1);
    for (std::size_t k = 0; k <= count; ++k) {
      const double t = static_cast<double>(k) * h;
      const double v = std::numbers::pi / 2.0 * std::sinh(t);
      const double c = 2.0 / (1.0 + std::exp(2.0 * v));
      complement_[k] = c;
      weight_[k] = std::numbers::pi / 2.0 * std::cosh(t) * c * (2.0 - c);
    }
  }

  std::size_t size() const { return complement_.size(); }
  double complement(std::size_t k) const { return complement_[k]; }
  double weight(std::size_t k) const { return weight_[k]; }

 private:
  std::vector<double> complement_;
  std::vector<double> weight_;
};

const TanhSinhTable& table() {
  static const TanhSinhTable instance;
  return instance;
}

struct NeumaierSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      carry += (sum - t) + x;
    } else {
      carry += (x - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + carry; }
};

// The two outermost evaluated nodes on one side, for the hidden-tail fit.
struct EndpointTrace {
  bool cut = false;
  double d1 = std::numeric_limits<double>::infinity();
  double f1 = 0.0;
  double d2 = std::numeric_limits<double>::infinity();
  double f2 = 0.0;

  void record(double d, double f) {
    if (d < d1) {
      d2 = d1;
      f2 = f1;
      d1 = d;
      f1 = f;
    } else if (d < d2) {
      d2 = d;
      f2 = f;
    }
  }

  // Mass of |f| on (0, d1) assuming |f| ~ C d^-gamma there.
  double hidden_mass() const {
    if (!cut || !std::isfinite(d1) || f1 == 0.0) {
      return 0.0;
    }
    const double m1 = std::abs(f1);
    if (!std::isfinite(d2) || f2 == 0.0 || d2 <= d1) {
      return m1 * d1;
    }
    const double gamma = std::log(m1 / std::abs(f2)) / std::log(d2 / d1);
    if (!(gamma < 1.0)) {
      throw Error(ErrorKind::NonConvergence,
                  "integrand grows too fast at an endpoint to bound the unresolved tail");
    }
    return m1 * d1 / (1.0 - std::max(gamma, 0.0));
  }
};

// Evaluator returns nullopt when the node cannot be represented strictly
// inside the interval.
template <class Evaluator>
Evaluation tanh_sinh(const Evaluator& eval, double a, double b, const Tolerance& tol) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    std::ostringstream msg;
    msg << "integration interval [" << a << ", " << b << "] is empty or not finite";
    throw Error(ErrorKind::InvalidInterval, msg.str());
  }
  const TanhSinhTable& nodes = table();
  const double half = 0.5 * (b - a);
  const double centre = a + half;

  auto finite_or_throw = [](double fx, double x) {
    if (!std::isfinite(fx)) {
      std::ostringstream msg;
      msg << "integrand is not finite at interior node x = " << x;
      throw Error(ErrorKind::EvaluationFailed, msg.str());
    }
    return fx;
  };

  NeumaierSum sum;
  double magnitude = 0.0;
  EndpointTrace left;
  EndpointTrace right;

  {
    const auto f0 = eval(centre, half, half);
    const double term = std::numbers::pi / 2.0 * finite_or_throw(f0.value_or(0.0), centre);
    sum.add(term);
    magnitude += std::abs(term);
  }

  // side = -1 sweeps towards a, +1 towards b.
  auto sweep = [&](std::size_t first, std::size_t stride, int side) {
    EndpointTrace& trace = side < 0 ? left : right;
    int negligible_run = 0;
    for (std::size_t k = first; k < nodes.size(); k += stride) {
      const double near = half * nodes.complement(k);
      const double far = half * (2.0 - nodes.complement(k));
      if (near == 0.0) {
        trace.cut = true;
        break;
      }
      const double x = side < 0 ? a + near : b - near;
      const auto fx = side < 0 ? eval(x, near, far) : eval(x, far, near);
      if (!fx) {
        trace.cut = true;
        break;
      }
      const double term = nodes.weight(k) * finite_or_throw(*fx, x);
      trace.record(near, *fx);
      sum.add(term);
      magnitude += std::abs(term);
      if (std::abs(term) <= kNegligible * magnitude) {
        if (++negligible_run >= 2) {
          break;
        }
      } else {
        negligible_run = 0;
      }
    }
  };

  double previous = 0.0;
  double estimate = std::numeric_limits<double>::infinity();
  double hidden = 0.0;
  for (int level = 0; level <= kMaxQuadratureLevel; ++level) {
    const std::size_t stride = std::size_t{1} << (kFinestShift - level);
    const std::size_t first = stride;
    const std::size_t step = level == 0 ? stride : 2 * stride;
    sweep(first, step, -1);
    sweep(first, step, +1);
    const double h = std::ldexp(1.0, -level);
    const double current = half * h * sum.value();
    if (level > 0) {
      estimate = 2.0 * std::abs(current - previous);
    }
    previous = current;
    // Tolerances below the rounding floor of the sum are not certifiable;
    // the floor replaces them.
    const double floor = 4.0 * std::numeric_limits<double>::epsilon() * half * h * magnitude;
    const double bound = std::max(tol.bound(current), floor);
    if (level >= kMinLevel && estimate <= bound) {
      hidden = left.hidden_mass() + right.hidden_mass();
      if (estimate + hidden <= bound) {
        return Evaluation(current, estimate + hidden + floor);
      }
    }
  }
  if (hidden > 0.0) {
    std::ostringstream msg;
    msg << "unresolved endpoint mass " << hidden << " exceeds tolerance on [" << a << ", " << b
        << "]";
    throw Error(ErrorKind::NonConvergence, msg.str());
  }
  std::ostringstream msg;
  msg << "tanh-sinh error estimate " << estimate << " above tolerance after level "
      << kMaxQuadratureLevel << " on [" << a << ", " << b << "]";
  throw Error(ErrorKind::NonConvergence, msg.str());
}

}  // namespace

Evaluation integrate(const Function& f, double a, double b, const Tolerance& tol) {
  auto eval = [&](double x, double, double) -> std::optional<double> {
    if (!(x > a && x < b)) {
      return std::nullopt;
    }
    return f(x);
  };
  return tanh_sinh(eval, a, b, tol);
}

Evaluation integrate(const DistanceFunction& f, double a, double b, const Tolerance& tol) {
  auto eval = [&](double x, double from_a, double to_b) -> std::optional<double> {
    return f(x, from_a, to_b);
  };
  return tanh_sinh(eval, a, b, tol);
}

}  // namespace ptrig::numerics
