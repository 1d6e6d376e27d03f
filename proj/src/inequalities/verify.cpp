#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>
#include <thread>

#include "detail.hpp"

namespace ptrig {

namespace {

using detail::Quantities;
using detail::Split;

// Evaluates f(i) for i in [0, n) on a few threads; results land in grid
// order. The lowest-index failure is rethrown so errors are deterministic.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, unsigned threads, F&& f) {
  if (threads == 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  std::vector<std::optional<T>> out(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        out[i].emplace(f(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back(worker);
    }
  }
  for (const auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
  std::vector<T> result;
  result.reserve(n);
  for (auto& v : out) {
    result.push_back(std::move(*v));
  }
  return result;
}

Quantities quantities_at(double x, PParam p, unsigned needs, const Tolerance& tol) {
  try {
    return detail::quantities(x, p, needs, tol);
  } catch (const Error& e) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "at x = " << x << ", p = " << p.value() << ": " << e.what();
    throw Error(ErrorKind::EvaluationFailed, msg.str(), e.cause());
  }
}

bool check_hypothesis(FunctionId claim, PParam p, const VerifyOptions& opt) {
  const bool asserted = p.value() >= minimum_asserted_p(claim);
  if (!asserted && !opt.allow_exploratory) {
    std::ostringstream msg;
    msg << to_string(claim) << " is stated for p >= " << minimum_asserted_p(claim) << ", got "
        << p.value();
    throw Error(ErrorKind::InvalidArgument, msg.str());
  }
  return asserted;
}

struct Constants {
  double alpha;
  Evaluation beta;
  Evaluation lambda;  // log(pi_p/2)
};

// beta and lambda come from the circular family; hyperbolic-only claims
// never read them.
Constants constants_for(FunctionId claim, PParam p, const Tolerance& tol) {
  const double alpha = 1.0 / (1.0 + p.value());
  if (detail::needs_of(claim) == detail::kHyperbolic) {
    return {alpha, Evaluation(0.0), Evaluation(0.0)};
  }
  return {alpha, detail::beta_of(p, tol), log(pi_p(p, tol) / 2.0)};
}

// Logarithms of the chain terms in increasing order and their successive
// differences, each difference formed from the cancellation-free gaps.
struct ChainLogs {
  std::vector<Evaluation> logs;
  std::vector<Evaluation> deltas;
};

ChainLogs chain_logs(FunctionId claim, const Quantities& q, PParam pp, const Constants& k) {
  const double p = pp.value();
  const double a = k.alpha;
  const Evaluation& b = k.beta;
  switch (claim) {
    case FunctionId::THM1_CHAIN:
      // (x/sinh)^p < sin/x < x/sinh
      return {{-p * q.B, -q.A, -q.B}, {(p - 1.0) * q.B - q.AmB, q.AmB}};
    case FunctionId::THM2_CHAIN:
      // cosh^-beta < sin/x < cosh^-alpha
      return {{-(b * q.C), -q.A, -a * q.C}, {(b - a) * q.C - q.AmaC, q.AmaC}};
    case FunctionId::LEM22_CHAIN:
      // exp((x/tan - 1)/p) < sin/x < exp(log(pi_p/2) (x/tan - 1))
      return {{-q.Q / p, -q.A, -(k.lambda * q.Q)},
              {q.QpmA, (1.0 / p - k.lambda) * q.Q - q.QpmA}};
    case FunctionId::LEM23_CHAIN:
      // exp((x/tanh - 1)/p) < sinh/x < exp(x/tanh - 1)
      return {{q.R / p, q.B, q.R}, {q.BmRp, (1.0 - 1.0 / p) * q.R - q.BmRp}};
    case FunctionId::COROLLARY_CHAIN:
      // cos^beta < cosh^-beta < sin/x < cosh^-alpha < 1
      return {{-(b * q.Lc), -(b * q.C), -q.A, -a * q.C, Evaluation(0.0)},
              {b * q.LcmC, (b - a) * q.C - q.AmaC, q.AmaC, a * q.C}};
    default:
      break;
  }
  throw Error(ErrorKind::InvalidArgument, std::string(to_string(claim)) + " is not a chain");
}

struct PointCheck {
  ReportPoint point;
  bool ok;
  std::optional<bool> alternate_ok;
};

// Value-domain gap t_hi - t_lo = t_hi (1 - exp(-delta)).
Evaluation value_gap(const Evaluation& log_hi, const Evaluation& delta) {
  return exp(log_hi) * -expm1(-delta);
}

// Picks the smallest of several gaps for the point record; ok requires all
// of them to clear their own bounds.
PointCheck summarize(double x, std::vector<double> values, const std::vector<Evaluation>& gaps) {
  PointCheck c{{x, std::move(values), std::numeric_limits<double>::infinity(), 0.0}, true, {}};
  for (const Evaluation& g : gaps) {
    if (g.value() < c.point.margin) {
      c.point.margin = g.value();
      c.point.budget = g.abs_err();
    }
    c.ok = c.ok && g.certainly_positive();
  }
  return c;
}

VerificationReport assemble(FunctionId claim, PParam p, std::string check, bool asserted,
                            std::vector<PointCheck> checks) {
  VerificationReport r{claim, p, std::move(check), {}, 0.0, 0.0, MonotoneVerdict::NotChecked,
                       false, 0.0, true, std::nullopt, std::nullopt};
  r.asserted = asserted;
  r.passed = true;
  r.min_margin = std::numeric_limits<double>::infinity();
  for (PointCheck& c : checks) {
    if (c.point.margin < r.min_margin) {
      r.min_margin = c.point.margin;
      r.min_margin_x = c.point.x;
    }
    r.error_budget = std::max(r.error_budget, c.point.budget);
    r.passed = r.passed && c.ok;
    r.points.push_back(std::move(c.point));
  }
  return r;
}

std::vector<double> claim_grid(FunctionId claim, PParam p, const GridSpec& grid) {
  const auto [a, b] = claim_interval(claim, p);
  return grid_points(grid, a, b);
}

// Lower and upper distances of a functional from its stated codomain.
std::vector<Evaluation> range_gaps(FunctionId claim, const Split& s, PParam pp,
                                   const Constants& k) {
  const double p = pp.value();
  const Evaluation& off = s.offset;
  switch (claim) {
    case FunctionId::THM1_F:
    case FunctionId::LEM23_G:
      return {off, (p - 1.0) - off};
    case FunctionId::THM2_G:
      return {off, (k.beta - k.alpha) - off};
    case FunctionId::LEM22_F:
      return {-off, (1.0 - p * k.lambda) + off};
    case FunctionId::LEM24_GAP:
      return {off};
    default:
      break;
  }
  throw Error(ErrorKind::InvalidArgument, std::string(to_string(claim)) + " has no codomain");
}

void require_functional(FunctionId claim) {
  if (is_chain(claim)) {
    throw Error(ErrorKind::InvalidArgument, std::string(to_string(claim)) + " is a chain");
  }
}

}  // namespace

Direction stated_direction(FunctionId id) {
  switch (id) {
    case FunctionId::THM1_F:
    case FunctionId::THM2_G:
    case FunctionId::LEM23_G:
      return Direction::Increasing;
    case FunctionId::LEM22_F:
      return Direction::Decreasing;
    default:
      break;
  }
  throw Error(ErrorKind::InvalidArgument,
              std::string(to_string(id)) + " has no stated monotone direction");
}

VerificationReport verify_chain(FunctionId claim, PParam p, const GridSpec& grid,
                                const VerifyOptions& opt) {
  if (!is_chain(claim)) {
    throw Error(ErrorKind::InvalidArgument, std::string(to_string(claim)) + " is not a chain");
  }
  const bool asserted = check_hypothesis(claim, p, opt);
  const std::vector<double> xs = claim_grid(claim, p, grid);
  const Constants k = constants_for(claim, p, opt.tol);
  const unsigned needs = detail::needs_of(claim);

  auto checks = parallel_map<PointCheck>(xs.size(), opt.threads, [&](std::size_t i) {
    const Quantities q = quantities_at(xs[i], p, needs, opt.tol);
    const ChainLogs c = chain_logs(claim, q, p, k);
    std::vector<double> values;
    std::vector<Evaluation> gaps;
    for (const Evaluation& l : c.logs) {
      values.push_back(std::exp(l.value()));
    }
    for (std::size_t j = 0; j < c.deltas.size(); ++j) {
      gaps.push_back(value_gap(c.logs[j + 1], c.deltas[j]));
    }
    PointCheck pc = summarize(xs[i], std::move(values), gaps);
    if (claim == FunctionId::THM2_CHAIN) {
      // Second route: alpha < g < beta. The chain verdict it is compared
      // with is taken from plain subtraction of the terms where that is
      // still accurate.
      const Split s = detail::functional_split(FunctionId::THM2_G, q, p);
      const bool g_ok = s.offset.certainly_positive() &&
                        ((k.beta - k.alpha) - s.offset).certainly_positive();
      bool chain_ok = pc.ok;
      if (!q.series) {
        const Evaluation t1 = exp(c.logs[0]);
        const Evaluation t2 = exp(c.logs[1]);
        const Evaluation t3 = exp(c.logs[2]);
        chain_ok = (t2 - t1).certainly_positive() && (t3 - t2).certainly_positive();
      }
      pc.alternate_ok = (g_ok == chain_ok);
    }
    return pc;
  });

  bool agree = true;
  for (const PointCheck& c : checks) {
    agree = agree && c.alternate_ok.value_or(true);
  }
  VerificationReport r = assemble(claim, p, "chain", asserted, std::move(checks));
  if (claim == FunctionId::THM2_CHAIN) {
    r.routes_agree = agree;
    r.passed = r.passed && agree;
  }
  return r;
}

VerificationReport verify_monotone(FunctionId claim, PParam p, const GridSpec& grid,
                                   Direction direction, const VerifyOptions& opt) {
  require_functional(claim);
  const bool asserted = check_hypothesis(claim, p, opt);
  const std::vector<double> xs = claim_grid(claim, p, grid);
  const unsigned needs = detail::needs_of(claim);

  auto splits = parallel_map<Split>(xs.size(), opt.threads, [&](std::size_t i) {
    return detail::functional_split(claim, quantities_at(xs[i], p, needs, opt.tol), p);
  });

  const double sign = direction == Direction::Increasing ? 1.0 : -1.0;
  std::vector<Evaluation> steps;
  for (std::size_t i = 0; i + 1 < splits.size(); ++i) {
    steps.push_back(sign * (splits[i + 1].offset - splits[i].offset));
  }
  std::vector<PointCheck> checks;
  bool reversed = false;
  bool certified = true;
  double supremum = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < splits.size(); ++i) {
    const Evaluation& step = steps[i == 0 ? 0 : i - 1];
    const double value = splits[i].value().value();
    supremum = std::max(supremum, value);
    checks.push_back({{xs[i], {value}, step.value(), step.abs_err()}, true, {}});
    reversed = reversed || step.value() < -step.abs_err();
    certified = certified && step.certainly_positive();
  }

  VerificationReport r = assemble(claim, p, "monotone", asserted, std::move(checks));
  if (reversed) {
    r.monotone_verdict = MonotoneVerdict::Violated;
  } else if (certified) {
    r.monotone_verdict = direction == Direction::Increasing ? MonotoneVerdict::Increasing
                                                            : MonotoneVerdict::Decreasing;
  } else {
    r.monotone_verdict = MonotoneVerdict::Inconclusive;
  }
  r.passed = !reversed && certified;
  r.observed_supremum = supremum;
  return r;
}

VerificationReport verify_range(FunctionId claim, PParam p, const GridSpec& grid,
                                const VerifyOptions& opt) {
  require_functional(claim);
  const bool asserted = check_hypothesis(claim, p, opt);
  const std::vector<double> xs = claim_grid(claim, p, grid);
  const Constants k = constants_for(claim, p, opt.tol);
  const unsigned needs = detail::needs_of(claim);

  auto checks = parallel_map<PointCheck>(xs.size(), opt.threads, [&](std::size_t i) {
    const Split s = detail::functional_split(claim, quantities_at(xs[i], p, needs, opt.tol), p);
    return summarize(xs[i], {s.value().value()}, range_gaps(claim, s, p, k));
  });
  double supremum = -std::numeric_limits<double>::infinity();
  for (const PointCheck& c : checks) {
    supremum = std::max(supremum, c.point.values.front());
  }
  VerificationReport r = assemble(claim, p, "bounds", asserted, std::move(checks));
  r.observed_supremum = supremum;
  return r;
}

VerificationReport bounds_sandwich(PParam p, const GridSpec& grid, const VerifyOptions& opt) {
  const bool asserted = check_hypothesis(FunctionId::THM1_F, p, opt);
  const std::vector<double> xs = claim_grid(FunctionId::THM1_F, p, grid);
  const Constants k = constants_for(FunctionId::THM1_F, p, opt.tol);

  auto checks = parallel_map<PointCheck>(xs.size(), opt.threads, [&](std::size_t i) {
    const Quantities q = quantities_at(xs[i], p, detail::kBoth, opt.tol);
    const Split f = detail::functional_split(FunctionId::THM1_F, q, p);
    const Split g = detail::functional_split(FunctionId::THM2_G, q, p);
    std::vector<Evaluation> gaps = range_gaps(FunctionId::THM1_F, f, p, k);
    for (const Evaluation& e : range_gaps(FunctionId::THM2_G, g, p, k)) {
      gaps.push_back(e);
    }
    return summarize(xs[i], {f.value().value(), g.value().value()}, gaps);
  });
  double supremum = -std::numeric_limits<double>::infinity();
  for (const PointCheck& c : checks) {
    supremum = std::max(supremum, c.point.values.front());
  }
  VerificationReport r = assemble(FunctionId::THM1_F, p, "bounds", asserted, std::move(checks));
  r.observed_supremum = supremum;
  return r;
}

VerificationReport verify_claim(FunctionId claim, PParam p, const GridSpec& grid,
                                const VerifyOptions& opt) {
  if (is_chain(claim)) {
    return verify_chain(claim, p, grid, opt);
  }
  if (claim == FunctionId::LEM24_GAP) {
    return verify_range(claim, p, grid, opt);
  }
  return verify_monotone(claim, p, grid, stated_direction(claim), opt);
}

}  // namespace ptrig
