#include <cctype>
#include <cmath>
#include <sstream>

#include "detail.hpp"

namespace ptrig {

namespace {

constexpr double kMaxHyperbolicArgument = 700.0;

bool is_circular(FunctionId id) {
  switch (id) {
    case FunctionId::LEM23_G:
    case FunctionId::LEM24_GAP:
    case FunctionId::LEM23_CHAIN:
      return false;
    default:
      return true;
  }
}

}  // namespace

std::string_view to_string(FunctionId id) noexcept {
  switch (id) {
    case FunctionId::THM1_F: return "THM1_F";
    case FunctionId::THM2_G: return "THM2_G";
    case FunctionId::LEM22_F: return "LEM22_F";
    case FunctionId::LEM23_G: return "LEM23_G";
    case FunctionId::LEM24_GAP: return "LEM24_GAP";
    case FunctionId::COROLLARY_CHAIN: return "COROLLARY_CHAIN";
    case FunctionId::THM1_CHAIN: return "THM1_CHAIN";
    case FunctionId::THM2_CHAIN: return "THM2_CHAIN";
    case FunctionId::LEM22_CHAIN: return "LEM22_CHAIN";
    case FunctionId::LEM23_CHAIN: return "LEM23_CHAIN";
  }
  return "UNKNOWN";
}

std::optional<FunctionId> parse_function_id(std::string_view tag) {
  std::string upper(tag);
  for (char& c : upper) {
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  for (FunctionId id : kAllFunctionIds) {
    if (to_string(id) == upper) {
      return id;
    }
  }
  return std::nullopt;
}

bool is_chain(FunctionId id) noexcept {
  switch (id) {
    case FunctionId::COROLLARY_CHAIN:
    case FunctionId::THM1_CHAIN:
    case FunctionId::THM2_CHAIN:
    case FunctionId::LEM22_CHAIN:
    case FunctionId::LEM23_CHAIN:
      return true;
    default:
      return false;
  }
}

double minimum_asserted_p(FunctionId id) noexcept {
  return id == FunctionId::LEM24_GAP ? 1.0 : 2.0;
}

std::pair<double, double> claim_interval(FunctionId id, PParam p) {
  if (is_circular(id)) {
    return {0.0, pi_p(p).value() / 2.0};
  }
  return {0.0, 3.0};
}

namespace detail {

unsigned needs_of(FunctionId id) noexcept {
  switch (id) {
    case FunctionId::LEM22_F:
    case FunctionId::LEM22_CHAIN:
      return kCircular;
    case FunctionId::LEM23_G:
    case FunctionId::LEM24_GAP:
    case FunctionId::LEM23_CHAIN:
      return kHyperbolic;
    default:
      return kBoth;
  }
}

void check_functional_argument(FunctionId id, double x, PParam p) {
  const double hi = is_circular(id) ? pi_p(p).value() / 2.0 : kMaxHyperbolicArgument;
  const bool ok = is_circular(id) ? (x > 0.0 && x < hi) : (x > 0.0 && x <= hi);
  if (!ok) {
    std::ostringstream msg;
    msg.precision(17);
    msg << to_string(id) << " argument " << x << " outside (0, " << hi << ")";
    throw Error(ErrorKind::DomainError, msg.str());
  }
}

Split functional_split(FunctionId id, const Quantities& q, PParam pp) {
  const double p = pp.value();
  switch (id) {
    case FunctionId::THM1_F:
      return {1.0, q.AmB / q.B};
    case FunctionId::THM2_G:
      return {1.0 / (1.0 + p), q.AmaC / q.C};
    case FunctionId::LEM22_F:
      return {1.0, -(p * q.QpmA / q.Q)};
    case FunctionId::LEM23_G:
      return {1.0, p * q.BmRp / q.R};
    case FunctionId::LEM24_GAP:
      return {0.0, q.CmTg};
    default:
      break;
  }
  throw Error(ErrorKind::InvalidArgument, std::string(to_string(id)) + " is not a functional");
}

Evaluation beta_of(PParam p, const Tolerance& tol) {
  const Evaluation half_pi = pi_p(p, tol) / 2.0;
  // cosh_p at the uncertain endpoint: widen by its slope.
  const Evaluation cosh =
      cosh_p(half_pi.value(), p, tol)
          .with_added_error(d_cosh_p(half_pi.value(), p, tol).value() * half_pi.abs_err());
  return log(half_pi) / log(cosh);
}

}  // namespace detail

SharpConstants sharp_constants(PParam p) {
  if (p.value() < 2.0) {
    std::ostringstream msg;
    msg << "sharp constants are stated for p >= 2, got " << p.value();
    throw Error(ErrorKind::InvalidArgument, msg.str());
  }
  return {1.0 / (1.0 + p.value()), detail::beta_of(p, core_tolerance()), p};
}

Evaluation evaluate_functional(FunctionId id, double x, PParam p, const Tolerance& tol) {
  detail::check_functional_argument(id, x, p);
  const detail::Quantities q = detail::quantities(x, p, detail::needs_of(id), tol);
  return detail::functional_split(id, q, p).value();
}

Evaluation thm1_f(double x, PParam p, const Tolerance& tol) {
  return evaluate_functional(FunctionId::THM1_F, x, p, tol);
}
Evaluation thm2_g(double x, PParam p, const Tolerance& tol) {
  return evaluate_functional(FunctionId::THM2_G, x, p, tol);
}
Evaluation lem22_f(double x, PParam p, const Tolerance& tol) {
  return evaluate_functional(FunctionId::LEM22_F, x, p, tol);
}
Evaluation lem23_g(double x, PParam p, const Tolerance& tol) {
  return evaluate_functional(FunctionId::LEM23_G, x, p, tol);
}
Evaluation lem24_gap(double x, PParam p, const Tolerance& tol) {
  return evaluate_functional(FunctionId::LEM24_GAP, x, p, tol);
}

Evaluation lem24_displayed_gap(double x, PParam p, const Tolerance& tol) {
  detail::check_functional_argument(FunctionId::LEM24_GAP, x, p);
  const detail::Quantities q = detail::quantities(x, p, detail::kHyperbolic, tol);
  return q.C - x * q.Tg;
}

}  // namespace ptrig
