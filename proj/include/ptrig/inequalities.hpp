#pragma once

// Ratios and inequality chains relating sin_p, cos_p, tan_p to sinh_p,
// cosh_p, tanh_p, and a grid verifier that certifies them with margins
// checked against propagated error bounds.
//
// Every functional is built from small quantities that vanish at x = 0:
//
//   A = log(x / sin_p x)      B = log(sinh_p x / x)
//   C = log cosh_p x          Lc = -log cos_p x
//   Q = 1 - x / tan_p x       R = x / tanh_p x - 1
//   Tg = (x/p) tanh_p(x)^(p-1)
//
// All are O(x^p). Their relevant differences (A - B, A - C/(1+p), ...) are
// O(x^(2p)) and are computed from power series in u = x^p when u is small,
// so no information is lost to cancellation near 0.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ptrig/core.hpp"

namespace ptrig {

enum class FunctionId {
  THM1_F,
  THM2_G,
  LEM22_F,
  LEM23_G,
  LEM24_GAP,
  COROLLARY_CHAIN,
  THM1_CHAIN,
  THM2_CHAIN,
  LEM22_CHAIN,
  LEM23_CHAIN,
};

inline constexpr std::array<FunctionId, 10> kAllFunctionIds = {
    FunctionId::THM1_F,          FunctionId::THM2_G,     FunctionId::LEM22_F,
    FunctionId::LEM23_G,         FunctionId::LEM24_GAP,  FunctionId::COROLLARY_CHAIN,
    FunctionId::THM1_CHAIN,      FunctionId::THM2_CHAIN, FunctionId::LEM22_CHAIN,
    FunctionId::LEM23_CHAIN};

/// Upper-case tag, e.g. "THM2_CHAIN".
std::string_view to_string(FunctionId id) noexcept;
/// Accepts the tag in either case.
std::optional<FunctionId> parse_function_id(std::string_view tag);

bool is_chain(FunctionId id) noexcept;

/// Smallest p for which the claim is asserted: 2, except LEM24_GAP which
/// holds for every p > 1.
double minimum_asserted_p(FunctionId id) noexcept;

/// Open interval on which the claim is stated: (0, pi_p/2) for the
/// circular claims, (0, 3) for LEM23_* and LEM24_GAP (a finite window of
/// the stated (0, inf)).
std::pair<double, double> claim_interval(FunctionId id, PParam p);

enum class Spacing { Uniform, Log, Cosine };

std::string_view to_string(Spacing s) noexcept;
std::optional<Spacing> parse_spacing(std::string_view name);

/// Samples of an open interval (a, b) of length L, restricted to
/// [a + left_offset L, b - right_offset L].
struct GridSpec {
  int n = 200;
  Spacing spacing = Spacing::Cosine;
  double left_offset = 1e-4;
  double right_offset = 1e-4;

  /// Throws InvalidArgument unless n >= 3, both offsets >= 1e-4 and the
  /// offsets leave a non-empty interval.
  void validate() const;
};

/// Strictly increasing grid points. Log spacing is geometric in the
/// distance from a.
std::vector<double> grid_points(const GridSpec& grid, double a, double b);

/// Inconclusive: no step goes against the direction beyond its error
/// budget, but some step is not certainly in the direction either.
enum class MonotoneVerdict { Increasing, Decreasing, Violated, Inconclusive, NotChecked };
enum class Direction { Increasing, Decreasing };

std::string_view to_string(MonotoneVerdict v) noexcept;

struct SharpConstants {
  double alpha;     // 1/(1+p)
  Evaluation beta;  // log(pi_p/2) / log(cosh_p(pi_p/2))
  PParam p;
};

/// Requires p >= 2.
SharpConstants sharp_constants(PParam p);

// Functionals. Each throws DomainError outside its open interval.

/// log(x/sin_p x) / log(sinh_p x / x) on (0, pi_p/2).
Evaluation thm1_f(double x, PParam p, const Tolerance& tol = core_tolerance());
/// log(x/sin_p x) / log(cosh_p x) on (0, pi_p/2).
Evaluation thm2_g(double x, PParam p, const Tolerance& tol = core_tolerance());
/// p sin_p(x) log(x/sin_p x) / (sin_p x - x cos_p x) on (0, pi_p/2).
Evaluation lem22_f(double x, PParam p, const Tolerance& tol = core_tolerance());
/// p sinh_p(x) log(sinh_p(x)/x) / (x cosh_p x - sinh_p x) for x > 0.
Evaluation lem23_g(double x, PParam p, const Tolerance& tol = core_tolerance());
/// log(cosh_p x) - (x/p) tanh_p(x)^(p-1) for x > 0.
Evaluation lem24_gap(double x, PParam p, const Tolerance& tol = core_tolerance());
/// log(cosh_p x) - (x^2/p) tanh_p(x)^(p-1): the variant with an extra
/// factor x. Negative for moderately large x; kept to demonstrate that.
Evaluation lem24_displayed_gap(double x, PParam p, const Tolerance& tol = core_tolerance());

/// Dispatches to the functional named by a non-chain id.
Evaluation evaluate_functional(FunctionId id, double x, PParam p,
                               const Tolerance& tol = core_tolerance());

struct ReportPoint {
  double x;
  /// Chain terms in increasing order, or the functional value.
  std::vector<double> values;
  /// Smallest certified gap at this point: adjacent chain terms, distance
  /// to the nearer codomain bound, or the directed step to the next point.
  double margin;
  /// Error bound the margin is compared against.
  double budget;
};

struct VerificationReport {
  FunctionId claim;
  PParam p;
  /// "chain", "monotone" or "bounds".
  std::string check;
  std::vector<ReportPoint> points;
  double min_margin = 0.0;
  double min_margin_x = 0.0;
  MonotoneVerdict monotone_verdict = MonotoneVerdict::NotChecked;
  bool passed = false;
  /// Largest per-point budget.
  double error_budget = 0.0;
  /// False when p is below the claim's hypothesis; such reports are
  /// informational only.
  bool asserted = true;
  /// Largest sampled functional value (monotone and bounds checks).
  std::optional<double> observed_supremum;
  /// THM2_CHAIN only: whether the chain and the alpha < g < beta route
  /// reach the same verdict at every point.
  std::optional<bool> routes_agree;
};

struct VerifyOptions {
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
  Tolerance tol = core_tolerance();
  /// Run claims below their p hypothesis instead of rejecting them.
  bool allow_exploratory = false;
};

/// Certifies every adjacent inequality of a chain claim. The margins are
/// heuristic, not interval-rigorous.
VerificationReport verify_chain(FunctionId claim, PParam p, const GridSpec& grid,
                                const VerifyOptions& opt = {});

/// Checks that the functional moves in `direction` along the grid. Each
/// step must exceed its error budget; a step against the direction beyond
/// the budget makes the verdict Violated, a step inside the budget makes it
/// Inconclusive. Only a certified direction passes.
VerificationReport verify_monotone(FunctionId claim, PParam p, const GridSpec& grid,
                                   Direction direction, const VerifyOptions& opt = {});

/// Checks that a functional stays strictly inside its stated codomain:
/// THM1_F in (1, p), THM2_G in (alpha, beta), LEM22_F in (p log(pi_p/2), 1),
/// LEM23_G in (1, p).
VerificationReport verify_range(FunctionId claim, PParam p, const GridSpec& grid,
                                const VerifyOptions& opt = {});

/// 1 < thm1_f < p and alpha < thm2_g < beta at every grid point of
/// (0, pi_p/2). Reported under the THM1_F tag.
VerificationReport bounds_sandwich(PParam p, const GridSpec& grid, const VerifyOptions& opt = {});

/// The default check for a claim: verify_chain for chains, verify_range for
/// LEM24_GAP (positivity), verify_monotone in the stated direction for the
/// other functionals.
VerificationReport verify_claim(FunctionId claim, PParam p, const GridSpec& grid,
                                const VerifyOptions& opt = {});

/// Stated direction of a monotone functional.
Direction stated_direction(FunctionId id);

}  // namespace ptrig
