#pragma once

#include <memory>

#include "ptrig/inequalities.hpp"

namespace ptrig::detail {

/// Series in u = x^p of the small quantities and of the differences whose
/// first-order terms cancel. The gap series have their first coefficient
/// set to zero exactly.
struct Expansions {
  PowerSeries A, B, C, Lc, Q, R, Tg;
  PowerSeries AmB;   // A - B
  PowerSeries AmaC;  // A - C/(1+p)
  PowerSeries QpmA;  // Q/p - A
  PowerSeries BmRp;  // B - R/p
  PowerSeries CmTg;  // C - Tg
  PowerSeries LcmC;  // Lc - C
  /// Series are used for u <= u_limit.
  double u_limit;
};

std::shared_ptr<const Expansions> expansions(PParam p);

enum Needs : unsigned { kCircular = 1, kHyperbolic = 2, kBoth = 3 };

/// The small quantities at one point. Fields outside the requested family
/// are left at zero; gaps are filled when both of their inputs are.
struct Quantities {
  double x = 0.0;
  bool series = false;
  Evaluation A, Lc, Q;
  Evaluation B, C, R, Tg;
  Evaluation AmB, AmaC, QpmA, BmRp, CmTg, LcmC;
};

Quantities quantities(double x, PParam p, unsigned needs, const Tolerance& tol);

/// Functional value split as anchor + offset; the offset carries all the
/// information near the anchor and is what monotone checks compare.
struct Split {
  double anchor;
  Evaluation offset;
  Evaluation value() const { return anchor + offset; }
};

Split functional_split(FunctionId id, const Quantities& q, PParam p);
unsigned needs_of(FunctionId id) noexcept;

/// beta without the p >= 2 check.
Evaluation beta_of(PParam p, const Tolerance& tol);

void check_functional_argument(FunctionId id, double x, PParam p);

}  // namespace ptrig::detail
