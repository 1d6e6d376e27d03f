#include <cmath>
#include <numbers>
#include <sstream>

#include "ptrig/inequalities.hpp"

namespace ptrig {

namespace {

constexpr double kMinOffset = 1e-4;

}  // namespace

std::string_view to_string(Spacing s) noexcept {
  switch (s) {
    case Spacing::Uniform: return "uniform";
    case Spacing::Log: return "log";
    case Spacing::Cosine: return "cosine";
  }
  return "unknown";
}

std::optional<Spacing> parse_spacing(std::string_view name) {
  for (Spacing s : {Spacing::Uniform, Spacing::Log, Spacing::Cosine}) {
    if (to_string(s) == name) {
      return s;
    }
  }
  return std::nullopt;
}

std::string_view to_string(MonotoneVerdict v) noexcept {
  switch (v) {
    case MonotoneVerdict::Increasing: return "increasing";
    case MonotoneVerdict::Decreasing: return "decreasing";
    case MonotoneVerdict::Violated: return "violated";
    case MonotoneVerdict::Inconclusive: return "inconclusive";
    case MonotoneVerdict::NotChecked: return "not_checked";
  }
  return "unknown";
}

void GridSpec::validate() const {
  std::ostringstream msg;
  if (n < 3) {
    msg << "grid needs at least 3 points, got " << n;
  } else if (!(left_offset >= kMinOffset) || !(right_offset >= kMinOffset)) {
    msg << "grid offsets must be at least " << kMinOffset << " of the interval length";
  } else if (!(left_offset + right_offset < 1.0)) {
    msg << "grid offsets leave no interval";
  } else {
    return;
  }
  throw Error(ErrorKind::InvalidArgument, msg.str());
}

std::vector<double> grid_points(const GridSpec& grid, double a, double b) {
  grid.validate();
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw Error(ErrorKind::InvalidInterval, "grid interval must be finite with a < b");
  }
  const double length = b - a;
  const double lo = a + grid.left_offset * length;
  const double hi = b - grid.right_offset * length;
  const int n = grid.n;
  std::vector<double> x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n - 1);
    double v = 0.0;
    switch (grid.spacing) {
      case Spacing::Uniform:
        v = lo + t * (hi - lo);
        break;
      case Spacing::Log: {
        const double d0 = lo - a;
        const double d1 = hi - a;
        v = a + d0 * std::pow(d1 / d0, t);
        break;
      }
      case Spacing::Cosine:
        v = lo + 0.5 * (hi - lo) * (1.0 - std::cos(std::numbers::pi * t));
        break;
    }
    x[static_cast<std::size_t>(i)] = v;
  }
  // Pin the ends, which rounding in the spacing laws can move.
  x.front() = lo;
  x.back() = hi;
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (!(x[i] > x[i - 1])) {
      throw Error(ErrorKind::InvalidArgument, "grid is too fine to be strictly increasing");
    }
  }
  return x;
}

}  // namespace ptrig
