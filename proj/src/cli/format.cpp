#include "format.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <ostream>

namespace ptrig::cli::detail {

std::string shortest(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

std::string csv_number(double v) {
  std::array<char, 64> buf{};
  const int len = std::snprintf(buf.data(), buf.size(), "%.17g", v);
  return std::string(buf.data(), static_cast<std::size_t>(len));
}

nlohmann::json report_json(const VerificationReport& r) {
  nlohmann::json points = nlohmann::json::array();
  for (const ReportPoint& pt : r.points) {
    points.push_back({{"x", pt.x}, {"margin", pt.margin}, {"budget", pt.budget},
                      {"values", pt.values}});
  }
  nlohmann::json j = {
      {"claim", std::string(to_string(r.claim))},
      {"p", r.p.value()},
      {"check", r.check},
      {"passed", r.passed},
      {"asserted", r.asserted},
      {"min_margin", r.min_margin},
      {"min_margin_x", r.min_margin_x},
      {"error_budget", r.error_budget},
      {"monotone_verdict", std::string(to_string(r.monotone_verdict))},
      {"points", std::move(points)},
  };
  if (r.observed_supremum) {
    j["observed_supremum"] = *r.observed_supremum;
  }
  if (r.routes_agree) {
    j["routes_agree"] = *r.routes_agree;
  }
  return j;
}

void write_report_human(std::ostream& out, const VerificationReport& r) {
  out << to_string(r.claim) << " p=" << shortest(r.p.value()) << " " << r.check << ": "
      << (r.passed ? "PASSED" : "FAILED");
  if (!r.asserted) {
    out << " (exploratory, p below hypothesis)";
  }
  out << "\n  min_margin=" << shortest(r.min_margin) << " at x=" << shortest(r.min_margin_x)
      << ", error_budget=" << shortest(r.error_budget) << ", points=" << r.points.size();
  if (r.monotone_verdict != MonotoneVerdict::NotChecked) {
    out << ", verdict=" << to_string(r.monotone_verdict);
  }
  if (r.observed_supremum) {
    out << ", observed_supremum=" << shortest(*r.observed_supremum);
  }
  if (r.routes_agree) {
    out << ", routes_agree=" << (*r.routes_agree ? "true" : "false");
  }
  out << "\n";
}

void write_report_csv_header(std::ostream& out) {
  out << "claim,p,check,passed,asserted,min_margin,min_margin_x,error_budget,monotone_verdict\n";
}

void write_report_csv_row(std::ostream& out, const VerificationReport& r) {
  out << to_string(r.claim) << ',' << csv_number(r.p.value()) << ',' << r.check << ','
      << (r.passed ? "true" : "false") << ',' << (r.asserted ? "true" : "false") << ','
      << csv_number(r.min_margin) << ',' << csv_number(r.min_margin_x) << ','
      << csv_number(r.error_budget) << ',' << to_string(r.monotone_verdict) << '\n';
}

}  // namespace ptrig::cli::detail
