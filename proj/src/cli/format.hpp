#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "ptrig/inequalities.hpp"

namespace ptrig::cli::detail {

/// Shortest decimal form that reads back to the same double.
std::string shortest(double v);
/// 17 significant digits, for csv.
std::string csv_number(double v);

nlohmann::json report_json(const VerificationReport& r);
void write_report_human(std::ostream& out, const VerificationReport& r);
void write_report_csv_header(std::ostream& out);
void write_report_csv_row(std::ostream& out, const VerificationReport& r);

}  // namespace ptrig::cli::detail
