#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "format.hpp"
#include "ptrig/cli.hpp"

namespace ptrig::cli {

namespace {

using detail::csv_number;
using detail::shortest;
using nlohmann::json;

enum class Domain { Circular, Unit, Hyperbolic, Claim };

struct FunctionEntry {
  Domain domain;
  std::function<Evaluation(double, PParam, const Tolerance&)> eval;
  std::optional<FunctionId> claim;
};

template <Evaluation (*F)(double, PParam, const Tolerance&)>
FunctionEntry entry(Domain d) {
  return {d, [](double x, PParam p, const Tolerance& t) { return F(x, p, t); }, std::nullopt};
}

FunctionEntry functional(FunctionId id) {
  return {Domain::Claim,
          [id](double x, PParam p, const Tolerance& t) { return evaluate_functional(id, x, p, t); },
          id};
}

const FunctionEntry& lookup(const std::string& name) {
  static const std::map<std::string, FunctionEntry> table = {
      {"sin_p", entry<sin_p>(Domain::Circular)},
      {"cos_p", entry<cos_p>(Domain::Circular)},
      {"tan_p", entry<tan_p>(Domain::Circular)},
      {"arcsin_p", entry<arcsin_p>(Domain::Unit)},
      {"sinh_p", entry<sinh_p>(Domain::Hyperbolic)},
      {"cosh_p", entry<cosh_p>(Domain::Hyperbolic)},
      {"tanh_p", entry<tanh_p>(Domain::Hyperbolic)},
      {"arsinh_p", entry<arsinh_p>(Domain::Hyperbolic)},
      {"d_sin_p", entry<d_sin_p>(Domain::Circular)},
      {"d_cos_p", entry<d_cos_p>(Domain::Circular)},
      {"d_sinh_p", entry<d_sinh_p>(Domain::Hyperbolic)},
      {"d_cosh_p", entry<d_cosh_p>(Domain::Hyperbolic)},
      {"d_tanh_p", entry<d_tanh_p>(Domain::Hyperbolic)},
      {"thm1_f", functional(FunctionId::THM1_F)},
      {"thm2_g", functional(FunctionId::THM2_G)},
      {"lem22_f", functional(FunctionId::LEM22_F)},
      {"lem23_g", functional(FunctionId::LEM23_G)},
      {"lem24_gap", functional(FunctionId::LEM24_GAP)},
      {"lem24_displayed_gap", entry<lem24_displayed_gap>(Domain::Hyperbolic)},
  };
  const auto it = table.find(name);
  if (it == table.end()) {
    throw UsageError("unknown function '" + name + "'");
  }
  return it->second;
}

std::pair<double, double> table_interval(const FunctionEntry& f, PParam p) {
  switch (f.domain) {
    case Domain::Circular: return {0.0, pi_p(p).value() / 2.0};
    case Domain::Unit: return {0.0, 1.0};
    case Domain::Hyperbolic: return {0.0, 3.0};
    case Domain::Claim: return claim_interval(*f.claim, p);
  }
  return {0.0, 1.0};
}

// --tol can tighten the evaluators but never loosens them below the
// library default; it is also the accuracy every printed value must meet.
Tolerance tolerance_of(const Command& cmd) {
  const Tolerance& lib = core_tolerance();
  return Tolerance(std::min(cmd.tol, lib.abs_tol()), std::min(cmd.tol, lib.rel_tol()),
                   lib.max_iter());
}

Evaluation require_accuracy(const Command& cmd, const Evaluation& v, double x) {
  if (v.abs_err() > cmd.tol * std::max(1.0, std::abs(v.value()))) {
    std::ostringstream msg;
    msg.precision(17);
    msg << cmd.function << " at x = " << x << ": error bound " << v.abs_err()
        << " exceeds --tol " << cmd.tol;
    throw Error(ErrorKind::NonConvergence, msg.str());
  }
  return v;
}

int run_eval(const Command& cmd, PParam p, std::ostream& out) {
  const FunctionEntry& f = lookup(cmd.function);
  const double x = *cmd.x;
  const Evaluation v = require_accuracy(cmd, f.eval(x, p, tolerance_of(cmd)), x);
  switch (cmd.format) {
    case Format::Csv:
      out << "x,value,abs_err\n"
          << csv_number(x) << ',' << csv_number(v.value()) << ',' << csv_number(v.abs_err())
          << '\n';
      break;
    case Format::Json:
      out << json{{"fn", cmd.function}, {"p", p.value()}, {"x", x}, {"value", v.value()},
                  {"abs_err", v.abs_err()}}
                 .dump(2)
          << '\n';
      break;
    case Format::Human:
      out << cmd.function << "(" << shortest(x) << ") = " << shortest(v.value()) << " +- "
          << shortest(v.abs_err()) << "  [p=" << shortest(p.value()) << "]\n";
      break;
  }
  return kExitOk;
}

int run_table(const Command& cmd, PParam p, std::ostream& out) {
  const FunctionEntry& f = lookup(cmd.function);
  const auto [a, b] = table_interval(f, p);
  const std::vector<double> xs = grid_points(cmd.grid, a, b);
  const Tolerance tol = tolerance_of(cmd);
  std::vector<Evaluation> vs;
  vs.reserve(xs.size());
  for (double x : xs) {
    vs.push_back(require_accuracy(cmd, f.eval(x, p, tol), x));
  }
  switch (cmd.format) {
    case Format::Csv:
      out << "x,value,abs_err\n";
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out << csv_number(xs[i]) << ',' << csv_number(vs[i].value()) << ','
            << csv_number(vs[i].abs_err()) << '\n';
      }
      break;
    case Format::Json: {
      json rows = json::array();
      for (std::size_t i = 0; i < xs.size(); ++i) {
        rows.push_back({{"x", xs[i]}, {"value", vs[i].value()}, {"abs_err", vs[i].abs_err()}});
      }
      out << json{{"fn", cmd.function}, {"p", p.value()}, {"rows", std::move(rows)}}.dump(2)
          << '\n';
      break;
    }
    case Format::Human:
      out << cmd.function << " p=" << shortest(p.value()) << " on (" << shortest(a) << ", "
          << shortest(b) << "), " << xs.size() << " points\n";
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out << shortest(xs[i]) << "  " << shortest(vs[i].value()) << " +- "
            << shortest(vs[i].abs_err()) << '\n';
      }
      break;
  }
  return kExitOk;
}

int run_constants(const Command& cmd, PParam p, std::ostream& out) {
  const Evaluation pi = require_accuracy(cmd, pi_p(p, tolerance_of(cmd)), 1.0);
  const double alpha = 1.0 / (1.0 + p.value());
  std::optional<Evaluation> beta;
  if (p.value() >= 2.0) {
    beta = sharp_constants(p).beta;
  }
  switch (cmd.format) {
    case Format::Csv:
      out << "name,value,abs_err\n"
          << "pi_p," << csv_number(pi.value()) << ',' << csv_number(pi.abs_err()) << '\n'
          << "alpha," << csv_number(alpha) << ",0\n";
      if (beta) {
        out << "beta," << csv_number(beta->value()) << ',' << csv_number(beta->abs_err())
            << '\n';
      }
      break;
    case Format::Json: {
      json j = {{"p", p.value()},
                {"pi_p", {{"value", pi.value()}, {"abs_err", pi.abs_err()}}},
                {"alpha", alpha}};
      if (beta) {
        j["beta"] = {{"value", beta->value()}, {"abs_err", beta->abs_err()}};
      }
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Human:
      out << "pi_p=" << shortest(pi.value()) << " +- " << shortest(pi.abs_err()) << '\n'
          << "alpha=" << shortest(alpha) << '\n';
      if (beta) {
        out << "beta=" << shortest(beta->value()) << " +- " << shortest(beta->abs_err())
            << '\n';
      } else {
        out << "beta: stated only for p >= 2\n";
      }
      break;
  }
  return kExitOk;
}

int run_verify(const Command& cmd, PParam p, std::ostream& out) {
  VerifyOptions opt;
  opt.tol = tolerance_of(cmd);
  opt.allow_exploratory = true;
  std::vector<FunctionId> ids;
  if (cmd.claim == "all") {
    ids.assign(kAllFunctionIds.begin(), kAllFunctionIds.end());
  } else {
    ids.push_back(*parse_function_id(cmd.claim));
  }
  std::vector<VerificationReport> reports;
  for (FunctionId id : ids) {
    reports.push_back(verify_claim(id, p, cmd.grid, opt));
  }

  int passed = 0, failed = 0, exploratory = 0;
  for (const VerificationReport& r : reports) {
    if (!r.asserted) {
      ++exploratory;
    } else if (r.passed) {
      ++passed;
    } else {
      ++failed;
    }
  }
  const bool single = cmd.claim != "all";
  switch (cmd.format) {
    case Format::Json: {
      if (single) {
        out << detail::report_json(reports.front()).dump(2) << '\n';
        break;
      }
      json list = json::array();
      for (const VerificationReport& r : reports) {
        list.push_back(detail::report_json(r));
      }
      json summary = {{"p", p.value()},       {"claims", reports.size()},
                      {"passed", passed},     {"failed", failed},
                      {"exploratory", exploratory}, {"all_passed", failed == 0}};
      out << json{{"reports", std::move(list)}, {"summary", std::move(summary)}}.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      detail::write_report_csv_header(out);
      for (const VerificationReport& r : reports) {
        detail::write_report_csv_row(out, r);
      }
      if (!single) {
        out << "SUMMARY," << csv_number(p.value()) << ",all," << (failed == 0 ? "true" : "false")
            << ",,,,,\n";
      }
      break;
    case Format::Human:
      for (const VerificationReport& r : reports) {
        detail::write_report_human(out, r);
      }
      if (!single) {
        out << "summary: p=" << shortest(p.value()) << ", " << reports.size() << " claims, "
            << passed << " passed, " << failed << " failed, " << exploratory
            << " exploratory\n";
      }
      break;
  }
  return failed == 0 ? kExitOk : kExitVerificationFailed;
}

int exit_code_for(const Error& e) {
  switch (e.cause()) {
    case ErrorKind::NonConvergence:
    case ErrorKind::NotBracketed:
      return kExitNonConvergence;
    default:
      return kExitUsage;
  }
}

}  // namespace

int execute(const Command& cmd, std::ostream& out) {
  const PParam p(cmd.p);
  switch (cmd.verb) {
    case Verb::Eval: return run_eval(cmd, p, out);
    case Verb::Table: return run_table(cmd, p, out);
    case Verb::Constants: return run_constants(cmd, p, out);
    case Verb::Verify: return run_verify(cmd, p, out);
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const std::optional<Command> cmd = parse_command(args, out);
    if (!cmd) {
      return kExitOk;
    }
    return execute(*cmd, out);
  } catch (const UsageError& e) {
    err << "ptrig: " << e.what() << "\nrun 'ptrig --help' for usage\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "ptrig: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

}  // namespace ptrig::cli
