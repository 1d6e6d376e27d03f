#include <algorithm>
#include <map>
#include <ostream>

#include "CLI11.hpp"
#include "ptrig/cli.hpp"

namespace ptrig::cli {

const std::vector<std::string>& function_names() {
  static const std::vector<std::string> names = {
      "sin_p",   "cos_p",   "tan_p",   "arcsin_p", "sinh_p",   "cosh_p",
      "tanh_p",  "arsinh_p", "d_sin_p", "d_cos_p",  "d_sinh_p", "d_cosh_p",
      "d_tanh_p", "thm1_f", "thm2_g",  "lem22_f",  "lem23_g",  "lem24_gap",
      "lem24_displayed_gap"};
  return names;
}

namespace {

// Options every verb shares.
struct Shared {
  double p = 0.0;
  std::string format = "human";
  double tol = 1e-10;
};

void add_shared(CLI::App& sub, Shared& s) {
  sub.add_option("--p", s.p, "family parameter, p > 1")->required();
  sub.add_option("--format", s.format, "output format")
      ->check(CLI::IsMember({"csv", "json", "human"}));
  sub.add_option("--tol", s.tol, "absolute and relative tolerance of the evaluators")
      ->check(CLI::Range(0.0, 1.0));
}

void add_grid(CLI::App& sub, int& n, std::string& spacing) {
  sub.add_option("--n", n, "number of grid points")->check(CLI::PositiveNumber);
  sub.add_option("--spacing", spacing, "grid spacing")
      ->check(CLI::IsMember({"uniform", "log", "cosine"}));
}

}  // namespace

std::optional<Command> parse_command(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Generalized trigonometric functions and inequality verification", "ptrig"};
  app.require_subcommand(1);

  Shared eval_s, table_s, const_s, verify_s;
  std::string eval_fn, table_fn, claim;
  double x = 0.0;
  int table_n = 200, verify_n = 200;
  std::string table_spacing = "cosine", verify_spacing = "cosine";

  CLI::App* eval = app.add_subcommand("eval", "evaluate one function at one point");
  add_shared(*eval, eval_s);
  eval->add_option("--fn", eval_fn, "function name")
      ->required()
      ->check(CLI::IsMember(function_names()));
  eval->add_option("--x", x, "argument")->required();

  CLI::App* table = app.add_subcommand("table", "tabulate a function on a grid");
  add_shared(*table, table_s);
  table->add_option("--fn", table_fn, "function name")
      ->required()
      ->check(CLI::IsMember(function_names()));
  add_grid(*table, table_n, table_spacing);

  CLI::App* constants = app.add_subcommand("constants", "print pi_p, alpha and beta");
  add_shared(*constants, const_s);

  CLI::App* verify = app.add_subcommand("verify", "verify a claim on a grid");
  add_shared(*verify, verify_s);
  verify->add_option("--claim", claim, "claim tag or 'all'")->required();
  add_grid(*verify, verify_n, verify_spacing);

  // CLI11 consumes a vector back to front.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  static const std::map<std::string, Format> formats = {
      {"csv", Format::Csv}, {"json", Format::Json}, {"human", Format::Human}};
  Command cmd;
  const Shared* s = nullptr;
  if (eval->parsed()) {
    cmd.verb = Verb::Eval;
    cmd.function = eval_fn;
    cmd.x = x;
    s = &eval_s;
  } else if (table->parsed()) {
    cmd.verb = Verb::Table;
    cmd.function = table_fn;
    cmd.grid.n = table_n;
    cmd.grid.spacing = *parse_spacing(table_spacing);
    s = &table_s;
  } else if (constants->parsed()) {
    cmd.verb = Verb::Constants;
    s = &const_s;
  } else {
    cmd.verb = Verb::Verify;
    cmd.claim = claim;
    if (claim != "all" && !parse_function_id(claim)) {
      throw UsageError("unknown claim '" + claim + "'");
    }
    cmd.grid.n = verify_n;
    cmd.grid.spacing = *parse_spacing(verify_spacing);
    s = &verify_s;
  }
  cmd.p = s->p;
  cmd.format = formats.at(s->format);
  cmd.tol = s->tol;
  if (!(cmd.tol > 0.0 && cmd.tol < 1.0)) {
    throw UsageError("--tol must lie in (0, 1)");
  }
  return cmd;
}

}  // namespace ptrig::cli
