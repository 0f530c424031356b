#include "eur/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

#include <CLI11.hpp>

#include <eur/error.hpp>

#include "eur/commands.hpp"

namespace eur::cli {
namespace {

std::optional<std::string> env(const char* name) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::string(v);
}

double parse_env_tol(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !(v > 0.0) || !std::isfinite(v)) {
    throw DomainError("EUR_TOL must be a positive number, got '" + text + "'");
  }
  return v;
}

int parse_env_grid(const std::string& text) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || v < 100 || v > 1000000) {
    throw DomainError("EUR_GRID must be an integer in [100, 1000000], got '" + text + "'");
  }
  return static_cast<int>(v);
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entropic uncertainty bounds for two observables", "eur"};
  app.require_subcommand(1);

  double c = 0.0;
  bool bits = false;
  bool json = false;

  auto* eval = app.add_subcommand("eval", "Evaluate every bound at one overlap");
  eval->add_option("--c", c, "Overlap in (0, 1]")->required();
  eval->add_flag("--bits", bits, "Report entropies in bits instead of nats");
  eval->add_flag("--json", json, "Emit a JSON object");

  auto* constants = app.add_subcommand("constants", "Print the solved constants c* and c-dagger");
  constants->add_flag("--json", json, "Emit a JSON object");

  SweepRange range{};
  std::optional<std::string> out_path;
  auto* sweep = app.add_subcommand("sweep", "Tabulate the bounds as CSV");
  sweep->add_option("--from", range.from, "First overlap")->required();
  sweep->add_option("--to", range.to, "Last overlap (inclusive)")->required();
  sweep->add_option("--step", range.step, "Overlap increment")->required();
  sweep->add_option("--out", out_path, "Output file (default: stdout)");
  sweep->add_flag("--bits", bits, "Report entropies in bits instead of nats");

  VerifyOptions vopts;
  std::optional<double> verify_c;
  std::vector<double> c_list;
  std::optional<double> tol;
  std::optional<int> grid;
  auto* verify = app.add_subcommand("verify", "Run an oracle verification suite");
  verify->add_option("--suite", vopts.suite, "Suite to run")
      ->required()
      ->check(CLI::IsMember({"grid", "qubit", "shape", "random", "critique", "all"}));
  verify->add_option("--c", verify_c, "Single overlap to check");
  verify->add_option("--c-list", c_list, "Comma-separated overlaps to check")->delimiter(',');
  verify->add_option("--tol", tol, "Tolerance (grid, qubit, random); env EUR_TOL");
  verify->add_option("--grid", grid, "Grid points per axis for the grid suite; env EUR_GRID");
  verify->add_option("--seed", vopts.seed, "Seed for the random suite");

  auto* critique = app.add_subcommand("critique", "Check the stationary angles of the trigonometric equation");
  critique->add_option("--c", c, "Overlap in (0, 1/sqrt2)")->required();
  critique->add_flag("--json", json, "Emit a JSON object");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kDomain;
  }

  if (eval->parsed()) return cmd_eval(c, bits, json, out);
  if (constants->parsed()) return cmd_constants(json, out);
  if (sweep->parsed()) return cmd_sweep(range, out_path, bits, out);
  if (critique->parsed()) return cmd_critique(c, json, out);

  if (verify_c) vopts.c_values.push_back(*verify_c);
  vopts.c_values.insert(vopts.c_values.end(), c_list.begin(), c_list.end());
  if (vopts.suite == "all" && !vopts.c_values.empty()) {
    throw DomainError("--c and --c-list cannot be combined with --suite all");
  }
  if (tol) {
    vopts.tol = tol;
  } else if (auto e = env("EUR_TOL")) {
    vopts.tol = parse_env_tol(*e);
  }
  if (vopts.tol && !(*vopts.tol > 0.0)) throw DomainError("--tol must be positive");
  if (grid) {
    if (*grid < 100) throw DomainError("--grid must be at least 100");
    vopts.grid = *grid;
  } else if (auto e = env("EUR_GRID")) {
    vopts.grid = parse_env_grid(*e);
  }
  return cmd_verify(vopts, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kConvergence;
  } catch (const VerificationError& e) {
    err << "error: " << e.what() << '\n';
    return kVerification;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
}

}  // namespace eur::cli
