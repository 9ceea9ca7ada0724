#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "entkit/cli_core.hpp"

namespace {

using entkit::cli::Command;
using entkit::cli::Format;
using entkit::cli::RunConfig;

void add_state_options(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--state", config.state.name,
                  "state name: bell, ghz, w, max-entangled, paper-223, "
                  "antisymmetric-qutrit, paper-2223, haar-random, random-density");
  cmd->add_option("--t", config.state.t, "family parameter for paper-2223");
  cmd->add_option("--n", config.state.n, "party count for ghz/w");
  cmd->add_option("--d", config.state.d, "local dimension for ghz/max-entangled");
  cmd->add_option("--profile", config.state.profile,
                  "local dimensions for random states, e.g. --profile 2 2 3")
      ->delimiter(',');
  cmd->add_option("--rank", config.state.rank, "rank for random-density");
  cmd->add_option("--state-seed", config.state.seed, "seed for random states");
}

void add_common_options(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--seed", config.seed, "run seed (env ENTKIT_SEED overrides the default)");
  cmd->add_option("--restarts", config.restarts, "optimizer restarts (0 = library default)");
  cmd->add_option("--output", config.output_path, "write rows to a file instead of stdout");
  std::map<std::string, Format> formats{{"csv", Format::csv},
                                        {"json-lines", Format::jsonl},
                                        {"jsonl", Format::jsonl},
                                        {"human", Format::human}};
  cmd->add_option("--format", config.format, "output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  cmd->add_flag_callback("--serial", [&config] { config.exec = entkit::Exec::serial; },
                         "run data-parallel loops on one thread");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entkit: concurrence-family entanglement measures and weighted "
               "monogamy bound certification for multipartite states"};
  app.require_subcommand(1);

  RunConfig config;
  if (const char* env_seed = std::getenv("ENTKIT_SEED")) {
    config.seed = std::strtoull(env_seed, nullptr, 10);
  }

  auto* measure = app.add_subcommand("measure", "compute a single quantity of a state");
  add_state_options(measure, config);
  add_common_options(measure, config);
  measure->add_option("--cut", config.cut, "bipartite cut, e.g. 0,2|1 (default 0|rest)");
  measure->add_option("--quantity", config.quantity,
                      "concurrence, coa, coa-upper, wootters, purity, c4");

  auto* check = app.add_subcommand("check", "evaluate a monogamy bound on a state");
  add_state_options(check, config);
  add_common_options(check, config);
  check->add_option("inequality", config.inequality,
                    "theorem1, theorem2, corollary, theorem3, theorem4, ckw, dual-coa")
      ->required();
  check->add_option("--x", config.xs, "weight point(s) for theorem1/theorem2")
      ->delimiter(',');
  check->add_option("--p", config.p, "corollary weights, e.g. --p 0.5,0.3,0.2")
      ->delimiter(',');
  check->add_flag("--optimize", config.optimize, "vertex-optimize the weight point");
  check->add_flag("--reference-weights", config.reference_weights,
                  "theorem4: the weight choice tailored to the paper-2223 family");
  check->add_flag("--as-density", config.as_density,
                  "treat a pure input through the mixed-state route");

  auto* scan = app.add_subcommand("scan", "scan the paper-2223 family over a t grid");
  add_state_options(scan, config);
  add_common_options(scan, config);
  scan->add_option("--grid-start", config.grid_start, "first t (default 0.33)");
  scan->add_option("--grid-stop", config.grid_stop, "last t (default 1.00)");
  scan->add_option("--grid-step", config.grid_step, "t increment (default 0.01)");
  scan->add_flag("--optimize", config.optimize,
                 "append a vertex-optimized bound column");

  auto* fuzz = app.add_subcommand("fuzz", "run a property suite on random states");
  add_state_options(fuzz, config);
  add_common_options(fuzz, config);
  fuzz->add_option("--suite", config.suite,
                   "lemma1, theorem1, theorem2, ckw, dual-coa, t4-consistency")
      ->required();
  fuzz->add_option("--count", config.count, "number of random states");
  fuzz->add_option("--replay-dir", config.replay_dir,
                   "directory for violation replay files");

  auto* reproduce =
      app.add_subcommand("reproduce", "recompute the reference value table");
  add_common_options(reproduce, config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage problems exit 2
  }

  if (measure->parsed()) config.command = Command::measure;
  if (check->parsed()) config.command = Command::check;
  if (scan->parsed()) {
    config.command = Command::scan;
    if (config.state.name.empty()) config.state.name = "paper-2223";
    if (config.format == Format::human) config.format = Format::csv;
  }
  if (fuzz->parsed()) config.command = Command::fuzz;
  if (reproduce->parsed()) config.command = Command::reproduce;

  if ((measure->parsed() || check->parsed()) && config.state.name.empty()) {
    std::cerr << "error: --state is required\n";
    return 2;
  }

  return entkit::cli::run(config, std::cout, std::cerr);
}
