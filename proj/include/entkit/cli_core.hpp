#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "entkit/exec.hpp"
#include "entkit/state.hpp"

namespace entkit::cli {

enum class Command { measure, check, scan, fuzz, reproduce };
enum class Format { csv, jsonl, human };

// Named state plus parameters; everything a run touches is reconstructible
// from this record.
struct StateSpec {
  std::string name;            // bell | ghz | w | max-entangled | paper-223 |
                               // antisymmetric-qutrit | paper-2223 |
                               // haar-random | random-density
  double t = 1.0;              // paper-2223 family parameter
  int n = 3;                   // ghz / w party count
  int d = 2;                   // ghz / max-entangled local dimension
  std::vector<int> profile;    // haar-random / random-density
  int rank = 1;                // random-density
  std::uint64_t seed = 1;      // haar-random / random-density
};

struct RunConfig {
  Command command = Command::measure;
  StateSpec state;
  std::string cut;             // "0,2|1"; empty -> default 0|rest
  std::string quantity = "concurrence";
  std::string inequality;      // theorem1..theorem4 | corollary | ckw | dual-coa
  std::vector<double> xs{1.0}; // weight points for theorem1/theorem2
  std::vector<double> p;       // corollary weights
  bool optimize = false;
  bool reference_weights = false;  // theorem4: the 2x2x2x3 family choice
  bool as_density = false;         // force the mixed-state route
  std::uint64_t seed = 12345;
  int restarts = 0;            // 0 -> library default
  double tolerance_override = 0.0;  // 0 -> per-report default
  double grid_start = 0.33, grid_stop = 1.00, grid_step = 0.01;
  std::string suite;           // fuzz suite name
  int count = 100;
  std::string output_path;     // empty -> stdout
  Format format = Format::human;
  std::string replay_dir = ".";
  Exec exec = Exec::parallel;
};

nlohmann::json run_config_to_json(const RunConfig& config);

// Resolved state: exactly one of pure/density is set.
struct ResolvedState {
  std::optional<PureState> pure;
  std::optional<DensityMatrix> density;

  const DimProfile& profile() const;
  DensityMatrix as_density() const;
};

ResolvedState resolve_state(const StateSpec& spec);

// Command entry points; rows go to `out`, diagnostics to `err`.
// Exit codes: 0 success / all satisfied, 1 violation or tolerance failure,
// 2 usage or validation error.
int cmd_measure(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_check(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_scan(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_fuzz(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_reproduce(const RunConfig& config, std::ostream& out, std::ostream& err);

// Dispatches on config.command, honoring config.output_path; maps validation
// failures to exit code 2.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Stable 9-significant-digit decimal formatting used by every emitter.
std::string format_value(double v);

}  // namespace entkit::cli
