#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pnmcts/harness/csv.hpp"
#include "pnmcts/harness/match.hpp"

namespace pnmcts::harness {

// Parameter grid read from a small "key = value" text format:
//
//   # LOA 7x7, three PN weights
//   game    = loa7
//   a       = pnmcts
//   b       = mcts
//   a.Cpn   = [0.1, 1.0, 1e6]
//   a.C     = 1.4142
//   b.C     = 1.4142
//   games   = 100
//   time    = 0.25          # or: sims = 1000
//   seed    = 42
//
// Any value may be a bracketed list; the grid is the Cartesian product of all
// lists, first key varying slowest.
struct SweepConfig {
  std::vector<std::pair<std::string, std::vector<std::string>>> entries;
  int threads = 1;

  /// Throws std::invalid_argument with a line number on syntax errors, empty
  /// lists, duplicate or unknown keys.
  static SweepConfig parse(std::string_view text);
  std::vector<std::map<std::string, std::string>> cells() const;
};

/// Builds and validates the match of one grid cell.
MatchSpec match_from_cell(const std::map<std::string, std::string>& cell);

struct SweepOutcome {
  std::vector<SeriesRow> executed;
  std::size_t skipped = 0;
};

/// Runs every cell not already present in `out_path` and appends its row.
/// All cells are validated before the first game is played.
SweepOutcome run_sweep(const SweepConfig& config, const std::string& out_path,
                       const std::function<void(const SeriesRow&)>& on_row = {});

}  // namespace pnmcts::harness
