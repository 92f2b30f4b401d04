#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pnmcts/harness/match.hpp"

namespace pnmcts::harness {

inline constexpr std::string_view kCsvHeader =
    "game,agent_a,agent_b,params_a,params_b,budget_kind,budget_value,games,wins_a,draws,losses_a,win_rate_a,ci95,"
    "forfeits,seed";

struct SeriesRow {
  std::string game;
  std::string agent_a;
  std::string agent_b;
  std::string params_a;
  std::string params_b;
  std::string budget_kind;
  double budget_value = 0.0;
  int games = 0;
  int wins_a = 0;
  int draws = 0;
  int losses_a = 0;
  double win_rate_a = 0.0;
  double ci95 = 0.0;
  int forfeits = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const SeriesRow&, const SeriesRow&) = default;
};

SeriesRow make_row(const MatchSpec& spec, const SeriesResult& result);

std::string render_row(const SeriesRow& row);
/// Throws std::invalid_argument on malformed input.
SeriesRow parse_row(std::string_view line);

/// Identity of a sweep cell: every column except the results.
std::string row_key(const SeriesRow& row);

/// Rows of an existing CSV file (header skipped); empty if the file is absent.
std::vector<SeriesRow> read_rows(const std::string& path);
/// Appends a row, writing the header first if the file is new or empty.
void append_row(const std::string& path, const SeriesRow& row);

/// Splits one CSV line, honouring double-quoted fields.
std::vector<std::string> split_csv(std::string_view line);

}  // namespace pnmcts::harness
