#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pnmcts/core/game.hpp"
#include "pnmcts/harness/agent.hpp"
#include "pnmcts/harness/stats.hpp"
#include "pnmcts/search/config.hpp"

namespace pnmcts::harness {

// Agent A plays first in even-numbered games and second in odd ones.
struct MatchSpec {
  std::string game = "loa8";
  AgentSpec a{};
  AgentSpec b{};
  int games = 100;
  search::Budget budget = search::Budget::sims(1000);
  std::uint64_t seed = 42;
};

enum class GameResult { kWinA, kDraw, kLossA, kForfeit };

struct GameRecord {
  int index = 0;
  bool a_first = true;
  std::uint32_t plies = 0;
  GameResult result = GameResult::kDraw;
  std::optional<Outcome> outcome;
  // Set on forfeits: which agent ('A' or 'B') and why.
  char forfeit_by = 0;
  std::string forfeit_reason;
  std::vector<std::uint64_t> simulations;  // per move, both agents interleaved
  std::vector<std::string> moves;

  friend bool operator==(const GameRecord&, const GameRecord&) = default;
};

struct SeriesResult {
  int games = 0;
  int wins = 0;
  int draws = 0;
  int losses = 0;
  int forfeits = 0;
  double win_rate = 0.0;  // over non-forfeited games, draws count half
  double ci95 = 0.0;
  std::vector<GameRecord> records;
};

template <Game G>
GameRecord play_game(const G& game, const MatchSpec& spec, int index) {
  GameRecord record;
  record.index = index;
  record.a_first = index % 2 == 0;
  auto state = game.initial_state();
  while (!game.terminal_outcome(state)) {
    const bool a_to_move = (state.to_move() == Player::kFirst) == record.a_first;
    const AgentSpec& agent = a_to_move ? spec.a : spec.b;
    const auto seed = derive_seed(spec.seed, static_cast<std::uint64_t>(index), state.move_count(), a_to_move ? 0 : 1);
    const auto report = think(game, state, agent, spec.budget, seed);
    if (auto reason = game.why_illegal(state, report.move)) {
      record.result = GameResult::kForfeit;
      record.forfeit_by = a_to_move ? 'A' : 'B';
      record.forfeit_reason = game.render_move(report.move) + ": " + *reason;
      record.plies = state.move_count();
      return record;
    }
    record.simulations.push_back(report.simulations);
    record.moves.push_back(game.render_move(report.move));
    state = game.play(state, report.move);
  }
  record.plies = state.move_count();
  record.outcome = game.terminal_outcome(state);
  const Player a_seat = record.a_first ? Player::kFirst : Player::kSecond;
  const int r = reward_for(*record.outcome, a_seat);
  record.result = r > 0 ? GameResult::kWinA : r < 0 ? GameResult::kLossA : GameResult::kDraw;
  return record;
}

/// Plays one game of a series on the game named by spec.game.
GameRecord play_game(const MatchSpec& spec, int index);

/// Folds records (in index order) into totals.
SeriesResult summarize(std::vector<GameRecord> records);

using ProgressFn = std::function<void(const GameRecord&)>;

/// Plays spec.games games on `threads` workers. Records come back ordered by
/// game index whatever the schedule.
SeriesResult run_series(const MatchSpec& spec, int threads = 1, const ProgressFn& progress = {});

/// Throws std::invalid_argument if the spec names an unknown game or has a
/// nonpositive game count.
void validate(const MatchSpec& spec);

}  // namespace pnmcts::harness
