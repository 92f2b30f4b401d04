#include "pnmcts/harness/match.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <variant>

#include "pnmcts/games/registry.hpp"

namespace pnmcts::harness {

void validate(const MatchSpec& spec) {
  if (!games::is_game_id(spec.game)) games::make_game(spec.game);  // throws with the list of ids
  if (spec.games < 1) throw std::invalid_argument("games per series must be positive");
  spec.a.config.validate();
  spec.b.config.validate();
}

GameRecord play_game(const MatchSpec& spec, int index) {
  const auto game = games::make_game(spec.game);
  return std::visit([&](const auto& g) { return play_game(g, spec, index); }, game);
}

SeriesResult summarize(std::vector<GameRecord> records) {
  SeriesResult result;
  result.games = static_cast<int>(records.size());
  for (const auto& r : records) {
    switch (r.result) {
      case GameResult::kWinA: ++result.wins; break;
      case GameResult::kDraw: ++result.draws; break;
      case GameResult::kLossA: ++result.losses; break;
      case GameResult::kForfeit: ++result.forfeits; break;
    }
  }
  const int scored = result.games - result.forfeits;
  result.win_rate = win_rate(result.wins, result.draws, scored);
  result.ci95 = scored > 0 ? confidence_interval(result.win_rate, scored) : 0.0;
  result.records = std::move(records);
  return result;
}

SeriesResult run_series(const MatchSpec& spec, int threads, const ProgressFn& progress) {
  validate(spec);
  std::vector<GameRecord> records(static_cast<std::size_t>(spec.games));
  std::atomic<int> next{0};
  std::mutex progress_mutex;
  std::exception_ptr failure;
  auto worker = [&] {
    for (int i = next++; i < spec.games; i = next++) {
      try {
        records[static_cast<std::size_t>(i)] = play_game(spec, i);
      } catch (...) {
        const std::lock_guard lock(progress_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
      if (progress) {
        const std::lock_guard lock(progress_mutex);
        progress(records[static_cast<std::size_t>(i)]);
      }
    }
  };
  const int n = std::max(1, std::min(threads, spec.games));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return summarize(std::move(records));
}

}  // namespace pnmcts::harness
