#include "pnmcts/harness/bench.hpp"

#include <variant>

#include "pnmcts/games/registry.hpp"

namespace pnmcts::harness {

namespace {

BenchEntry run_once(const games::AnyGame& game, double seconds, const AgentSpec& agent) {
  return std::visit(
      [&](const auto& g) {
        const auto report = think(g, g.initial_state(), agent, search::Budget::time(seconds), 1);
        BenchEntry e;
        e.agent = agent_name(agent.kind);
        e.simulations = report.simulations;
        e.seconds = report.seconds;
        e.rate = report.seconds > 0 ? static_cast<double>(report.simulations) / report.seconds : 0.0;
        e.truncated = report.node_cap_hit;
        return e;
      },
      game);
}

}  // namespace

BenchResult bench_overhead(const std::string& game_id, double seconds, const AgentSpec& a, const AgentSpec& b) {
  const auto game = games::make_game(game_id);
  BenchResult result;
  result.a = run_once(game, seconds, a);
  result.b = run_once(game, seconds, b);
  result.ratio = result.b.rate > 0 ? result.a.rate / result.b.rate : 0.0;
  return result;
}

}  // namespace pnmcts::harness
