// Command-line driver: agent-vs-agent matches, overhead benchmark, parameter
// sweeps and the standalone proof-number solver.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <variant>

#include "pnmcts/core/game.hpp"
#include "pnmcts/games/registry.hpp"
#include "pnmcts/harness/bench.hpp"
#include "pnmcts/harness/csv.hpp"
#include "pnmcts/harness/match.hpp"
#include "pnmcts/harness/sweep.hpp"
#include "pnmcts/search/pns.hpp"

namespace {

using namespace pnmcts;

constexpr int kConfigError = 2;
constexpr int kForfeitError = 3;

const char* const kAgentParams[] = {"C", "Cpn", "playout-cap", "max-nodes", "expand-one"};

// Agent kind plus the raw per-agent parameters given on the command line.
struct AgentArgs {
  std::string kind;
  std::map<std::string, std::string> params;

  void attach(CLI::App& app, const std::string& prefix) {
    for (const char* key : kAgentParams) {
      app.add_option("--" + prefix + "." + key, params[key], std::string("agent ") + prefix + " " + key);
    }
  }

  harness::AgentSpec build() const {
    harness::AgentSpec spec;
    spec.kind = harness::parse_agent_kind(kind);
    for (const auto& [key, value] : params) {
      if (!value.empty()) harness::set_agent_param(spec, key, value);
    }
    return spec;
  }
};

void print_series(const harness::MatchSpec& spec, const harness::SeriesResult& r) {
  std::printf("%s: %s vs %s, %d games: W %d D %d L %d forfeits %d  win rate %.1f%% (+-%.2f)\n", spec.game.c_str(),
              harness::agent_name(spec.a.kind).c_str(), harness::agent_name(spec.b.kind).c_str(), r.games, r.wins,
              r.draws, r.losses, r.forfeits, 100.0 * r.win_rate, 100.0 * r.ci95);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PN-MCTS workbench: matches, benchmarks, sweeps and proof-number solving"};
  app.require_subcommand(1);

  // match
  auto* match = app.add_subcommand("match", "play a series between two agents");
  std::string match_game;
  AgentArgs match_a{"pnmcts", {}};
  AgentArgs match_b{"mcts", {}};
  int match_games = 100;
  double match_time = 0.0;
  std::uint64_t match_sims = 0;
  std::uint64_t match_seed = 42;
  int match_threads = 1;
  std::string match_out;
  bool match_verbose = false;
  match->add_option("--game", match_game, "game id")->required();
  match->add_option("--a", match_a.kind, "agent A (pnmcts|mcts)");
  match->add_option("--b", match_b.kind, "agent B (pnmcts|mcts)");
  match->add_option("--games", match_games, "games in the series");
  auto* time_opt = match->add_option("--time", match_time, "seconds per move");
  auto* sims_opt = match->add_option("--sims", match_sims, "simulations per move");
  time_opt->excludes(sims_opt);
  match->add_option("--seed", match_seed, "master seed");
  match->add_option("--threads", match_threads, "games played concurrently");
  match->add_option("--out", match_out, "CSV file to append the series row to");
  match->add_flag("--verbose", match_verbose, "print every game");
  match_a.attach(*match, "a");
  match_b.attach(*match, "b");

  // bench
  auto* bench = app.add_subcommand("bench", "simulations per second of two agents from the initial position");
  std::string bench_game;
  double bench_seconds = 30.0;
  AgentArgs bench_a{"pnmcts", {}};
  AgentArgs bench_b{"mcts", {}};
  bench->add_option("--game", bench_game, "game id")->required();
  bench->add_option("--seconds", bench_seconds, "wall time per agent");
  bench->add_option("--a", bench_a.kind, "first agent (default pnmcts)");
  bench->add_option("--b", bench_b.kind, "second agent (default mcts)");
  bench_a.attach(*bench, "a");
  bench_b.attach(*bench, "b");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "run a parameter grid, resuming an existing CSV");
  std::string sweep_config;
  std::string sweep_out = "sweep.csv";
  int sweep_threads = 0;
  sweep->add_option("--config", sweep_config, "grid description file")->required();
  sweep->add_option("--out", sweep_out, "CSV output (existing rows are skipped)");
  sweep->add_option("--threads", sweep_threads, "override the config's thread count");

  // solve
  auto* solve = app.add_subcommand("solve", "proof-number search for a forced win");
  std::string solve_game;
  std::size_t solve_nodes = 1000000;
  std::string solve_position;
  std::string solve_goal = "to-move";
  solve->add_option("--game", solve_game, "game id")->required();
  solve->add_option("--max-nodes", solve_nodes, "node budget");
  solve->add_option("--position", solve_position, "moves from the initial position, space or comma separated");
  solve->add_option("--goal", solve_goal, "player to prove a win for: to-move|first|second");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*match) {
      harness::MatchSpec spec;
      spec.game = match_game;
      spec.a = match_a.build();
      spec.b = match_b.build();
      spec.games = match_games;
      spec.seed = match_seed;
      if (*time_opt) spec.budget = search::Budget::time(match_time);
      else if (*sims_opt) spec.budget = search::Budget::sims(match_sims);
      else spec.budget = search::Budget::time(1.0);
      harness::validate(spec);
      harness::ProgressFn progress;
      if (match_verbose) {
        progress = [](const harness::GameRecord& g) {
          static const char* names[] = {"A wins", "draw", "B wins", "forfeit"};
          std::printf("game %d (A %s): %s after %u plies\n", g.index, g.a_first ? "first" : "second",
                      names[static_cast<int>(g.result)], g.plies);
          std::fflush(stdout);
        };
      }
      const auto result = harness::run_series(spec, match_threads, progress);
      print_series(spec, result);
      if (!match_out.empty()) harness::append_row(match_out, harness::make_row(spec, result));
      for (const auto& g : result.records) {
        if (g.result == harness::GameResult::kForfeit) {
          std::fprintf(stderr, "game %d: agent %c forfeited: %s\n", g.index, g.forfeit_by, g.forfeit_reason.c_str());
        }
      }
      return result.forfeits > 0 ? kForfeitError : 0;
    }

    if (*bench) {
      const auto r = harness::bench_overhead(bench_game, bench_seconds, bench_a.build(), bench_b.build());
      std::printf("%-8s %12s %10s %14s %s\n", "agent", "simulations", "seconds", "sims/second", "");
      for (const auto* e : {&r.a, &r.b}) {
        std::printf("%-8s %12llu %10.2f %14.2f %s\n", e->agent.c_str(), static_cast<unsigned long long>(e->simulations),
                    e->seconds, e->rate, e->truncated ? "(node cap reached)" : "");
      }
      std::printf("ratio %s/%s = %.3f\n", r.a.agent.c_str(), r.b.agent.c_str(), r.ratio);
      return 0;
    }

    if (*sweep) {
      std::ifstream in(sweep_config);
      if (!in) throw std::invalid_argument("cannot read " + sweep_config);
      std::stringstream text;
      text << in.rdbuf();
      auto config = harness::SweepConfig::parse(text.str());
      if (sweep_threads > 0) config.threads = sweep_threads;
      const auto outcome = harness::run_sweep(config, sweep_out, [](const harness::SeriesRow& row) {
        std::printf("%s\n", harness::render_row(row).c_str());
        std::fflush(stdout);
      });
      std::printf("%zu cells run, %zu already present in %s\n", outcome.executed.size(), outcome.skipped,
                  sweep_out.c_str());
      for (const auto& row : outcome.executed) {
        if (row.forfeits > 0) return kForfeitError;
      }
      return 0;
    }

    if (*solve) {
      const auto game = games::make_game(solve_game);
      return std::visit(
          [&](const auto& g) {
            const auto state = replay(g, solve_position);
            Player goal = state.to_move();
            if (solve_goal == "first") goal = Player::kFirst;
            else if (solve_goal == "second") goal = Player::kSecond;
            else if (solve_goal != "to-move") throw std::invalid_argument("--goal must be to-move, first or second");
            const auto r = search::solve(g, state, goal, solve_nodes);
            std::printf("verdict %s (goal: %s wins)\nnodes %zu\nexpansions %llu\nroot pn %s dpn %s\nelapsed %.3f s\n",
                        std::string(search::to_string(r.verdict)).c_str(), std::string(to_string(goal)).c_str(),
                        r.nodes, static_cast<unsigned long long>(r.expansions), r.root.pn.to_string().c_str(),
                        r.root.dpn.to_string().c_str(), r.seconds);
            return 0;
          },
          game);
    }
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kConfigError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
