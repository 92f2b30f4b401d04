#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "pnmcts/games/registry.hpp"
#include "pnmcts/harness/agent.hpp"
#include "pnmcts/harness/bench.hpp"
#include "pnmcts/harness/csv.hpp"
#include "pnmcts/harness/match.hpp"
#include "pnmcts/harness/stats.hpp"
#include "pnmcts/harness/sweep.hpp"

using namespace pnmcts;
using namespace pnmcts::harness;

namespace {

MatchSpec quick_spec(const std::string& game, int games, std::uint64_t sims, std::uint64_t seed) {
  MatchSpec spec;
  spec.game = game;
  spec.a.kind = AgentKind::kPnMcts;
  spec.b.kind = AgentKind::kMcts;
  spec.games = games;
  spec.budget = search::Budget::sims(sims);
  spec.seed = seed;
  return spec;
}

MatchSpec mirror_spec(const std::string& game, int games, std::uint64_t sims, std::uint64_t seed) {
  auto spec = quick_spec(game, games, sims, seed);
  spec.a.kind = AgentKind::kMcts;
  return spec;
}

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name) : path(std::filesystem::temp_directory_path() / name) {
    std::filesystem::remove(path);
  }
  ~TempFile() { std::filesystem::remove(path); }
  std::string str() const { return path.string(); }
};

// Knightthrough whose referee rejects every move after the third ply, so the
// agent to move at ply 3 forfeits.
struct StrictKnightthrough : games::Knightthrough {
  std::optional<std::string> why_illegal(const State& s, const Move& m) const {
    if (s.move_count() >= 3) return std::string("refused by the referee");
    return games::Knightthrough::why_illegal(s, m);
  }
};

}  // namespace

TEST_CASE("confidence interval examples") {
  CHECK(std::abs(confidence_interval(0.652, 250) - 0.0590) <= 0.0001);
  CHECK(std::abs(confidence_interval(0.924, 250) - 0.0328) <= 0.0001);
  CHECK(confidence_interval(0.0, 100) == 0.0);
  CHECK(confidence_interval(1.0, 100) == 0.0);
  CHECK(confidence_interval(0.5, 100) == doctest::Approx(0.098));
  CHECK_THROWS_AS(confidence_interval(0.5, 0), std::invalid_argument);
  CHECK_THROWS_AS(confidence_interval(1.5, 10), std::invalid_argument);
}

TEST_CASE("win rate counts draws as half") {
  CHECK(win_rate(3, 2, 10) == doctest::Approx(0.4));
  CHECK(win_rate(0, 0, 0) == 0.0);
  CHECK(win_rate(5, 0, 5) == 1.0);
}

TEST_CASE("seeds are deterministic and spread") {
  CHECK(derive_seed(42, 3, 7, 0) == derive_seed(42, 3, 7, 0));
  std::set<std::uint64_t> seen;
  for (std::uint64_t g = 0; g < 20; ++g) {
    for (std::uint64_t ply = 0; ply < 20; ++ply) {
      for (std::uint64_t seat = 0; seat < 2; ++seat) seen.insert(derive_seed(42, g, ply, seat));
    }
  }
  CHECK(seen.size() == 800);
  CHECK(derive_seed(1, 0, 0, 0) != derive_seed(2, 0, 0, 0));
}

TEST_CASE("agent parameters") {
  AgentSpec pn{AgentKind::kPnMcts, {}};
  set_agent_param(pn, "Cpn", "1e6");
  set_agent_param(pn, "C", "1.4142");
  set_agent_param(pn, "playout-cap", "250");
  set_agent_param(pn, "max-nodes", "1000");
  set_agent_param(pn, "expand-one", "true");
  CHECK(pn.config.pn_weight == 1e6);
  CHECK(pn.config.exploration == 1.4142);
  CHECK(pn.config.playout_cap == 250);
  CHECK(pn.config.max_nodes == 1000);
  CHECK(pn.config.expand_one);
  CHECK_THROWS_AS(set_agent_param(pn, "bogus", "1"), std::invalid_argument);
  CHECK_THROWS_AS(set_agent_param(pn, "C", "abc"), std::invalid_argument);
  AgentSpec plain{AgentKind::kMcts, {}};
  CHECK_THROWS_AS(set_agent_param(plain, "Cpn", "1"), std::invalid_argument);
  CHECK(parse_agent_kind("pnmcts") == AgentKind::kPnMcts);
  CHECK(parse_agent_kind("mcts") == AgentKind::kMcts);
  CHECK_THROWS_AS(parse_agent_kind("alphabeta"), std::invalid_argument);
  for (double x : {0.1, 1.0, 1e6, 1.4142135623730951, 0.25}) CHECK(parse_double(format_double(x)) == x);
}

TEST_CASE("seats alternate exactly") {
  const auto result = run_series(quick_spec("knightthrough", 9, 20, 3));
  REQUIRE(result.records.size() == 9);
  int first = 0;
  for (const auto& r : result.records) {
    CHECK(r.a_first == (r.index % 2 == 0));
    first += r.a_first;
    // The first recorded move belongs to whoever sat first.
    REQUIRE_FALSE(r.moves.empty());
  }
  CHECK(std::abs(first - (9 - first)) <= 1);
  CHECK(result.wins + result.draws + result.losses + result.forfeits == 9);
}

TEST_CASE("records follow the game") {
  const auto spec = quick_spec("loa4", 4, 30, 5);
  const games::Loa g = games::make_loa4();
  for (int i = 0; i < 4; ++i) {
    const auto record = play_game(spec, i);
    auto s = g.initial_state();
    for (const auto& text : record.moves) {
      const auto m = g.parse_move(text);
      REQUIRE_FALSE(g.why_illegal(s, m));
      s = g.play(s, m);
    }
    REQUIRE(g.terminal_outcome(s) == record.outcome);
    CHECK(record.plies == s.move_count());
    CHECK(record.simulations.size() == record.moves.size());
    for (auto n : record.simulations) CHECK(n == 30);
    const Player a_seat = record.a_first ? Player::kFirst : Player::kSecond;
    const int r = reward_for(*record.outcome, a_seat);
    CHECK(record.result == (r > 0 ? GameResult::kWinA : r < 0 ? GameResult::kLossA : GameResult::kDraw));
  }
}

TEST_CASE("replay is deterministic and schedule independent") {
  const auto spec = quick_spec("awari-2x3", 6, 40, 11);
  const auto one = run_series(spec, 1);
  const auto again = run_series(spec, 1);
  const auto threaded = run_series(spec, 3);
  CHECK(one.records == again.records);
  CHECK(one.records == threaded.records);
  CHECK(one.win_rate == threaded.win_rate);
}

TEST_CASE("series totals") {
  std::vector<GameRecord> records(10);
  for (int i = 0; i < 10; ++i) records[i].index = i;
  for (int i = 0; i < 4; ++i) records[i].result = GameResult::kWinA;
  for (int i = 4; i < 6; ++i) records[i].result = GameResult::kDraw;
  for (int i = 6; i < 9; ++i) records[i].result = GameResult::kLossA;
  records[9].result = GameResult::kForfeit;
  const auto s = summarize(records);
  CHECK(s.games == 10);
  CHECK(s.wins == 4);
  CHECK(s.draws == 2);
  CHECK(s.losses == 3);
  CHECK(s.forfeits == 1);
  CHECK(s.win_rate == doctest::Approx(5.0 / 9.0));
  CHECK(s.ci95 == doctest::Approx(confidence_interval(5.0 / 9.0, 9)));
}

TEST_CASE("an illegal move forfeits the game") {
  const StrictKnightthrough g;
  const auto spec = quick_spec("knightthrough", 2, 10, 1);
  const auto a_first = play_game(g, spec, 0);
  CHECK(a_first.result == GameResult::kForfeit);
  CHECK(a_first.forfeit_by == 'B');  // ply 3 is the second player's move
  CHECK(a_first.plies == 3);
  CHECK(a_first.forfeit_reason.find("refused by the referee") != std::string::npos);
  CHECK_FALSE(a_first.outcome);
  const auto b_first = play_game(g, spec, 1);
  CHECK(b_first.forfeit_by == 'A');
  const auto s = summarize({a_first, b_first});
  CHECK(s.forfeits == 2);
  CHECK(s.wins + s.draws + s.losses == 0);
}

TEST_CASE("match validation") {
  auto spec = quick_spec("chess", 2, 10, 1);
  CHECK_THROWS_AS(validate(spec), std::invalid_argument);
  spec.game = "loa8";
  spec.games = 0;
  CHECK_THROWS_AS(validate(spec), std::invalid_argument);
  spec.games = 2;
  CHECK_NOTHROW(validate(spec));
}

TEST_CASE("csv rows round-trip") {
  SeriesRow row;
  row.game = "loa8";
  row.agent_a = "pnmcts";
  row.agent_b = "mcts";
  row.params_a = "C=1.4142;Cpn=1";
  row.params_b = "C=1.4142";
  row.budget_kind = "time";
  row.budget_value = 0.25;
  row.games = 100;
  row.wins_a = 61;
  row.draws = 3;
  row.losses_a = 36;
  row.win_rate_a = 0.625;
  row.ci95 = confidence_interval(0.625, 100);
  row.forfeits = 0;
  row.seed = 18446744073709551615ull;
  CHECK(parse_row(render_row(row)) == row);
  CHECK(split_csv(kCsvHeader).size() == 15);
  CHECK(split_csv(render_row(row)).size() == 15);
  CHECK(split_csv("a,\"b,c\",d") == std::vector<std::string>{"a", "b,c", "d"});
  CHECK_THROWS_AS(parse_row("loa8,pnmcts"), std::invalid_argument);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    SeriesRow r = row;
    r.games = 1 + static_cast<int>(rng() % 500);
    r.wins_a = static_cast<int>(rng() % (r.games + 1));
    r.draws = r.games - r.wins_a;
    r.win_rate_a = win_rate(r.wins_a, r.draws, r.games);
    r.ci95 = confidence_interval(r.win_rate_a, r.games);
    r.budget_value = static_cast<double>(rng() % 100000) / 997.0;
    r.seed = rng();
    REQUIRE(parse_row(render_row(r)) == r);
  }

  TempFile file("pnmcts_rows.csv");
  append_row(file.str(), row);
  SeriesRow other = row;
  other.seed = 7;
  append_row(file.str(), other);
  std::ifstream in(file.path);
  std::string header;
  std::getline(in, header);
  CHECK(header == kCsvHeader);
  CHECK(read_rows(file.str()) == std::vector<SeriesRow>{row, other});
  CHECK(read_rows("/nonexistent/rows.csv").empty());
}

TEST_CASE("rows from a series") {
  const auto spec = quick_spec("loa4", 4, 20, 9);
  const auto result = run_series(spec);
  const auto row = make_row(spec, result);
  CHECK(row.game == "loa4");
  CHECK(row.agent_a == "pnmcts");
  CHECK(row.agent_b == "mcts");
  CHECK(row.budget_kind == "sims");
  CHECK(row.budget_value == 20);
  CHECK(row.games == 4);
  CHECK(row.wins_a == result.wins);
  CHECK(row.wins_a + row.draws + row.losses_a + row.forfeits == 4);
  CHECK(row.win_rate_a == result.win_rate);
  CHECK(row.seed == 9);
  CHECK(row_key(row) == row_key(make_row(spec, run_series(quick_spec("loa4", 4, 20, 9)))));
  CHECK(row_key(row) != row_key(make_row(quick_spec("loa4", 4, 21, 9), result)));
}

TEST_CASE("sweep config parsing") {
  const auto config = SweepConfig::parse(R"(# seven weights
game  = loa4
a     = pnmcts
b     = mcts
a.Cpn = [0.0, 0.1, 0.5, 1.0, 2.0, 5.0, 1e6]   # trailing comment
games = 2
sims  = 10
seed  = 3
)");
  const auto cells = config.cells();
  REQUIRE(cells.size() == 7);
  CHECK(cells.front().at("a.Cpn") == "0.0");
  CHECK(cells.back().at("a.Cpn") == "1e6");
  for (const auto& c : cells) CHECK(c.at("game") == "loa4");

  const auto grid = SweepConfig::parse("game = [loa4, awari-2x3]\na.Cpn = [1, 2, 3]\nsims = 5\ngames = 2\n");
  const auto product = grid.cells();
  REQUIRE(product.size() == 6);
  CHECK(product[0].at("game") == "loa4");
  CHECK(product[2].at("game") == "loa4");
  CHECK(product[3].at("game") == "awari-2x3");
  CHECK(product[1].at("a.Cpn") == "2");

  CHECK(SweepConfig::parse("game = loa4\nthreads = 3\n").threads == 3);
  CHECK_THROWS_AS(SweepConfig::parse("game = loa4\na.Cpn = []\n"), std::invalid_argument);
  CHECK_THROWS_AS(SweepConfig::parse("game = loa4\nbogus = 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(SweepConfig::parse("game = loa4\ngame = loa7\n"), std::invalid_argument);
  CHECK_THROWS_AS(SweepConfig::parse("game loa4\n"), std::invalid_argument);
  CHECK_THROWS_AS(SweepConfig::parse("a.Cpn = [1, 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(SweepConfig::parse(""), std::invalid_argument);
  try {
    SweepConfig::parse("game = loa4\n\nbogus = 1\n");
    FAIL("expected an error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("sweep runs, resumes and validates first") {
  TempFile out("pnmcts_sweep.csv");
  const auto config = SweepConfig::parse(
      "game = loa4\na.Cpn = [0.0, 0.1, 0.5, 1.0, 2.0, 5.0, 1e6]\ngames = 2\nsims = 10\nseed = 3\n");
  const auto first = run_sweep(config, out.str());
  CHECK(first.executed.size() == 7);
  CHECK(first.skipped == 0);
  CHECK(read_rows(out.str()).size() == 7);

  const auto again = run_sweep(config, out.str());
  CHECK(again.executed.empty());
  CHECK(again.skipped == 7);

  // Drop two completed rows, as if the run had been interrupted.
  {
    auto rows = read_rows(out.str());
    std::filesystem::remove(out.path);
    for (std::size_t i = 0; i < 5; ++i) append_row(out.str(), rows[i]);
  }
  const auto resumed = run_sweep(config, out.str());
  CHECK(resumed.executed.size() == 2);
  CHECK(resumed.skipped == 5);
  CHECK(read_rows(out.str()).size() == 7);

  TempFile bad("pnmcts_bad_sweep.csv");
  const auto unknown_game = SweepConfig::parse("game = [loa4, chess]\ngames = 2\nsims = 5\n");
  CHECK_THROWS_AS(run_sweep(unknown_game, bad.str()), std::invalid_argument);
  const auto unknown_agent = SweepConfig::parse("game = loa4\nb = [mcts, random]\ngames = 2\nsims = 5\n");
  CHECK_THROWS_AS(run_sweep(unknown_agent, bad.str()), std::invalid_argument);
  CHECK_FALSE(std::filesystem::exists(bad.path));
}

TEST_CASE("identical agents split a series evenly") {
  const auto result = run_series(mirror_spec("knightthrough", 100, 30, 2024));
  CHECK(result.forfeits == 0);
  CHECK(result.win_rate >= 0.35);
  CHECK(result.win_rate <= 0.65);
}

TEST_CASE("identical agents: deviations beyond the 99% band stay rare") {
  const double band = 2.576 * std::sqrt(0.25 / 50);
  int outside = 0;
  for (std::uint64_t series = 0; series < 50; ++series) {
    const auto result = run_series(mirror_spec("knightthrough", 50, 8, 1000 + series));
    REQUIRE(result.forfeits == 0);
    outside += std::abs(result.win_rate - 0.5) > band;
  }
  MESSAGE(outside << " of 50 series outside the 99% band");
  // Under the null hypothesis P(more than 3 of 50) is below 0.2%.
  CHECK(outside <= 3);
}

TEST_CASE("bench against itself") {
  AgentSpec a{AgentKind::kMcts, {}};
  const auto result = bench_overhead("knightthrough", 0.3, a, a);
  CHECK(result.a.simulations > 0);
  CHECK(result.a.rate == doctest::Approx(result.a.simulations / result.a.seconds));
  CHECK(result.ratio == doctest::Approx(result.a.rate / result.b.rate));
  CHECK(result.ratio > 0.5);
  CHECK(result.ratio < 2.0);
  CHECK_FALSE(result.a.truncated);

  AgentSpec capped{AgentKind::kPnMcts, {}};
  capped.config.max_nodes = 2000;
  const auto truncated = bench_overhead("knightthrough", 5.0, capped, a);
  CHECK(truncated.a.truncated);
  CHECK(truncated.a.seconds < 5.0);
  CHECK_THROWS_AS(bench_overhead("chess", 0.1, a, a), std::invalid_argument);
}
