#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "pnmcts/core/game.hpp"
#include "pnmcts/core/player.hpp"
#include "pnmcts/core/proof_numbers.hpp"
#include "pnmcts/core/scripted_game.hpp"
#include "pnmcts/games/awari.hpp"
#include "pnmcts/games/gomoku.hpp"
#include "pnmcts/games/knightthrough.hpp"
#include "pnmcts/games/loa.hpp"

using namespace pnmcts;

static_assert(Game<ScriptedGame>);
static_assert(Game<games::Loa>);
static_assert(Game<games::Awari>);
static_assert(Game<games::Gomoku>);
static_assert(Game<games::Knightthrough>);

TEST_CASE("players and outcomes") {
  CHECK(opponent(Player::kFirst) == Player::kSecond);
  CHECK(opponent(Player::kSecond) == Player::kFirst);
  CHECK(opponent(opponent(Player::kFirst)) == Player::kFirst);
  CHECK(reward_for(Outcome::kWinFirst, Player::kFirst) == 1);
  CHECK(reward_for(Outcome::kWinFirst, Player::kSecond) == -1);
  CHECK(reward_for(Outcome::kDraw, Player::kSecond) == 0);
  CHECK(loss_for(Player::kFirst) == Outcome::kWinSecond);
}

TEST_CASE("proof numbers saturate") {
  const auto inf = ProofNumber::infinity();
  CHECK((ProofNumber{3} + inf).is_infinite());
  CHECK((inf + inf).is_infinite());
  CHECK((ProofNumber{2} + ProofNumber{5}) == ProofNumber{7});
  // A huge finite sum stays finite rather than wrapping or turning into infinity.
  const ProofNumber big{~std::uint64_t{0} - 5};
  CHECK_FALSE((big + big).is_infinite());
  CHECK(big < big + big);
  CHECK(ProofNumber{1'000'000} < inf);
  CHECK(kProven.proven());
  CHECK(kDisproven.disproven());
  CHECK_FALSE(kUnknown.solved());
}

TEST_CASE("combine follows the min/sum rule") {
  const auto inf = ProofNumber::infinity();
  using PN = ProofNumber;
  SUBCASE("OR over (2,3) (1,4) (inf,0) gives (1,7)") {
    const std::vector<ProofNumbers> kids{{PN{2}, PN{3}}, {PN{1}, PN{4}}, {inf, PN{0}}};
    CHECK(combine(NodeKind::kOr, kids) == ProofNumbers{PN{1}, PN{7}});
  }
  SUBCASE("AND over (2,3) (1,4) gives (3,3)") {
    const std::vector<ProofNumbers> kids{{PN{2}, PN{3}}, {PN{1}, PN{4}}};
    CHECK(combine(NodeKind::kAnd, kids) == ProofNumbers{PN{3}, PN{3}});
  }
  SUBCASE("one proven child proves an OR node") {
    const std::vector<ProofNumbers> kids{{PN{4}, PN{2}}, kProven, {PN{1}, PN{1}}};
    CHECK(combine(NodeKind::kOr, kids) == kProven);
  }
  SUBCASE("one disproven child disproves an AND node") {
    const std::vector<ProofNumbers> kids{{PN{4}, PN{2}}, kDisproven};
    CHECK(combine(NodeKind::kAnd, kids) == kDisproven);
  }
  SUBCASE("all children disproven disproves an OR node") {
    const std::vector<ProofNumbers> kids{kDisproven, kDisproven};
    CHECK(combine(NodeKind::kOr, kids) == kDisproven);
  }
  SUBCASE("untried moves count as unknown children") {
    const std::vector<ProofNumbers> kids{{PN{3}, PN{2}}};
    CHECK(combine(NodeKind::kOr, kids, 2) == ProofNumbers{PN{1}, PN{4}});
  }
  SUBCASE("no children is a contract violation") {
    CHECK_THROWS_AS(combine(NodeKind::kOr, std::vector<ProofNumbers>{}), ContractViolation);
  }
}

TEST_CASE("node kind follows the goal player") {
  CHECK(node_kind(Player::kFirst, Player::kFirst) == NodeKind::kOr);
  CHECK(node_kind(Player::kSecond, Player::kFirst) == NodeKind::kAnd);
}

TEST_CASE("leaf evaluation") {
  const auto g = ScriptedGame::parse("r:F(w=W1 l=W2 d=D m:S(x=W1))");
  const Player goal = Player::kFirst;
  CHECK(evaluate_leaf(g, g.state_at("w"), goal) == kProven);
  CHECK(evaluate_leaf(g, g.state_at("l"), goal) == kDisproven);
  CHECK(evaluate_leaf(g, g.state_at("d"), goal) == kDisproven);
  CHECK(evaluate_leaf(g, g.state_at("m"), goal) == kUnknown);
  CHECK(evaluate_leaf(g, g.state_at("l"), Player::kSecond) == kProven);
}

TEST_CASE("scripted game from text") {
  const auto g = ScriptedGame::parse("a:F(b:S(c=W1 d=D) e=W2)");
  CHECK(g.node_count() == 5);
  const auto root = g.initial_state();
  CHECK(root.to_move() == Player::kFirst);
  CHECK_FALSE(g.terminal_outcome(root));
  const auto moves = legal_moves(g, root);
  REQUIRE(moves.size() == 2);
  CHECK(g.render_move(moves[0]) == "b");
  CHECK(g.render_move(moves[1]) == "e");
  const auto b = apply(g, root, moves[0]);
  CHECK(b.to_move() == Player::kSecond);
  CHECK(b.move_count() == 1);
  CHECK(*g.terminal_outcome(g.play(b, g.parse_move("d"))) == Outcome::kDraw);
  CHECK(*g.terminal_outcome(apply(g, root, g.parse_move("e"))) == Outcome::kWinSecond);
}

TEST_CASE("scripted game rejects malformed trees") {
  CHECK_THROWS_AS(ScriptedGame::parse("a:F(b=W1 b=W2)"), std::invalid_argument);
  CHECK_THROWS_AS(ScriptedGame::parse("a:F()"), std::invalid_argument);
  CHECK_THROWS_AS(ScriptedGame::parse("a:F(b=X)"), std::invalid_argument);
  CHECK_THROWS_AS(ScriptedGame::parse("a:F(b=W1) extra"), std::invalid_argument);

  ScriptedGame::Builder builder;
  const auto a = builder.internal("a", Player::kFirst);
  const auto b = builder.internal("b", Player::kSecond);
  builder.edge(a, b).edge(b, a);
  CHECK_THROWS_AS(std::move(builder).build(a), std::invalid_argument);
}

TEST_CASE("contract violations are reported") {
  const auto g = ScriptedGame::parse("a:F(b=W1 c:S(d=W2))");
  const auto leaf = g.state_at("b");
  CHECK_THROWS_AS(legal_moves(g, leaf), ContractViolation);
  CHECK_THROWS_AS(apply(g, leaf, g.parse_move("d")), IllegalMove);
  // d is a grandchild of the root, not a child
  CHECK_THROWS_AS(apply(g, g.initial_state(), g.parse_move("d")), IllegalMove);
  CHECK_THROWS_AS(g.parse_move("zz"), NotationError);
}

TEST_CASE("replay plays a move list from the start") {
  const games::Gomoku g;
  const auto s = replay(g, "h8 h9,i8");
  CHECK(s.move_count() == 3);
  CHECK(s.has_stone(Player::kFirst, g.cell(7, 7)));
  CHECK(s.has_stone(Player::kSecond, g.cell(7, 8)));
  CHECK(s.to_move() == Player::kSecond);
  CHECK_THROWS_AS(replay(g, "h8 h8"), IllegalMove);
  CHECK_THROWS_AS(replay(g, "z99"), NotationError);
}

TEST_CASE("apply leaves its input untouched") {
  const games::Awari g;
  const auto s = g.initial_state();
  const auto copy = s;
  const auto next = apply(g, s, g.parse_move("3"));
  CHECK(s == copy);
  CHECK_FALSE(next == s);
  CHECK(apply(g, s, g.parse_move("3")) == next);
}
