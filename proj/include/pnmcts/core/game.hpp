#pragma once

// The two-player, zero-sum, perfect-information game contract shared by every
// rule engine and every search agent.
//
// A game object holds rule parameters (board size, ply cap, ...) and is
// immutable after construction. States and moves are plain values: `play`
// returns a fresh successor and never touches its input, so a search tree can
// keep a state per node and independent matches can run on separate threads.

#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pnmcts/core/player.hpp"

namespace pnmcts {

// A caller broke a documented precondition (e.g. asked a terminal state for
// its moves).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class IllegalMove : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class G>
concept Game = requires(const G& g, const typename G::State& s,
                        const typename G::Move& m,
                        std::vector<typename G::Move>& buffer,
                        std::string_view text) {
  requires std::regular<typename G::State>;
  requires std::regular<typename G::Move>;
  { g.initial_state() } -> std::same_as<typename G::State>;
  { s.to_move() } -> std::same_as<Player>;
  { s.move_count() } -> std::convertible_to<std::uint32_t>;
  { g.terminal_outcome(s) } -> std::same_as<std::optional<Outcome>>;
  // Fills `buffer` with the moves of a non-terminal state, in a fixed order.
  g.generate_moves(s, buffer);
  // Empty when `m` is legal in `s`, otherwise the rule it violates.
  { g.why_illegal(s, m) } -> std::same_as<std::optional<std::string>>;
  // Successor of a legal move; no validation.
  { g.play(s, m) } -> std::same_as<typename G::State>;
  { g.render_move(m) } -> std::convertible_to<std::string>;
  { g.parse_move(text) } -> std::same_as<typename G::Move>;
  { g.name() } -> std::convertible_to<std::string>;
};

template <Game G>
using StateOf = typename G::State;

template <Game G>
using MoveOf = typename G::Move;

template <Game G>
std::vector<MoveOf<G>> legal_moves(const G& game, const StateOf<G>& state) {
  if (game.terminal_outcome(state)) {
    throw ContractViolation("legal_moves called on a terminal " + std::string(game.name()) +
                            " state");
  }
  std::vector<MoveOf<G>> moves;
  game.generate_moves(state, moves);
  return moves;
}

/// Validated successor. Throws IllegalMove naming the violated rule.
template <Game G>
StateOf<G> apply(const G& game, const StateOf<G>& state, const MoveOf<G>& move) {
  if (game.terminal_outcome(state)) {
    throw IllegalMove(std::string(game.name()) + ": game is already over");
  }
  if (auto reason = game.why_illegal(state, move)) {
    throw IllegalMove(std::string(game.name()) + ": illegal move " + game.render_move(move) + ": " +
                      *reason);
  }
  return game.play(state, move);
}

/// Plays a whitespace- or comma-separated move list from the initial position.
template <Game G>
StateOf<G> replay(const G& game, std::string_view moves) {
  auto state = game.initial_state();
  std::size_t pos = 0;
  auto is_sep = [](char c) { return c == ' ' || c == ',' || c == '\t' || c == '\n'; };
  while (pos < moves.size()) {
    while (pos < moves.size() && is_sep(moves[pos])) ++pos;
    std::size_t end = pos;
    while (end < moves.size() && !is_sep(moves[end])) ++end;
    if (end > pos) state = apply(game, state, game.parse_move(moves.substr(pos, end - pos)));
    pos = end;
  }
  return state;
}

}  // namespace pnmcts
