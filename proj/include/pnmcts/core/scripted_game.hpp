#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pnmcts/core/game.hpp"

namespace pnmcts {

// An explicit finite game tree, used to exercise the agents on hand-built
// AND/OR trees. A move names the node it leads to.
//
// Text form: `node := label ':' ('F'|'S') '(' node* ')' | label '=' ('W1'|'W2'|'D')`,
// e.g. "a:F(b:S(c=W1 d=D) e=W2)". Leaves take the player opposite their parent.
class ScriptedGame {
 public:
  using NodeIndex = std::uint32_t;

  struct Node {
    std::string label;
    Player to_move = Player::kFirst;
    std::vector<NodeIndex> children;
    std::optional<Outcome> outcome;
  };

  class State {
   public:
    State() = default;
    State(NodeIndex node, Player to_move, std::uint32_t move_count)
        : node_(node), to_move_(to_move), move_count_(move_count) {}

    NodeIndex node() const { return node_; }
    Player to_move() const { return to_move_; }
    std::uint32_t move_count() const { return move_count_; }

    friend bool operator==(const State&, const State&) = default;

   private:
    NodeIndex node_ = 0;
    Player to_move_ = Player::kFirst;
    std::uint32_t move_count_ = 0;
  };

  struct Move {
    NodeIndex target = 0;
    friend bool operator==(const Move&, const Move&) = default;
  };

  class Builder {
   public:
    NodeIndex internal(std::string label, Player to_move);
    NodeIndex leaf(std::string label, Outcome outcome, Player to_move = Player::kFirst);
    Builder& edge(NodeIndex parent, NodeIndex child);
    // Throws std::invalid_argument on cycles, childless internal nodes or
    // duplicate labels.
    ScriptedGame build(NodeIndex root) &&;

   private:
    std::vector<Node> nodes_;
  };

  static ScriptedGame parse(std::string_view text);

  State initial_state() const { return State(root_, (*nodes_)[root_].to_move, 0); }
  std::optional<Outcome> terminal_outcome(const State& s) const { return (*nodes_)[s.node()].outcome; }
  void generate_moves(const State& s, std::vector<Move>& out) const;
  std::optional<std::string> why_illegal(const State& s, const Move& m) const;
  State play(const State& s, const Move& m) const;
  std::string render_move(const Move& m) const;
  Move parse_move(std::string_view text) const;
  std::string name() const { return "scripted"; }

  const Node& node(NodeIndex i) const { return (*nodes_)[i]; }
  std::size_t node_count() const { return nodes_->size(); }
  NodeIndex index_of(std::string_view label) const;
  State state_at(std::string_view label) const;

 private:
  ScriptedGame(std::shared_ptr<const std::vector<Node>> nodes, NodeIndex root)
      : nodes_(std::move(nodes)), root_(root) {}

  std::shared_ptr<const std::vector<Node>> nodes_;
  NodeIndex root_ = 0;
};

}  // namespace pnmcts
