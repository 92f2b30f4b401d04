#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pnmcts/core/game.hpp"
#include "pnmcts/core/proof_numbers.hpp"

namespace pnmcts::search {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

// One node of a search tree, shared by MCTS, PNS and PN-MCTS. The MCTS
// statistics are stored from the point of view of `mover`, the player whose
// move led here, so a parent compares its children's values directly.
template <Game G>
struct SearchNode {
  StateOf<G> state{};
  MoveOf<G> move{};
  NodeId parent = kNoNode;
  Player mover = Player::kFirst;
  std::optional<Outcome> outcome;

  std::vector<NodeId> children;
  std::vector<MoveOf<G>> untried;
  bool moves_generated = false;

  std::uint32_t visits = 0;
  double reward_sum = 0.0;

  ProofNumbers proof = kUnknown;
  // Rank among siblings and, on a parent, the largest rank of its children.
  // `ranked_key` is the key this node was last ranked by; `ranked_children`
  // is how many children the parent had at that time.
  std::uint32_t pn_rank = 1;
  std::uint32_t max_rank = 1;
  std::uint64_t ranked_key = 0;
  std::uint32_t ranked_children = 0;
  bool ranks_dirty = true;

  double value() const { return visits == 0 ? 0.0 : reward_sum / visits; }
  bool terminal() const { return outcome.has_value(); }
  bool fully_expanded() const { return moves_generated && untried.empty(); }
};

// Append-only storage in fixed-size chunks. Growing never moves existing
// elements, so big trees avoid the copy of a reallocating vector.
template <class T>
class ChunkedArena {
 public:
  std::size_t size() const { return size_; }
  T& operator[](std::size_t i) { return chunks_[i >> kShift][i & kMask]; }
  const T& operator[](std::size_t i) const { return chunks_[i >> kShift][i & kMask]; }

  T& emplace_back() {
    if (size_ == chunks_.size() << kShift) chunks_.push_back(std::make_unique<T[]>(std::size_t{1} << kShift));
    return (*this)[size_++];
  }

 private:
  static constexpr std::size_t kShift = 10;
  static constexpr std::size_t kMask = (std::size_t{1} << kShift) - 1;
  std::vector<std::unique_ptr<T[]>> chunks_;
  std::size_t size_ = 0;
};

// Arena of nodes addressed by index; node 0 is the root.
template <Game G>
class SearchTree {
 public:
  using Node = SearchNode<G>;

  SearchTree(G game, const StateOf<G>& root_state) : game_(std::move(game)) {
    Node& root = nodes_.emplace_back();
    root.state = root_state;
    root.mover = opponent(root_state.to_move());
    root.outcome = game_.terminal_outcome(root_state);
  }

  NodeId root() const { return 0; }
  std::size_t size() const { return nodes_.size(); }
  Node& operator[](NodeId id) { return nodes_[id]; }
  const Node& operator[](NodeId id) const { return nodes_[id]; }
  const G& game() const { return game_; }

  /// Materializes the legal moves of `id` as untried moves, in generation order.
  void ensure_moves(NodeId id) {
    Node& node = nodes_[id];
    if (node.moves_generated) return;
    node.moves_generated = true;
    if (!node.terminal()) game_.generate_moves(node.state, node.untried);
  }

  NodeId add_child(NodeId parent, const MoveOf<G>& move) {
    const auto id = static_cast<NodeId>(nodes_.size());
    Node& child = nodes_.emplace_back();
    const Node& from = nodes_[parent];
    child.state = game_.play(from.state, move);
    child.move = move;
    child.parent = parent;
    child.mover = from.state.to_move();
    child.outcome = game_.terminal_outcome(child.state);
    nodes_[parent].children.push_back(id);
    return id;
  }

  /// Creates every child of `id` at once.
  void expand_all(NodeId id) {
    if (nodes_[id].moves_generated) return;
    nodes_[id].moves_generated = true;
    if (nodes_[id].terminal()) return;
    game_.generate_moves(nodes_[id].state, scratch_);
    add_children(id, scratch_);
  }

  /// expand_all with the legal moves of `id` already generated.
  void expand_with(NodeId id, std::span<const MoveOf<G>> moves) {
    if (nodes_[id].moves_generated) return;
    nodes_[id].moves_generated = true;
    if (nodes_[id].terminal()) return;
    add_children(id, moves);
  }

  std::size_t depth(NodeId id) const {
    std::size_t d = 0;
    while (nodes_[id].parent != kNoNode) {
      id = nodes_[id].parent;
      ++d;
    }
    return d;
  }

 private:
  void add_children(NodeId id, std::span<const MoveOf<G>> moves) {
    nodes_[id].children.reserve(moves.size());
    for (const auto& m : moves) add_child(id, m);
  }

  G game_;
  ChunkedArena<Node> nodes_;
  std::vector<MoveOf<G>> scratch_;
};

template <class Move>
struct SearchReport {
  Move move{};
  std::uint64_t simulations = 0;
  std::size_t tree_size = 0;
  double seconds = 0.0;
  bool node_cap_hit = false;
  bool random_fallback = false;
  std::vector<std::string> warnings;
  // PN-MCTS only.
  ProofNumbers root_proof = kUnknown;
  std::uint64_t pn_recombinations = 0;
};

}  // namespace pnmcts::search
