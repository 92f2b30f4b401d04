#pragma once

// Baseline UCT Monte-Carlo Tree Search: one child added per simulation,
// uniform-random playouts, average-reward backpropagation.

#include <chrono>
#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "pnmcts/core/game.hpp"
#include "pnmcts/search/config.hpp"
#include "pnmcts/search/tree.hpp"

namespace pnmcts::search {

/// Index of the largest score. Exact ties are broken uniformly at random;
/// `rng` is only drawn from when there is a tie.
inline std::size_t argmax_random_tie(std::span<const double> scores, Rng& rng) {
  std::size_t best = 0;
  std::size_t ties = 1;
  for (std::size_t i = 1; i < scores.size(); ++i) {
    if (scores[i] > scores[best]) {
      best = i;
      ties = 1;
    } else if (scores[i] == scores[best]) {
      ++ties;
    }
  }
  if (ties == 1) return best;
  std::size_t pick = random_index(rng, ties);
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (scores[i] == scores[best] && pick-- == 0) return i;
  }
  return best;
}

inline double uct_score(double value, std::uint32_t visits, double log_parent_visits, double exploration) {
  return value + exploration * std::sqrt(log_parent_visits / visits);
}

/// One selection step below `parent`. Returns `parent` itself while it still
/// has untried moves (expansion comes next); otherwise the child maximizing
/// v + C * sqrt(ln n_p / n_i).
template <Game G>
NodeId uct_select(const SearchTree<G>& tree, NodeId parent, double exploration, Rng& rng) {
  const auto& node = tree[parent];
  if (node.terminal()) throw ContractViolation("uct_select: terminal node");
  if (!node.fully_expanded()) return parent;
  if (node.children.empty()) throw ContractViolation("uct_select: non-terminal node without children");
  thread_local std::vector<double> scores;
  scores.clear();
  const double log_np = std::log(static_cast<double>(node.visits));
  for (NodeId c : node.children) {
    const auto& child = tree[c];
    scores.push_back(child.visits == 0 ? std::numeric_limits<double>::infinity()
                                       : uct_score(child.value(), child.visits, log_np, exploration));
  }
  return node.children[argmax_random_tie(scores, rng)];
}

/// Moves one untried move, chosen uniformly, into a new child.
template <Game G>
NodeId expand(SearchTree<G>& tree, NodeId leaf, Rng& rng) {
  auto& untried = tree[leaf].untried;
  if (untried.empty()) throw ContractViolation("expand: node has no untried moves");
  const std::size_t i = random_index(rng, untried.size());
  const MoveOf<G> move = untried[i];
  untried[i] = untried.back();
  untried.pop_back();
  return tree.add_child(leaf, move);
}

/// Uniform-random self-play from `state`. Returns +1/-1/0 for `reference`;
/// 0 if the game is still running after `cap` moves.
template <Game G>
int playout(const G& game, StateOf<G> state, Player reference, std::uint32_t cap, Rng& rng,
            std::vector<MoveOf<G>>& buffer) {
  for (std::uint32_t played = 0;; ++played) {
    if (const auto outcome = game.terminal_outcome(state)) return reward_for(*outcome, reference);
    if (played == cap) return 0;
    game.generate_moves(state, buffer);
    state = game.play(state, buffer[random_index(rng, buffer.size())]);
  }
}

/// Adds one visit and the reward to every node on `path` (root first).
/// `reward` is relative to `reference`; each node stores it for its mover.
template <Game G>
void backpropagate(SearchTree<G>& tree, std::span<const NodeId> path, int reward, Player reference) {
  for (NodeId id : path) {
    auto& node = tree[id];
    ++node.visits;
    node.reward_sum += node.mover == reference ? reward : -reward;
  }
}

/// Among `candidates`: most visits, then highest value, then random.
template <Game G>
NodeId robust_child(const SearchTree<G>& tree, std::span<const NodeId> candidates, Rng& rng) {
  thread_local std::vector<double> keys;
  keys.clear();
  std::uint32_t most = 0;
  for (NodeId c : candidates) most = std::max(most, tree[c].visits);
  for (NodeId c : candidates) {
    keys.push_back(tree[c].visits == most ? tree[c].value() : -std::numeric_limits<double>::infinity());
  }
  return candidates[argmax_random_tie(keys, rng)];
}

namespace detail {

class Deadline {
 public:
  explicit Deadline(const Budget& budget)
      : budget_(budget), start_(std::chrono::steady_clock::now()) {}

  bool expired(std::uint64_t simulations) const {
    if (budget_.kind == Budget::Kind::kSimulations) return simulations >= budget_.simulations;
    return elapsed() >= budget_.seconds;
  }
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
};

template <Game G>
MoveOf<G> random_legal_move(const G& game, const StateOf<G>& state, Rng& rng) {
  const auto moves = legal_moves(game, state);
  return moves[random_index(rng, moves.size())];
}

}  // namespace detail

template <Game G>
class Mcts {
 public:
  using State = StateOf<G>;
  using Move = MoveOf<G>;

  Mcts(G game, SearchConfig config) : game_(std::move(game)), config_(config), rng_(config.seed) {
    config_.validate();
  }

  SearchReport<Move> search(const State& state) {
    if (game_.terminal_outcome(state)) throw ContractViolation("mcts: search from a terminal state");
    SearchReport<Move> report;
    detail::Deadline deadline(config_.budget);
    tree_.emplace(game_, state);
    const Player me = state.to_move();

    if (config_.budget.is_zero()) {
      report.move = detail::random_legal_move(game_, state, rng_);
      report.random_fallback = true;
      report.warnings.push_back("zero budget: playing a uniformly random legal move");
      report.tree_size = tree_->size();
      return report;
    }

    while (!deadline.expired(report.simulations)) {
      if (!simulate(me)) {
        report.node_cap_hit = true;
        report.warnings.push_back("node cap reached after " + std::to_string(report.simulations) + " simulations");
        break;
      }
      ++report.simulations;
    }

    auto& root = (*tree_)[tree_->root()];
    if (root.children.empty()) {
      report.move = detail::random_legal_move(game_, state, rng_);
      report.random_fallback = true;
      report.warnings.push_back("no simulation completed: playing a uniformly random legal move");
    } else {
      const auto children = root.children;
      report.move = (*tree_)[robust_child(*tree_, std::span<const NodeId>(children), rng_)].move;
    }
    report.tree_size = tree_->size();
    report.seconds = deadline.elapsed();
    return report;
  }

  const SearchTree<G>& tree() const { return *tree_; }
  const SearchConfig& config() const { return config_; }

 private:
  // One selection/expansion/playout/backpropagation pass. False when the node
  // cap stops expansion; nothing is recorded in that case.
  bool simulate(Player me) {
    auto& tree = *tree_;
    path_.clear();
    NodeId id = tree.root();
    path_.push_back(id);
    while (!tree[id].terminal()) {
      tree.ensure_moves(id);
      const NodeId next = uct_select(tree, id, config_.exploration, rng_);
      if (next == id) {
        if (tree.size() >= config_.max_nodes) return false;
        id = expand(tree, id, rng_);
        path_.push_back(id);
        break;
      }
      id = next;
      path_.push_back(id);
    }
    const auto& leaf = tree[id];
    const int reward = leaf.terminal() ? reward_for(*leaf.outcome, me)
                                       : playout(game_, leaf.state, me, config_.playout_cap, rng_, buffer_);
    backpropagate(tree, std::span<const NodeId>(path_), reward, me);
    return true;
  }

  G game_;
  SearchConfig config_;
  Rng rng_;
  std::optional<SearchTree<G>> tree_;
  std::vector<NodeId> path_;
  std::vector<Move> buffer_;
};

}  // namespace pnmcts::search
