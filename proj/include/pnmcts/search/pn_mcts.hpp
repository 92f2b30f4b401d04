#pragma once

// MCTS whose selection step adds a proof-number rank bonus to UCT:
//
//   v_i + C * sqrt(ln n_p / n_i) + C_pn * (1 - rank_i / max_rank)
//
// Proof and disproof numbers are kept inside the MCTS tree with the player to
// move at the root as proof goal. Nodes are expanded all at once so that every
// sibling has numbers to rank; `SearchConfig::expand_one` restores baseline
// one-child expansion for comparison runs.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pnmcts/core/game.hpp"
#include "pnmcts/core/proof_numbers.hpp"
#include "pnmcts/search/config.hpp"
#include "pnmcts/search/mcts.hpp"
#include "pnmcts/search/pns.hpp"
#include "pnmcts/search/tree.hpp"

namespace pnmcts::search {

struct PnRanking {
  std::vector<std::uint32_t> ranks;
  std::uint32_t max_rank = 1;
};

namespace detail {

// Competition ranks of `keys` written to `ranks`; returns the largest rank.
inline std::uint32_t rank_keys(std::span<const std::uint64_t> keys, std::span<std::uint32_t> ranks) {
  // Fresh expansions usually leave every child at the same numbers.
  if (std::all_of(keys.begin(), keys.end(), [&](std::uint64_t k) { return k == keys.front(); })) {
    std::fill(ranks.begin(), ranks.end(), 1u);
    return 1;
  }
  thread_local std::vector<std::pair<std::uint64_t, std::uint32_t>> order;
  order.clear();
  for (std::size_t i = 0; i < keys.size(); ++i) order.emplace_back(keys[i], static_cast<std::uint32_t>(i));
  std::sort(order.begin(), order.end());
  std::uint32_t rank = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0 && order[i].first != order[i - 1].first) rank = static_cast<std::uint32_t>(i + 1);
    ranks[order[i].second] = rank;
  }
  return rank;
}

inline std::uint64_t rank_key(NodeKind parent_kind, const ProofNumbers& p) {
  return (parent_kind == NodeKind::kOr ? p.pn : p.dpn).value();
}

}  // namespace detail

/// Competition ranking of children by pn (OR parent) or dpn (AND parent),
/// ascending: rank = 1 + number of strictly smaller keys.
inline PnRanking compute_ranks(NodeKind parent_kind, std::span<const ProofNumbers> children) {
  if (children.empty()) throw ContractViolation("compute_ranks: no children");
  std::vector<std::uint64_t> keys;
  keys.reserve(children.size());
  for (const auto& c : children) keys.push_back(detail::rank_key(parent_kind, c));
  PnRanking ranking;
  ranking.ranks.resize(children.size());
  ranking.max_rank = detail::rank_keys(keys, ranking.ranks);
  return ranking;
}

/// Refreshes the cached sibling ranks below `parent` if a proof-number change
/// has reached it since they were computed. When a single child's key moved,
/// the ranks are adjusted in one pass instead of re-sorting.
template <Game G>
void refresh_ranks(SearchTree<G>& tree, NodeId parent, Player goal) {
  auto& node = tree[parent];
  if (!node.ranks_dirty || node.children.empty()) return;
  node.ranks_dirty = false;
  const NodeKind kind = kind_of(tree, parent, goal);
  const auto& children = node.children;
  NodeId moved = kNoNode;
  std::size_t moved_count = 0;
  if (node.ranked_children == children.size()) {
    for (NodeId c : children) {
      if (tree[c].ranked_key != detail::rank_key(kind, tree[c].proof)) {
        moved = c;
        ++moved_count;
      }
    }
    if (moved_count == 0) return;
  }
  if (moved_count == 1) {
    const std::uint64_t before = tree[moved].ranked_key;
    const std::uint64_t after = detail::rank_key(kind, tree[moved].proof);
    std::uint32_t below = 0;
    std::uint32_t top = 1;
    for (NodeId c : children) {
      if (c == moved) continue;
      auto& sibling = tree[c];
      below += sibling.ranked_key < after;
      sibling.pn_rank = sibling.pn_rank + (after < sibling.ranked_key) - (before < sibling.ranked_key);
      top = std::max(top, sibling.pn_rank);
    }
    tree[moved].pn_rank = below + 1;
    tree[moved].ranked_key = after;
    node.max_rank = std::max(top, below + 1);
    return;
  }
  thread_local std::vector<std::uint64_t> keys;
  thread_local std::vector<std::uint32_t> ranks;
  keys.clear();
  for (NodeId c : children) keys.push_back(detail::rank_key(kind, tree[c].proof));
  ranks.resize(keys.size());
  node.max_rank = detail::rank_keys(keys, ranks);
  for (std::size_t i = 0; i < children.size(); ++i) {
    tree[children[i]].pn_rank = ranks[i];
    tree[children[i]].ranked_key = keys[i];
  }
  node.ranked_children = static_cast<std::uint32_t>(children.size());
}

/// UCT-PN selection step. Returns `parent` while it has untried moves. Any
/// unvisited child is taken before visited ones, best rank first; otherwise
/// the argmax of the UCT-PN score, exact ties broken by `rng`.
template <Game G>
NodeId uct_pn_select(SearchTree<G>& tree, NodeId parent, double exploration, double pn_weight, Player goal,
                     Rng& rng) {
  if (tree[parent].terminal()) throw ContractViolation("uct_pn_select: terminal node");
  if (!tree[parent].fully_expanded()) return parent;
  if (tree[parent].children.empty()) throw ContractViolation("uct_pn_select: non-terminal node without children");
  refresh_ranks(tree, parent, goal);
  const auto& node = tree[parent];
  thread_local std::vector<double> scores;
  scores.clear();
  const double log_np = node.visits > 0 ? std::log(static_cast<double>(node.visits)) : 0.0;
  const double max_rank = static_cast<double>(node.max_rank);
  bool any_unvisited = false;
  for (NodeId c : node.children) {
    const auto& child = tree[c];
    if (child.visits == 0) {
      any_unvisited = true;
      scores.push_back(-static_cast<double>(child.pn_rank));
    } else if (any_unvisited) {
      scores.push_back(-std::numeric_limits<double>::infinity());
    } else {
      scores.push_back(uct_score(child.value(), child.visits, log_np, exploration) +
                       pn_weight * (1.0 - static_cast<double>(child.pn_rank) / max_rank));
    }
  }
  if (any_unvisited) {
    // Unvisited children come first; scores written before the first one are
    // replaced so only unvisited children compete.
    for (std::size_t i = 0; i < scores.size(); ++i) {
      if (tree[node.children[i]].visits > 0) scores[i] = -std::numeric_limits<double>::infinity();
    }
  }
  return node.children[argmax_random_tie(scores, rng)];
}

/// Expands every child of `leaf` with immediate evaluation. False, with the
/// tree untouched, if that would take the tree past `max_nodes`.
template <Game G>
bool expand_all(SearchTree<G>& tree, NodeId leaf, Player goal, std::size_t max_nodes) {
  const auto& node = tree[leaf];
  if (node.terminal()) throw ContractViolation("expand_all: terminal node");
  if (node.moves_generated) throw ContractViolation("expand_all: node already expanded");
  thread_local std::vector<MoveOf<G>> moves;
  tree.game().generate_moves(node.state, moves);
  if (tree.size() + moves.size() > max_nodes) return false;
  tree.expand_with(leaf, moves);
  evaluate_children(tree, leaf, goal);
  return true;
}

/// MCTS backpropagation along `path` plus proof-number recombination above
/// path[changed] when that node's numbers changed this simulation. Returns
/// the number of recombinations.
template <Game G>
std::size_t backpropagate_pn(SearchTree<G>& tree, std::span<const NodeId> path, int reward, Player reference,
                             std::optional<std::size_t> changed, Player goal) {
  backpropagate(tree, path, reward, reference);
  if (!changed) return 0;
  return update_ancestors(tree, path.first(*changed + 1), goal);
}

/// Root child to play: a proven child if any, otherwise the most visited
/// child that is not disproven, falling back to all children.
template <Game G>
NodeId proof_aware_child(const SearchTree<G>& tree, Rng& rng) {
  thread_local std::vector<NodeId> candidates;
  const auto& children = tree[tree.root()].children;
  if (children.empty()) throw ContractViolation("proof_aware_child: root has no children");
  candidates.clear();
  for (NodeId c : children) {
    if (tree[c].proof.proven()) candidates.push_back(c);
  }
  if (candidates.empty()) {
    for (NodeId c : children) {
      if (!tree[c].proof.disproven()) candidates.push_back(c);
    }
  }
  if (candidates.empty()) candidates = children;
  return robust_child(tree, std::span<const NodeId>(candidates), rng);
}

template <Game G>
class PnMcts {
 public:
  using State = StateOf<G>;
  using Move = MoveOf<G>;

  PnMcts(G game, SearchConfig config) : game_(std::move(game)), config_(config), rng_(config.seed) {
    config_.validate();
  }

  SearchReport<Move> search(const State& state) {
    if (game_.terminal_outcome(state)) throw ContractViolation("pn-mcts: search from a terminal state");
    SearchReport<Move> report;
    detail::Deadline deadline(config_.budget);
    tree_.emplace(game_, state);
    goal_ = state.to_move();
    recombinations_ = 0;

    if (config_.budget.is_zero()) {
      report.move = detail::random_legal_move(game_, state, rng_);
      report.random_fallback = true;
      report.warnings.push_back("zero budget: playing a uniformly random legal move");
      report.tree_size = tree_->size();
      return report;
    }

    while (!deadline.expired(report.simulations)) {
      if (!simulate()) {
        report.node_cap_hit = true;
        report.warnings.push_back("node cap reached after " + std::to_string(report.simulations) + " simulations");
        break;
      }
      ++report.simulations;
    }

    const auto& root = (*tree_)[tree_->root()];
    if (report.simulations == 0 || root.children.empty()) {
      report.move = detail::random_legal_move(game_, state, rng_);
      report.random_fallback = true;
      report.warnings.push_back("no simulation completed: playing a uniformly random legal move");
    } else {
      report.move = (*tree_)[final_child()].move;
    }
    report.tree_size = tree_->size();
    report.seconds = deadline.elapsed();
    report.root_proof = (*tree_)[tree_->root()].proof;
    report.pn_recombinations = recombinations_;
    return report;
  }

  const SearchTree<G>& tree() const { return *tree_; }
  SearchTree<G>& tree() { return *tree_; }
  const SearchConfig& config() const { return config_; }
  Player goal() const { return goal_; }

 private:
  bool simulate() {
    auto& tree = *tree_;
    path_.clear();
    NodeId id = tree.root();
    path_.push_back(id);
    std::optional<std::size_t> changed;
    while (!tree[id].terminal()) {
      if (!config_.expand_one && !tree[id].moves_generated) {
        if (!expand_all(tree, id, goal_, config_.max_nodes)) return false;
        changed = path_.size() - 1;
        id = uct_pn_select(tree, id, config_.exploration, config_.pn_weight, goal_, rng_);
        path_.push_back(id);
        break;
      }
      tree.ensure_moves(id);
      const NodeId next = uct_pn_select(tree, id, config_.exploration, config_.pn_weight, goal_, rng_);
      if (next == id) {
        if (tree.size() >= config_.max_nodes) return false;
        const NodeId child = expand(tree, id, rng_);
        tree[child].proof = evaluate_outcome(tree[child].outcome, goal_);
        tree[id].ranks_dirty = true;
        const ProofNumbers updated = recombine(tree, id, goal_);
        if (updated != tree[id].proof) {
          tree[id].proof = updated;
          changed = path_.size() - 1;
        }
        id = child;
        path_.push_back(id);
        break;
      }
      id = next;
      path_.push_back(id);
    }
    const auto& leaf = tree[id];
    const int reward = leaf.terminal() ? reward_for(*leaf.outcome, goal_)
                                       : playout(game_, leaf.state, goal_, config_.playout_cap, rng_, buffer_);
    recombinations_ += backpropagate_pn(tree, std::span<const NodeId>(path_), reward, goal_, changed, goal_);
    return true;
  }

  NodeId final_child() {
    const auto& tree = *tree_;
    const auto& children = tree[tree.root()].children;
    if (config_.expand_one) return robust_child(tree, std::span<const NodeId>(children), rng_);
    return proof_aware_child(tree, rng_);
  }

  G game_;
  SearchConfig config_;
  Rng rng_;
  Player goal_ = Player::kFirst;
  std::optional<SearchTree<G>> tree_;
  std::vector<NodeId> path_;
  std::vector<Move> buffer_;
  std::uint64_t recombinations_ = 0;
};

}  // namespace pnmcts::search
