#pragma once

// Proof-Number Search over the shared search tree: most-proving descent,
// expansion with immediate evaluation, and bottom-up recombination that
// stops at the first ancestor whose numbers do not change.

#include <chrono>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pnmcts/core/game.hpp"
#include "pnmcts/core/proof_numbers.hpp"
#include "pnmcts/search/tree.hpp"

namespace pnmcts::search {

enum class Verdict : std::uint8_t { kProven, kDisproven, kUnknown };

constexpr std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kProven: return "PROVEN";
    case Verdict::kDisproven: return "DISPROVEN";
    case Verdict::kUnknown: return "UNKNOWN";
  }
  return "?";
}

struct SolveResult {
  Verdict verdict = Verdict::kUnknown;
  ProofNumbers root{};
  std::size_t nodes = 0;
  std::uint64_t expansions = 0;
  double seconds = 0.0;
};

template <Game G>
NodeKind kind_of(const SearchTree<G>& tree, NodeId id, Player goal) {
  return node_kind(tree[id].state.to_move(), goal);
}

/// Proof numbers of `id` recombined from its children; untried moves count
/// as unknown (1, 1) children.
template <Game G>
ProofNumbers recombine(const SearchTree<G>& tree, NodeId id, Player goal) {
  thread_local std::vector<ProofNumbers> scratch;
  const auto& node = tree[id];
  scratch.clear();
  for (NodeId c : node.children) scratch.push_back(tree[c].proof);
  return combine(kind_of(tree, id, goal), scratch, node.untried.size());
}

/// Root-to-leaf path following min pn at OR nodes and min dpn at AND nodes;
/// the first child wins ties.
template <Game G>
std::vector<NodeId> select_most_proving(const SearchTree<G>& tree, NodeId root, Player goal) {
  if (tree[root].proof.solved()) throw ContractViolation("select_most_proving: root is already solved");
  std::vector<NodeId> path{root};
  NodeId id = root;
  while (!tree[id].children.empty()) {
    const bool is_or = kind_of(tree, id, goal) == NodeKind::kOr;
    NodeId best = kNoNode;
    ProofNumber best_key = ProofNumber::infinity();
    for (NodeId c : tree[id].children) {
      const ProofNumber key = is_or ? tree[c].proof.pn : tree[c].proof.dpn;
      if (best == kNoNode || key < best_key) {
        best = c;
        best_key = key;
      }
    }
    id = best;
    path.push_back(id);
  }
  const auto& leaf = tree[id].proof;
  if (leaf.solved() || leaf.pn.is_infinite() || leaf.dpn.is_infinite()) {
    throw ContractViolation("select_most_proving: reached a solved leaf; tree is inconsistent");
  }
  return path;
}

/// Gives each child of a freshly expanded `leaf` its terminal evaluation and
/// recombines the leaf.
template <Game G>
void evaluate_children(SearchTree<G>& tree, NodeId leaf, Player goal) {
  for (NodeId c : tree[leaf].children) tree[c].proof = evaluate_outcome(tree[c].outcome, goal);
  tree[leaf].proof = recombine(tree, leaf, goal);
  tree[leaf].ranks_dirty = true;
}

/// Creates every child of `leaf`, evaluates each immediately and recombines
/// the leaf.
template <Game G>
void expand_and_evaluate(SearchTree<G>& tree, NodeId leaf, Player goal) {
  if (tree[leaf].moves_generated) throw ContractViolation("expand_and_evaluate: node already expanded");
  if (tree[leaf].terminal()) throw ContractViolation("expand_and_evaluate: terminal node");
  tree.expand_all(leaf);
  evaluate_children(tree, leaf, goal);
}

/// Recombines the ancestors of path.back() (path runs root first), stopping
/// at the first one whose (pn, dpn) is unchanged. Every visited ancestor has
/// its cached child ranking invalidated. Returns the number of recombinations.
template <Game G>
std::size_t update_ancestors(SearchTree<G>& tree, std::span<const NodeId> path, Player goal) {
  std::size_t recombined = 0;
  for (std::size_t i = path.size(); i-- > 1;) {
    auto& parent = tree[path[i - 1]];
    parent.ranks_dirty = true;
    const ProofNumbers updated = recombine(tree, path[i - 1], goal);
    ++recombined;
    if (updated == parent.proof) break;
    parent.proof = updated;
  }
  return recombined;
}

/// First node whose stored proof numbers differ from their recombination, if any.
template <Game G>
std::optional<NodeId> find_inconsistency(const SearchTree<G>& tree, Player goal) {
  for (NodeId id = 0; id < tree.size(); ++id) {
    const auto& node = tree[id];
    if (node.terminal()) {
      if (node.proof != evaluate_outcome(node.outcome, goal)) return id;
      continue;
    }
    if (!node.moves_generated) {
      if (node.proof != kUnknown) return id;
      continue;
    }
    if (node.proof != recombine(tree, id, goal)) return id;
  }
  return std::nullopt;
}

template <Game G>
class PnsSolver {
 public:
  explicit PnsSolver(G game) : game_(std::move(game)) {}

  /// Proves or disproves a forced win for `goal` from `state`. Stops with
  /// UNKNOWN once the tree holds `max_nodes` nodes (checked before each
  /// expansion, so the final tree may exceed it by one expansion).
  SolveResult solve(const StateOf<G>& state, Player goal, std::size_t max_nodes) {
    const auto start = std::chrono::steady_clock::now();
    tree_.emplace(game_, state);
    auto& tree = *tree_;
    tree[tree.root()].proof = evaluate_outcome(tree[tree.root()].outcome, goal);
    SolveResult result;
    while (!tree[tree.root()].proof.solved()) {
      if (tree.size() >= max_nodes) break;
      const auto path = select_most_proving(tree, tree.root(), goal);
      expand_and_evaluate(tree, path.back(), goal);
      update_ancestors(tree, std::span<const NodeId>(path), goal);
      ++result.expansions;
    }
    result.root = tree[tree.root()].proof;
    result.verdict = result.root.proven() ? Verdict::kProven
                     : result.root.disproven() ? Verdict::kDisproven
                                               : Verdict::kUnknown;
    result.nodes = tree.size();
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
  }

  const SearchTree<G>& tree() const { return *tree_; }

 private:
  G game_;
  std::optional<SearchTree<G>> tree_;
};

template <Game G>
SolveResult solve(const G& game, const StateOf<G>& state, Player goal, std::size_t max_nodes) {
  return PnsSolver<G>(game).solve(state, goal, max_nodes);
}

}  // namespace pnmcts::search
