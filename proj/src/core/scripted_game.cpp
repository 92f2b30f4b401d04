#include "pnmcts/core/scripted_game.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>
#include <unordered_set>

namespace pnmcts {

ScriptedGame::NodeIndex ScriptedGame::Builder::internal(std::string label, Player to_move) {
  nodes_.push_back(Node{std::move(label), to_move, {}, std::nullopt});
  return static_cast<NodeIndex>(nodes_.size() - 1);
}

ScriptedGame::NodeIndex ScriptedGame::Builder::leaf(std::string label, Outcome outcome,
                                                    Player to_move) {
  nodes_.push_back(Node{std::move(label), to_move, {}, outcome});
  return static_cast<NodeIndex>(nodes_.size() - 1);
}

ScriptedGame::Builder& ScriptedGame::Builder::edge(NodeIndex parent, NodeIndex child) {
  if (parent >= nodes_.size() || child >= nodes_.size()) {
    throw std::invalid_argument("scripted game: edge references an unknown node");
  }
  if (nodes_[parent].outcome) {
    throw std::invalid_argument("scripted game: leaf '" + nodes_[parent].label + "' cannot have children");
  }
  nodes_[parent].children.push_back(child);
  return *this;
}

ScriptedGame ScriptedGame::Builder::build(NodeIndex root) && {
  if (root >= nodes_.size()) throw std::invalid_argument("scripted game: unknown root");
  std::unordered_set<std::string> labels;
  for (const auto& n : nodes_) {
    if (!labels.insert(n.label).second) {
      throw std::invalid_argument("scripted game: duplicate label '" + n.label + "'");
    }
    if (!n.outcome && n.children.empty()) {
      throw std::invalid_argument("scripted game: node '" + n.label + "' has neither children nor outcome");
    }
  }
  // 0 = unvisited, 1 = on stack, 2 = done
  std::vector<int> mark(nodes_.size(), 0);
  std::function<void(NodeIndex)> visit = [&](NodeIndex i) {
    mark[i] = 1;
    for (NodeIndex c : nodes_[i].children) {
      if (mark[c] == 1) throw std::invalid_argument("scripted game: cycle through '" + nodes_[c].label + "'");
      if (mark[c] == 0) visit(c);
    }
    mark[i] = 2;
  };
  visit(root);
  return ScriptedGame(std::make_shared<const std::vector<Node>>(std::move(nodes_)), root);
}

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  ScriptedGame run() {
    const auto root = node(std::nullopt);
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return std::move(builder_).build(root);
  }

 private:
  ScriptedGame::NodeIndex node(std::optional<Player> parent_player) {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (pos_ == start) fail("expected a node label");
    std::string label(text_.substr(start, pos_ - start));
    skip_space();
    if (consume('=')) {
      skip_space();
      Outcome outcome;
      if (consume_word("W1")) outcome = Outcome::kWinFirst;
      else if (consume_word("W2")) outcome = Outcome::kWinSecond;
      else if (consume_word("D")) outcome = Outcome::kDraw;
      else fail("expected W1, W2 or D");
      const Player p = parent_player ? opponent(*parent_player) : Player::kFirst;
      return builder_.leaf(std::move(label), outcome, p);
    }
    if (!consume(':')) fail("expected ':' or '='");
    Player p;
    if (consume('F')) p = Player::kFirst;
    else if (consume('S')) p = Player::kSecond;
    else fail("expected F or S");
    skip_space();
    if (!consume('(')) fail("expected '('");
    const auto self = builder_.internal(std::move(label), p);
    for (;;) {
      skip_space();
      if (consume(')')) break;
      const auto child = node(p);
      builder_.edge(self, child);
    }
    return self;
  }

  void skip_space() {
    while (pos_ < text_.size() && (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == ',')) ++pos_;
  }
  bool consume(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool consume_word(std::string_view w) {
    if (text_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("scripted game: " + what + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  ScriptedGame::Builder builder_;
};

}  // namespace

ScriptedGame ScriptedGame::parse(std::string_view text) { return TreeParser(text).run(); }

void ScriptedGame::generate_moves(const State& s, std::vector<Move>& out) const {
  out.clear();
  for (NodeIndex c : (*nodes_)[s.node()].children) out.push_back(Move{c});
}

std::optional<std::string> ScriptedGame::why_illegal(const State& s, const Move& m) const {
  const auto& children = (*nodes_)[s.node()].children;
  if (std::find(children.begin(), children.end(), m.target) == children.end()) {
    return "node is not a child of '" + (*nodes_)[s.node()].label + "'";
  }
  return std::nullopt;
}

ScriptedGame::State ScriptedGame::play(const State& s, const Move& m) const {
  return State(m.target, (*nodes_)[m.target].to_move, s.move_count() + 1);
}

std::string ScriptedGame::render_move(const Move& m) const {
  if (m.target >= nodes_->size()) return "?";
  return (*nodes_)[m.target].label;
}

ScriptedGame::Move ScriptedGame::parse_move(std::string_view text) const { return Move{index_of(text)}; }

ScriptedGame::NodeIndex ScriptedGame::index_of(std::string_view label) const {
  for (NodeIndex i = 0; i < nodes_->size(); ++i) {
    if ((*nodes_)[i].label == label) return i;
  }
  throw NotationError("scripted game: no node labelled '" + std::string(label) + "'");
}

ScriptedGame::State ScriptedGame::state_at(std::string_view label) const {
  const auto i = index_of(label);
  return State(i, (*nodes_)[i].to_move, 0);
}

}  // namespace pnmcts
