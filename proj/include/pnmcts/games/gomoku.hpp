#pragma once

#include <array>
#include <bitset>
#include <functional>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pnmcts/core/game.hpp"

namespace pnmcts::games {

// Free-style Gomoku where only a line of exactly five wins. Cells are
// numbered row * size + column; "h8" is column h, row 8.
class Gomoku {
 public:
  static constexpr int kMaxSize = 15;
  static constexpr int kMaxCells = kMaxSize * kMaxSize;

  struct Move {
    std::uint8_t cell = 0;
    friend bool operator==(const Move&, const Move&) = default;
  };

  class State {
   public:
    State() = default;

    bool has_stone(Player p, int cell) const { return stones_[index_of(p)][cell]; }
    bool empty(int cell) const { return !stones_[0][cell] && !stones_[1][cell]; }
    int stone_count(Player p) const { return static_cast<int>(stones_[index_of(p)].count()); }
    Player to_move() const { return to_move_; }
    std::uint32_t move_count() const { return move_count_; }
    std::optional<Player> winner() const {
      if (winner_ == 0) return std::nullopt;
      return winner_ == 1 ? Player::kFirst : Player::kSecond;
    }
    std::size_t hash() const;

    friend bool operator==(const State&, const State&) = default;

   private:
    friend class Gomoku;
    std::array<std::bitset<kMaxCells>, 2> stones_{};
    std::uint32_t move_count_ = 0;
    Player to_move_ = Player::kFirst;
    std::uint8_t winner_ = 0;
  };

  explicit Gomoku(int size = kMaxSize);

  int size() const { return size_; }
  int cell(int column, int row) const { return row * size_ + column; }

  State initial_state() const { return State{}; }
  // Builds a position from stone lists; the side to move follows from the
  // counts, which must differ by at most one in the first player's favour.
  State from_stones(const std::vector<int>& first, const std::vector<int>& second) const;

  std::optional<Outcome> terminal_outcome(const State& s) const;
  void generate_moves(const State& s, std::vector<Move>& out) const;
  std::optional<std::string> why_illegal(const State& s, const Move& m) const;
  State play(const State& s, const Move& m) const;
  std::string render_move(const Move& m) const;
  Move parse_move(std::string_view text) const;
  std::string name() const { return size_ == kMaxSize ? "gomoku" : "gomoku" + std::to_string(size_); }

  /// Whether the stone on `cell` lies on a maximal line of exactly five.
  bool completes_exact_five(const State& s, int cell) const;

 private:
  int run_length(const std::bitset<kMaxCells>& stones, int cell, int dc, int dr) const;

  int size_;
};

}  // namespace pnmcts::games
