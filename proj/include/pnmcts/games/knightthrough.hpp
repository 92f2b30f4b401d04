#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pnmcts/core/game.hpp"

namespace pnmcts::games {

// Knightthrough on 8x8. Pieces only make the four forward knight jumps; the
// first player starts on ranks 1-2 and runs toward rank 8.
class Knightthrough {
 public:
  static constexpr std::uint32_t kDefaultMaxPlies = 1000;

  struct Move {
    std::uint8_t from = 0;
    std::uint8_t to = 0;
    friend bool operator==(const Move&, const Move&) = default;
  };

  class State {
   public:
    State() = default;

    std::uint64_t pieces(Player p) const { return pieces_[index_of(p)]; }
    Player to_move() const { return to_move_; }
    std::uint32_t move_count() const { return move_count_; }
    std::size_t hash() const;

    friend bool operator==(const State&, const State&) = default;

   private:
    friend class Knightthrough;
    std::array<std::uint64_t, 2> pieces_{};
    std::uint32_t move_count_ = 0;
    Player to_move_ = Player::kFirst;
  };

  Knightthrough() = default;

  State initial_state() const;
  State from_pieces(std::uint64_t first, std::uint64_t second, Player to_move) const;

  std::optional<Outcome> terminal_outcome(const State& s) const;
  void generate_moves(const State& s, std::vector<Move>& out) const;
  std::optional<std::string> why_illegal(const State& s, const Move& m) const;
  State play(const State& s, const Move& m) const;
  std::string render_move(const Move& m) const;
  Move parse_move(std::string_view text) const;
  std::string name() const { return "knightthrough"; }

  /// Forward knight moves of `player`'s pieces; empty once the game is over.
  std::vector<Move> moves_for(const State& s, Player player) const;

 private:
  void append_moves(const State& s, Player player, std::vector<Move>& out) const;
};

}  // namespace pnmcts::games
