#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pnmcts/core/game.hpp"

namespace pnmcts::games {

// Awari: two rows of holes, sowing counter-clockwise.
//
// Pits are numbered counter-clockwise: the first player owns [0, H) from
// their left, the second owns [H, 2H) from theirs. The game ends as soon as
// no hole holds more than one counter, or when the player to move has an
// empty row (the opponent then collects what is left on the board).
class Awari {
 public:
  static constexpr int kMaxHolesPerSide = 6;

  struct Config {
    int holes_per_side = 6;
    int counters_per_hole = 4;
    std::uint32_t max_plies = 1000;
  };

  // Hole index counted from the mover's left, 0-based.
  struct Move {
    std::uint8_t hole = 0;
    friend bool operator==(const Move&, const Move&) = default;
  };

  class State {
   public:
    State() = default;

    int pit(int i) const { return pits_[i]; }
    int captured(Player p) const { return captured_[index_of(p)]; }
    Player to_move() const { return to_move_; }
    std::uint32_t move_count() const { return move_count_; }
    std::size_t hash() const;

    friend bool operator==(const State&, const State&) = default;

   private:
    friend class Awari;
    std::array<std::uint8_t, 2 * kMaxHolesPerSide> pits_{};
    std::array<std::uint8_t, 2> captured_{};
    Player to_move_ = Player::kFirst;
    std::uint32_t move_count_ = 0;
  };

  Awari() : Awari(Config{}) {}
  explicit Awari(Config config);

  const Config& config() const { return config_; }
  int holes() const { return config_.holes_per_side; }
  int total_counters() const { return 2 * config_.holes_per_side * config_.counters_per_hole; }

  State initial_state() const;
  // `pits` lists all 2H holes in counter-clockwise order.
  State from_pits(const std::vector<int>& pits, int captured_first, int captured_second, Player to_move,
                  std::uint32_t move_count = 0) const;

  std::optional<Outcome> terminal_outcome(const State& s) const;
  void generate_moves(const State& s, std::vector<Move>& out) const;
  std::optional<std::string> why_illegal(const State& s, const Move& m) const;
  State play(const State& s, const Move& m) const { return sow_and_capture(s, m.hole); }
  std::string render_move(const Move& m) const { return std::to_string(m.hole + 1); }
  Move parse_move(std::string_view text) const;
  std::string name() const;

  /// Sows the mover's hole and applies captures. No legality check.
  State sow_and_capture(const State& s, int hole) const;
  /// Absolute pit index of the mover's `hole`.
  int pit_index(Player mover, int hole) const {
    return mover == Player::kFirst ? hole : config_.holes_per_side + hole;
  }
  int counters_on_board(const State& s) const;

 private:
  Config config_;
};

}  // namespace pnmcts::games
