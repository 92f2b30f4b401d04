#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pnmcts/core/game.hpp"

namespace pnmcts::games {

// Lines of Action on an N x N board, 4 <= N <= 8.
//
// Squares use an 8-wide layout (square = rank * 8 + file) regardless of N,
// so one set of bitboard tables serves every board size. The first player
// starts on the top and bottom rows, the second on the outer files.
class Loa {
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
    std::uint64_t occupied() const { return pieces_[0] | pieces_[1]; }
    Player to_move() const { return to_move_; }
    std::uint32_t move_count() const { return move_count_; }
    // Set when the last move connected a group.
    std::optional<Player> winner() const {
      if (winner_ == 0) return std::nullopt;
      return winner_ == 1 ? Player::kFirst : Player::kSecond;
    }
    std::size_t hash() const;

    friend bool operator==(const State&, const State&) = default;

   private:
    friend class Loa;
    std::array<std::uint64_t, 2> pieces_{};
    std::uint32_t move_count_ = 0;
    Player to_move_ = Player::kFirst;
    std::uint8_t winner_ = 0;
  };

  // The eight directions of movement, grouped in opposite pairs; a direction
  // d lies on line d / 2 (0 = rank, 1 = file, 2 = diagonal, 3 = anti-diagonal).
  enum class Direction : std::uint8_t { kEast, kWest, kNorth, kSouth, kNorthEast, kSouthWest, kNorthWest, kSouthEast };

  explicit Loa(int size = 8, std::uint32_t max_plies = kDefaultMaxPlies);

  int size() const { return size_; }
  std::uint32_t max_plies() const { return max_plies_; }

  State initial_state() const;
  // Arbitrary position; the connection status is evaluated as if the player
  // not on move had just moved.
  State from_pieces(std::uint64_t first, std::uint64_t second, Player to_move,
                    std::uint32_t move_count = 0) const;

  std::optional<Outcome> terminal_outcome(const State& s) const;
  void generate_moves(const State& s, std::vector<Move>& out) const;
  std::optional<std::string> why_illegal(const State& s, const Move& m) const;
  State play(const State& s, const Move& m) const;
  std::string render_move(const Move& m) const;
  Move parse_move(std::string_view text) const;
  std::string name() const { return "loa" + std::to_string(size_); }

  /// True iff the player's pieces form a single 8-connected group.
  bool connected(const State& s, Player p) const;
  /// Pieces of either colour on the full line through `square` along `dir`.
  int move_distance(const State& s, int square, Direction dir) const;

  int square(int file, int rank) const { return rank * 8 + file; }
  std::string square_name(int sq) const;
  int parse_square(std::string_view text) const;

 private:
  bool has_any_move(const State& s) const;
  void finish(State& s, Player mover) const;

  int size_;
  std::uint32_t max_plies_;
  std::uint64_t board_mask_ = 0;
};

/// 8-connectivity of a set of squares in the 8-wide layout; empty sets and
/// single squares count as connected.
bool loa_connected(std::uint64_t pieces);

}  // namespace pnmcts::games
