#pragma once

#include <cstdint>
#include <string_view>

namespace pnmcts {

enum class Player : std::uint8_t { kFirst = 0, kSecond = 1 };

constexpr Player opponent(Player p) noexcept {
  return p == Player::kFirst ? Player::kSecond : Player::kFirst;
}

constexpr int index_of(Player p) noexcept { return static_cast<int>(p); }

// Result of a finished game. Only meaningful for terminal states.
enum class Outcome : std::uint8_t { kWinFirst, kWinSecond, kDraw };

constexpr Outcome win_for(Player p) noexcept {
  return p == Player::kFirst ? Outcome::kWinFirst : Outcome::kWinSecond;
}

constexpr Outcome loss_for(Player p) noexcept { return win_for(opponent(p)); }

/// +1 if `o` is a win for `p`, -1 if it is a loss, 0 for a draw.
constexpr int reward_for(Outcome o, Player p) noexcept {
  if (o == Outcome::kDraw) return 0;
  return o == win_for(p) ? 1 : -1;
}

constexpr std::string_view to_string(Player p) noexcept {
  return p == Player::kFirst ? "first" : "second";
}

constexpr std::string_view to_string(Outcome o) noexcept {
  switch (o) {
    case Outcome::kWinFirst: return "win-first";
    case Outcome::kWinSecond: return "win-second";
    case Outcome::kDraw: return "draw";
  }
  return "?";
}

}  // namespace pnmcts
