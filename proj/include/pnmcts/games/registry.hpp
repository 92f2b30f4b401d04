#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pnmcts/games/awari.hpp"
#include "pnmcts/games/gomoku.hpp"
#include "pnmcts/games/knightthrough.hpp"
#include "pnmcts/games/loa.hpp"

namespace pnmcts::games {

using AnyGame = std::variant<Loa, Awari, Gomoku, Knightthrough>;

// Small variants with a ply cap (reaching it is a draw) so that exhaustive
// solvers terminate. Used by the solver checks and available on the CLI.
inline constexpr std::uint32_t kLoa4MaxPlies = 14;
inline constexpr std::uint32_t kTinyAwariMaxPlies = 30;

/// Known ids: loa7, loa8, awari, gomoku, knightthrough, plus the small
/// variants loa4 and awari-2x3.
AnyGame make_game(std::string_view id);
bool is_game_id(std::string_view id);
std::vector<std::string> game_ids();

Loa make_loa4();
Awari make_tiny_awari();

}  // namespace pnmcts::games
