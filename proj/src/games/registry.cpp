#include "pnmcts/games/registry.hpp"

#include <stdexcept>

namespace pnmcts::games {

Loa make_loa4() { return Loa(4, kLoa4MaxPlies); }

Awari make_tiny_awari() { return Awari(Awari::Config{3, 2, kTinyAwariMaxPlies}); }

std::vector<std::string> game_ids() { return {"loa7", "loa8", "awari", "gomoku", "knightthrough", "loa4", "awari-2x3"}; }

bool is_game_id(std::string_view id) {
  for (const auto& known : game_ids()) {
    if (known == id) return true;
  }
  return false;
}

AnyGame make_game(std::string_view id) {
  if (id == "loa8") return Loa(8);
  if (id == "loa7") return Loa(7);
  if (id == "awari") return Awari();
  if (id == "gomoku") return Gomoku();
  if (id == "knightthrough") return Knightthrough();
  if (id == "loa4") return make_loa4();
  if (id == "awari-2x3") return make_tiny_awari();
  std::string known;
  for (const auto& k : game_ids()) known += (known.empty() ? "" : ", ") + k;
  throw std::invalid_argument("unknown game id '" + std::string(id) + "' (known: " + known + ")");
}

}  // namespace pnmcts::games
