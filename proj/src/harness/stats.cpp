#include "pnmcts/harness/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace pnmcts::harness {

double confidence_interval(double win_rate, std::int64_t games) {
  if (games < 1) throw std::invalid_argument("confidence_interval: need at least one game");
  if (!(win_rate >= 0.0 && win_rate <= 1.0)) throw std::invalid_argument("confidence_interval: win rate outside [0, 1]");
  return 1.96 * std::sqrt(win_rate * (1.0 - win_rate) / static_cast<double>(games));
}

double win_rate(std::int64_t wins, std::int64_t draws, std::int64_t games) {
  if (games <= 0) return 0.0;
  return (static_cast<double>(wins) + 0.5 * static_cast<double>(draws)) / static_cast<double>(games);
}

namespace {
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}
}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t game_index, std::uint64_t ply, std::uint64_t seat) {
  std::uint64_t h = splitmix64(master);
  h = splitmix64(h ^ game_index);
  h = splitmix64(h ^ ply);
  return splitmix64(h ^ seat);
}

}  // namespace pnmcts::harness
