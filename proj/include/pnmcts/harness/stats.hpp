#pragma once

#include <cstdint>

namespace pnmcts::harness {

/// Half-width of the normal-approximation 95% interval, 1.96 * sqrt(p(1-p)/n).
/// Throws std::invalid_argument unless n >= 1 and p is in [0, 1].
double confidence_interval(double win_rate, std::int64_t games);

/// (wins + draws / 2) / games; 0 for an empty series.
double win_rate(std::int64_t wins, std::int64_t draws, std::int64_t games);

/// Deterministic per-move seed from (master seed, game index, ply, seat).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t game_index, std::uint64_t ply, std::uint64_t seat);

}  // namespace pnmcts::harness
