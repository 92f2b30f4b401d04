#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace pnmcts::search {

// Per-move search budget: wall-clock seconds or a fixed simulation count.
struct Budget {
  enum class Kind : std::uint8_t { kTime, kSimulations };

  Kind kind = Kind::kSimulations;
  double seconds = 0.0;
  std::uint64_t simulations = 1000;

  static Budget time(double s) { return Budget{Kind::kTime, s, 0}; }
  static Budget sims(std::uint64_t n) { return Budget{Kind::kSimulations, 0.0, n}; }

  bool is_zero() const { return kind == Kind::kTime ? !(seconds > 0.0) : simulations == 0; }
  std::string kind_name() const { return kind == Kind::kTime ? "time" : "sims"; }
  double value() const { return kind == Kind::kTime ? seconds : static_cast<double>(simulations); }

  friend bool operator==(const Budget&, const Budget&) = default;
};

struct SearchConfig {
  double exploration = std::sqrt(2.0);  // C
  double pn_weight = 1.0;               // C_pn, PN-MCTS only
  Budget budget = Budget::sims(1000);
  std::uint64_t seed = 0;
  std::size_t max_nodes = std::size_t{1} << 21;
  std::uint32_t playout_cap = 1000;
  // PN-MCTS only: grow one child per simulation and use the plain
  // max-visits final move, so that C_pn = 0 reproduces baseline MCTS.
  bool expand_one = false;

  void validate() const {
    if (!(exploration >= 0.0)) throw std::invalid_argument("search config: C must be >= 0");
    if (!(pn_weight >= 0.0)) throw std::invalid_argument("search config: C_pn must be >= 0");
    if (budget.kind == Budget::Kind::kTime && !(budget.seconds >= 0.0)) {
      throw std::invalid_argument("search config: time budget must be >= 0");
    }
    if (max_nodes < 1) throw std::invalid_argument("search config: max_nodes must be >= 1");
  }
};

using Rng = std::mt19937_64;

/// Uniform index in [0, n) using one 64-bit draw (multiply-shift).
inline std::size_t random_index(Rng& rng, std::size_t n) {
  return static_cast<std::size_t>((static_cast<unsigned __int128>(rng()) * n) >> 64);
}

}  // namespace pnmcts::search
