#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <string>

#include "pnmcts/core/game.hpp"
#include "pnmcts/core/player.hpp"

namespace pnmcts {

// Nonnegative integer extended with a distinguished infinity. Addition
// saturates: anything plus infinity is infinity, and finite sums never
// overflow into it.
class ProofNumber {
 public:
  constexpr ProofNumber() = default;
  constexpr explicit ProofNumber(std::uint64_t value) : value_(value < kInf ? value : kInf - 1) {}

  static constexpr ProofNumber infinity() noexcept {
    ProofNumber p;
    p.value_ = kInf;
    return p;
  }

  constexpr bool is_infinite() const noexcept { return value_ == kInf; }
  constexpr std::uint64_t value() const noexcept { return value_; }

  friend constexpr ProofNumber operator+(ProofNumber a, ProofNumber b) noexcept {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    std::uint64_t sum = a.value_ + b.value_;
    if (sum < a.value_ || sum >= kInf) sum = kInf - 1;
    ProofNumber p;
    p.value_ = sum;
    return p;
  }

  friend constexpr auto operator<=>(ProofNumber, ProofNumber) = default;

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(value_); }

 private:
  static constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t value_ = 0;
};

struct ProofNumbers {
  ProofNumber pn{1};
  ProofNumber dpn{1};

  constexpr bool proven() const noexcept { return pn == ProofNumber{0}; }
  constexpr bool disproven() const noexcept { return dpn == ProofNumber{0}; }
  constexpr bool solved() const noexcept { return proven() || disproven(); }

  friend constexpr bool operator==(const ProofNumbers&, const ProofNumbers&) = default;
};

inline constexpr ProofNumbers kProven{ProofNumber{0}, ProofNumber::infinity()};
inline constexpr ProofNumbers kDisproven{ProofNumber::infinity(), ProofNumber{0}};
inline constexpr ProofNumbers kUnknown{ProofNumber{1}, ProofNumber{1}};

// OR: the proof-goal player is to move, one proven child suffices.
// AND: the opponent is to move, every child must be proven.
enum class NodeKind : std::uint8_t { kOr, kAnd };

constexpr NodeKind node_kind(Player to_move, Player goal) noexcept {
  return to_move == goal ? NodeKind::kOr : NodeKind::kAnd;
}

/// OR: (min pn, sum dpn). AND: (sum pn, min dpn). `unknown_extra` counts
/// additional (1, 1) children that have not been materialized yet.
inline ProofNumbers combine(NodeKind kind, std::span<const ProofNumbers> children,
                            std::size_t unknown_extra = 0) {
  if (children.empty() && unknown_extra == 0) {
    throw ContractViolation("combine: no children");
  }
  ProofNumber min_value = ProofNumber::infinity();
  ProofNumber sum{0};
  for (const auto& c : children) {
    const ProofNumber key = kind == NodeKind::kOr ? c.pn : c.dpn;
    const ProofNumber other = kind == NodeKind::kOr ? c.dpn : c.pn;
    if (key < min_value) min_value = key;
    sum = sum + other;
  }
  if (unknown_extra > 0) {
    if (ProofNumber{1} < min_value) min_value = ProofNumber{1};
    sum = sum + ProofNumber{unknown_extra};
  }
  return kind == NodeKind::kOr ? ProofNumbers{min_value, sum} : ProofNumbers{sum, min_value};
}

template <Game G>
ProofNumbers evaluate_leaf(const G& game, const StateOf<G>& state, Player goal) {
  const auto outcome = game.terminal_outcome(state);
  if (!outcome) return kUnknown;
  return *outcome == win_for(goal) ? kProven : kDisproven;
}

inline ProofNumbers evaluate_outcome(const std::optional<Outcome>& outcome, Player goal) {
  if (!outcome) return kUnknown;
  return *outcome == win_for(goal) ? kProven : kDisproven;
}

}  // namespace pnmcts
