#include "pnmcts/games/awari.hpp"

#include <cctype>
#include <stdexcept>

namespace pnmcts::games {

std::size_t Awari::State::hash() const {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (auto p : pits_) h = (h ^ p) * 0x100000001B3ULL;
  h = (h ^ captured_[0]) * 0x100000001B3ULL;
  h = (h ^ captured_[1]) * 0x100000001B3ULL;
  h = (h ^ static_cast<std::uint64_t>(to_move_)) * 0x100000001B3ULL;
  h = (h ^ move_count_) * 0x100000001B3ULL;
  return static_cast<std::size_t>(h);
}

Awari::Awari(Config config) : config_(config) {
  if (config.holes_per_side < 1 || config.holes_per_side > kMaxHolesPerSide) {
    throw std::invalid_argument("awari: holes per side must be in [1, 6]");
  }
  if (config.counters_per_hole < 0 || 2 * config.holes_per_side * config.counters_per_hole > 255) {
    throw std::invalid_argument("awari: counter count out of range");
  }
}

std::string Awari::name() const {
  if (config_.holes_per_side == 6 && config_.counters_per_hole == 4) return "awari";
  return "awari-2x" + std::to_string(config_.holes_per_side);
}

Awari::State Awari::initial_state() const {
  State s;
  for (int i = 0; i < 2 * config_.holes_per_side; ++i) s.pits_[i] = static_cast<std::uint8_t>(config_.counters_per_hole);
  return s;
}

Awari::State Awari::from_pits(const std::vector<int>& pits, int captured_first, int captured_second,
                              Player to_move, std::uint32_t move_count) const {
  if (static_cast<int>(pits.size()) != 2 * config_.holes_per_side) {
    throw std::invalid_argument("awari: expected " + std::to_string(2 * config_.holes_per_side) + " pits");
  }
  State s;
  int total = captured_first + captured_second;
  for (std::size_t i = 0; i < pits.size(); ++i) {
    if (pits[i] < 0) throw std::invalid_argument("awari: negative pit count");
    s.pits_[i] = static_cast<std::uint8_t>(pits[i]);
    total += pits[i];
  }
  if (total != total_counters()) {
    throw std::invalid_argument("awari: counters do not add up to " + std::to_string(total_counters()));
  }
  s.captured_ = {static_cast<std::uint8_t>(captured_first), static_cast<std::uint8_t>(captured_second)};
  s.to_move_ = to_move;
  s.move_count_ = move_count;
  return s;
}

int Awari::counters_on_board(const State& s) const {
  int total = 0;
  for (int i = 0; i < 2 * config_.holes_per_side; ++i) total += s.pits_[i];
  return total;
}

std::optional<Outcome> Awari::terminal_outcome(const State& s) const {
  const int n = 2 * config_.holes_per_side;
  bool any_heap = false;
  for (int i = 0; i < n; ++i) any_heap |= s.pits_[i] > 1;
  int first = s.captured_[0];
  int second = s.captured_[1];
  if (any_heap) {
    const int base = pit_index(s.to_move_, 0);
    int own = 0;
    for (int h = 0; h < config_.holes_per_side; ++h) own += s.pits_[base + h];
    if (own != 0) {
      if (s.move_count_ >= config_.max_plies) return Outcome::kDraw;
      return std::nullopt;
    }
    // The player to move is stranded; the opponent collects the rest.
    const int rest = counters_on_board(s);
    (s.to_move_ == Player::kFirst ? second : first) += rest;
  }
  if (first > second) return Outcome::kWinFirst;
  if (second > first) return Outcome::kWinSecond;
  return Outcome::kDraw;
}

void Awari::generate_moves(const State& s, std::vector<Move>& out) const {
  out.clear();
  const int base = pit_index(s.to_move_, 0);
  for (int h = 0; h < config_.holes_per_side; ++h) {
    if (s.pits_[base + h] > 0) out.push_back(Move{static_cast<std::uint8_t>(h)});
  }
}

std::optional<std::string> Awari::why_illegal(const State& s, const Move& m) const {
  if (m.hole >= config_.holes_per_side) {
    return "hole " + std::to_string(m.hole + 1) + " is not in the mover's row (1.." +
           std::to_string(config_.holes_per_side) + ")";
  }
  if (s.pits_[pit_index(s.to_move_, m.hole)] == 0) return "hole " + std::to_string(m.hole + 1) + " is empty";
  return std::nullopt;
}

Awari::State Awari::sow_and_capture(const State& s, int hole) const {
  const int holes = config_.holes_per_side;
  const int n = 2 * holes;
  State next = s;
  const Player mover = s.to_move_;
  const int origin = pit_index(mover, hole);
  int seeds = next.pits_[origin];
  next.pits_[origin] = 0;
  int pos = origin;
  while (seeds > 0) {
    pos = (pos + 1) % n;
    if (pos == origin) continue;  // a lap never refills the emptied hole
    ++next.pits_[pos];
    --seeds;
  }
  const int opp_lo = mover == Player::kFirst ? holes : 0;
  const int opp_hi = opp_lo + holes;
  auto& store = next.captured_[index_of(mover)];
  while (pos >= opp_lo && pos < opp_hi && (next.pits_[pos] == 2 || next.pits_[pos] == 3)) {
    store = static_cast<std::uint8_t>(store + next.pits_[pos]);
    next.pits_[pos] = 0;
    --pos;
  }
  next.to_move_ = opponent(mover);
  next.move_count_ = s.move_count_ + 1;
  return next;
}

Awari::Move Awari::parse_move(std::string_view text) const {
  int value = 0;
  if (text.empty() || text.size() > 2) throw NotationError("awari: bad hole '" + std::string(text) + "'");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw NotationError("awari: bad hole '" + std::string(text) + "'");
    value = value * 10 + (c - '0');
  }
  if (value < 1 || value > config_.holes_per_side) {
    throw NotationError("awari: hole '" + std::string(text) + "' out of range");
  }
  return Move{static_cast<std::uint8_t>(value - 1)};
}

}  // namespace pnmcts::games
