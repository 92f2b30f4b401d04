#include "pnmcts/games/knightthrough.hpp"

#include <bit>
#include <cctype>
#include <stdexcept>

namespace pnmcts::games {

namespace {

constexpr std::uint64_t kRank1 = 0xFFULL;
constexpr std::uint64_t kRank8 = 0xFFULL << 56;

struct JumpTable {
  // jumps[p][sq]: forward knight destinations for player p.
  std::array<std::array<std::uint64_t, 64>, 2> jumps{};

  JumpTable() {
    constexpr int kOffsets[4][2] = {{-1, 2}, {1, 2}, {-2, 1}, {2, 1}};
    for (int sq = 0; sq < 64; ++sq) {
      const int f = sq & 7;
      const int r = sq >> 3;
      for (int p = 0; p < 2; ++p) {
        const int forward = p == 0 ? 1 : -1;
        for (const auto& o : kOffsets) {
          const int tf = f + o[0];
          const int tr = r + forward * o[1];
          if (tf >= 0 && tf < 8 && tr >= 0 && tr < 8) jumps[p][sq] |= 1ULL << (tr * 8 + tf);
        }
      }
    }
  }
};

const JumpTable& jump_table() {
  static const JumpTable t;
  return t;
}

std::string square_name(int sq) {
  std::string out(1, static_cast<char>('a' + (sq & 7)));
  out += std::to_string((sq >> 3) + 1);
  return out;
}

int parse_square(std::string_view text) {
  if (text.size() != 2) throw NotationError("knightthrough: bad square '" + std::string(text) + "'");
  const int file = std::tolower(static_cast<unsigned char>(text[0])) - 'a';
  const int rank = text[1] - '1';
  if (file < 0 || file >= 8 || rank < 0 || rank >= 8) {
    throw NotationError("knightthrough: square '" + std::string(text) + "' is off the board");
  }
  return rank * 8 + file;
}

}  // namespace

std::size_t Knightthrough::State::hash() const {
  std::uint64_t h = pieces_[0] * 0x9E3779B97F4A7C15ULL ^ (pieces_[1] + 0x632BE59BD9B4E019ULL) * 0xBF58476D1CE4E5B9ULL;
  h ^= (static_cast<std::uint64_t>(move_count_) << 1 | static_cast<std::uint64_t>(to_move_)) * 0x94D049BB133111EBULL;
  return static_cast<std::size_t>(h ^ (h >> 29));
}

Knightthrough::State Knightthrough::initial_state() const {
  State s;
  s.pieces_ = {0xFFFFULL, 0xFFFFULL << 48};
  return s;
}

Knightthrough::State Knightthrough::from_pieces(std::uint64_t first, std::uint64_t second, Player to_move) const {
  if (first & second) throw std::invalid_argument("knightthrough: square occupied by both players");
  State s;
  s.pieces_ = {first, second};
  s.to_move_ = to_move;
  return s;
}

std::optional<Outcome> Knightthrough::terminal_outcome(const State& s) const {
  if (s.pieces_[0] & kRank8) return Outcome::kWinFirst;
  if (s.pieces_[1] & kRank1) return Outcome::kWinSecond;
  if (s.pieces_[1] == 0) return Outcome::kWinFirst;
  if (s.pieces_[0] == 0) return Outcome::kWinSecond;
  if (s.move_count_ >= kDefaultMaxPlies) return Outcome::kDraw;
  const int me = index_of(s.to_move_);
  const auto& t = jump_table();
  for (std::uint64_t rest = s.pieces_[me]; rest; rest &= rest - 1) {
    if (t.jumps[me][std::countr_zero(rest)] & ~s.pieces_[me]) return std::nullopt;
  }
  return loss_for(s.to_move_);
}

void Knightthrough::append_moves(const State& s, Player player, std::vector<Move>& out) const {
  const int me = index_of(player);
  const auto& t = jump_table();
  const std::uint64_t own = s.pieces_[me];
  for (std::uint64_t rest = own; rest; rest &= rest - 1) {
    const int from = std::countr_zero(rest);
    for (std::uint64_t to = t.jumps[me][from] & ~own; to; to &= to - 1) {
      out.push_back(Move{static_cast<std::uint8_t>(from), static_cast<std::uint8_t>(std::countr_zero(to))});
    }
  }
}

void Knightthrough::generate_moves(const State& s, std::vector<Move>& out) const {
  out.clear();
  append_moves(s, s.to_move_, out);
}

std::vector<Knightthrough::Move> Knightthrough::moves_for(const State& s, Player player) const {
  std::vector<Move> out;
  if (terminal_outcome(s)) return out;
  append_moves(s, player, out);
  return out;
}

std::optional<std::string> Knightthrough::why_illegal(const State& s, const Move& m) const {
  if (m.from >= 64 || m.to >= 64) return std::string("square off the board");
  const int me = index_of(s.to_move_);
  if (!((s.pieces_[me] >> m.from) & 1)) return "origin " + square_name(m.from) + " holds no piece of the player to move";
  if (!((jump_table().jumps[me][m.from] >> m.to) & 1)) {
    return "pieces only make forward knight jumps; " + square_name(m.to) + " is not one";
  }
  if ((s.pieces_[me] >> m.to) & 1) return "destination " + square_name(m.to) + " is occupied by an own piece";
  return std::nullopt;
}

Knightthrough::State Knightthrough::play(const State& s, const Move& m) const {
  State next = s;
  const int me = index_of(s.to_move_);
  const std::uint64_t to = 1ULL << m.to;
  next.pieces_[me] = (next.pieces_[me] & ~(1ULL << m.from)) | to;
  next.pieces_[1 - me] &= ~to;
  next.to_move_ = opponent(s.to_move_);
  next.move_count_ = s.move_count_ + 1;
  return next;
}

std::string Knightthrough::render_move(const Move& m) const { return square_name(m.from) + "-" + square_name(m.to); }

Knightthrough::Move Knightthrough::parse_move(std::string_view text) const {
  const auto dash = text.find('-');
  if (dash == std::string_view::npos) {
    throw NotationError("knightthrough: expected 'from-to', got '" + std::string(text) + "'");
  }
  return Move{static_cast<std::uint8_t>(parse_square(text.substr(0, dash))),
              static_cast<std::uint8_t>(parse_square(text.substr(dash + 1)))};
}

}  // namespace pnmcts::games
