#include "pnmcts/games/loa.hpp"

#include <bit>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace pnmcts::games {

namespace {

constexpr std::uint64_t kFileA = 0x0101010101010101ULL;
constexpr std::uint64_t kFileH = kFileA << 7;

constexpr std::array<int, 8> kDf = {1, -1, 0, 0, 1, -1, -1, 1};
constexpr std::array<int, 8> kDr = {0, 0, 1, -1, 1, -1, 1, -1};

struct Tables {
  // line[l][sq]: every square on line l through sq, sq included.
  std::array<std::array<std::uint64_t, 64>, 4> line{};
  // between[a][b]: squares strictly between a and b when they share a line.
  std::array<std::array<std::uint64_t, 64>, 64> between{};

  Tables() {
    for (int sq = 0; sq < 64; ++sq) {
      const int f = sq & 7;
      const int r = sq >> 3;
      for (int d = 0; d < 8; ++d) {
        std::uint64_t ray = 0;
        int tf = f + kDf[d];
        int tr = r + kDr[d];
        while (tf >= 0 && tf < 8 && tr >= 0 && tr < 8) {
          const int to = tr * 8 + tf;
          between[sq][to] = ray;
          ray |= 1ULL << to;
          tf += kDf[d];
          tr += kDr[d];
        }
        line[d / 2][sq] |= ray;
      }
      for (auto& l : line) l[sq] |= 1ULL << sq;
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

std::uint64_t neighbours(std::uint64_t b) {
  const std::uint64_t not_h = b & ~kFileH;
  const std::uint64_t not_a = b & ~kFileA;
  return (b << 8) | (b >> 8) | (not_h << 1) | (not_a >> 1) | (not_h << 9) | (not_a << 7) |
         (not_h >> 7) | (not_a >> 9);
}

}  // namespace

bool loa_connected(std::uint64_t pieces) {
  if (pieces == 0) return true;
  std::uint64_t reach = pieces & (~pieces + 1);
  for (;;) {
    const std::uint64_t next = (reach | neighbours(reach)) & pieces;
    if (next == reach) break;
    reach = next;
  }
  return reach == pieces;
}

std::size_t Loa::State::hash() const {
  std::uint64_t h = pieces_[0] * 0x9E3779B97F4A7C15ULL;
  h ^= (pieces_[1] + 0x632BE59BD9B4E019ULL) * 0xBF58476D1CE4E5B9ULL;
  h ^= (static_cast<std::uint64_t>(move_count_) << 8 | static_cast<std::uint64_t>(to_move_) << 1 | winner_) *
       0x94D049BB133111EBULL;
  return static_cast<std::size_t>(h ^ (h >> 31));
}

Loa::Loa(int size, std::uint32_t max_plies) : size_(size), max_plies_(max_plies) {
  if (size < 4 || size > 8) throw std::invalid_argument("loa: board size must be in [4, 8]");
  for (int r = 0; r < size; ++r) {
    for (int f = 0; f < size; ++f) board_mask_ |= 1ULL << square(f, r);
  }
  tables();
}

Loa::State Loa::initial_state() const {
  std::uint64_t first = 0;
  std::uint64_t second = 0;
  for (int i = 1; i < size_ - 1; ++i) {
    first |= 1ULL << square(i, 0);
    first |= 1ULL << square(i, size_ - 1);
    second |= 1ULL << square(0, i);
    second |= 1ULL << square(size_ - 1, i);
  }
  State s;
  s.pieces_ = {first, second};
  return s;
}

Loa::State Loa::from_pieces(std::uint64_t first, std::uint64_t second, Player to_move,
                            std::uint32_t move_count) const {
  if ((first | second) & ~board_mask_) throw std::invalid_argument("loa: piece outside the board");
  if (first & second) throw std::invalid_argument("loa: square occupied by both players");
  if (first == 0 || second == 0) throw std::invalid_argument("loa: each player needs at least one piece");
  State s;
  s.pieces_ = {first, second};
  s.to_move_ = to_move;
  s.move_count_ = move_count;
  finish(s, opponent(to_move));
  s.to_move_ = to_move;
  return s;
}

void Loa::finish(State& s, Player mover) const {
  s.to_move_ = opponent(mover);
  s.winner_ = 0;
  if (loa_connected(s.pieces(mover))) {
    s.winner_ = static_cast<std::uint8_t>(index_of(mover) + 1);
  } else if (loa_connected(s.pieces(opponent(mover)))) {
    s.winner_ = static_cast<std::uint8_t>(index_of(opponent(mover)) + 1);
  }
}

std::optional<Outcome> Loa::terminal_outcome(const State& s) const {
  if (auto w = s.winner()) return win_for(*w);
  if (s.move_count_ >= max_plies_) return Outcome::kDraw;
  if (!has_any_move(s)) return loss_for(s.to_move_);
  return std::nullopt;
}

bool Loa::connected(const State& s, Player p) const { return loa_connected(s.pieces(p)); }

int Loa::move_distance(const State& s, int sq, Direction dir) const {
  return std::popcount(s.occupied() & tables().line[static_cast<int>(dir) / 2][sq]);
}

void Loa::generate_moves(const State& s, std::vector<Move>& out) const {
  out.clear();
  const auto& t = tables();
  const std::uint64_t own = s.pieces(s.to_move_);
  const std::uint64_t opp = s.pieces(opponent(s.to_move_));
  const std::uint64_t occ = own | opp;
  for (std::uint64_t rest = own; rest; rest &= rest - 1) {
    const int sq = std::countr_zero(rest);
    const int f = sq & 7;
    const int r = sq >> 3;
    for (int d = 0; d < 8; ++d) {
      const int dist = std::popcount(occ & t.line[d / 2][sq]);
      const int tf = f + kDf[d] * dist;
      const int tr = r + kDr[d] * dist;
      if (tf < 0 || tf >= size_ || tr < 0 || tr >= size_) continue;
      const int to = tr * 8 + tf;
      if ((own >> to) & 1) continue;
      if (t.between[sq][to] & opp) continue;
      out.push_back(Move{static_cast<std::uint8_t>(sq), static_cast<std::uint8_t>(to)});
    }
  }
}

bool Loa::has_any_move(const State& s) const {
  const auto& t = tables();
  const std::uint64_t own = s.pieces(s.to_move_);
  const std::uint64_t opp = s.pieces(opponent(s.to_move_));
  const std::uint64_t occ = own | opp;
  for (std::uint64_t rest = own; rest; rest &= rest - 1) {
    const int sq = std::countr_zero(rest);
    const int f = sq & 7;
    const int r = sq >> 3;
    for (int d = 0; d < 8; ++d) {
      const int dist = std::popcount(occ & t.line[d / 2][sq]);
      const int tf = f + kDf[d] * dist;
      const int tr = r + kDr[d] * dist;
      if (tf < 0 || tf >= size_ || tr < 0 || tr >= size_) continue;
      const int to = tr * 8 + tf;
      if (((own >> to) & 1) == 0 && (t.between[sq][to] & opp) == 0) return true;
    }
  }
  return false;
}

std::optional<std::string> Loa::why_illegal(const State& s, const Move& m) const {
  if (m.from >= 64 || m.to >= 64 || !((board_mask_ >> m.from) & 1) || !((board_mask_ >> m.to) & 1)) {
    return std::string("square off the board");
  }
  const std::uint64_t own = s.pieces(s.to_move_);
  const std::uint64_t opp = s.pieces(opponent(s.to_move_));
  if (!((own >> m.from) & 1)) return "origin " + square_name(m.from) + " holds no piece of the player to move";
  const int df = (m.to & 7) - (m.from & 7);
  const int dr = (m.to >> 3) - (m.from >> 3);
  if (df == 0 && dr == 0) return std::string("origin and destination coincide");
  if (df != 0 && dr != 0 && std::abs(df) != std::abs(dr)) {
    return std::string("destination is not on a straight line from the origin");
  }
  const int travelled = std::max(std::abs(df), std::abs(dr));
  const int line = dr == 0 ? 0 : df == 0 ? 1 : (df > 0) == (dr > 0) ? 2 : 3;
  const int dist = std::popcount(s.occupied() & tables().line[line][m.from]);
  if (travelled != dist) {
    return "a piece moves exactly as many squares as there are pieces on its line (" + std::to_string(dist) +
           "), not " + std::to_string(travelled);
  }
  if ((own >> m.to) & 1) return "destination " + square_name(m.to) + " is occupied by an own piece";
  if (const std::uint64_t blockers = tables().between[m.from][m.to] & opp) {
    return "cannot jump over the opponent piece on " + square_name(std::countr_zero(blockers));
  }
  return std::nullopt;
}

Loa::State Loa::play(const State& s, const Move& m) const {
  State next = s;
  const int me = index_of(s.to_move_);
  const std::uint64_t from = 1ULL << m.from;
  const std::uint64_t to = 1ULL << m.to;
  next.pieces_[me] = (next.pieces_[me] & ~from) | to;
  next.pieces_[1 - me] &= ~to;
  next.move_count_ = s.move_count_ + 1;
  finish(next, s.to_move_);
  return next;
}

std::string Loa::square_name(int sq) const {
  std::string out(1, static_cast<char>('a' + (sq & 7)));
  out += std::to_string((sq >> 3) + 1);
  return out;
}

int Loa::parse_square(std::string_view text) const {
  if (text.size() < 2 || text.size() > 3) throw NotationError("loa: bad square '" + std::string(text) + "'");
  const int file = std::tolower(static_cast<unsigned char>(text[0])) - 'a';
  int rank = 0;
  for (char c : text.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw NotationError("loa: bad square '" + std::string(text) + "'");
    rank = rank * 10 + (c - '0');
  }
  if (file < 0 || file >= size_ || rank < 1 || rank > size_) {
    throw NotationError("loa: square '" + std::string(text) + "' is off the board");
  }
  return square(file, rank - 1);
}

std::string Loa::render_move(const Move& m) const { return square_name(m.from) + "-" + square_name(m.to); }

Loa::Move Loa::parse_move(std::string_view text) const {
  const auto dash = text.find('-');
  if (dash == std::string_view::npos) throw NotationError("loa: expected 'from-to', got '" + std::string(text) + "'");
  return Move{static_cast<std::uint8_t>(parse_square(text.substr(0, dash))),
              static_cast<std::uint8_t>(parse_square(text.substr(dash + 1)))};
}

}  // namespace pnmcts::games
