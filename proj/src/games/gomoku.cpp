#include "pnmcts/games/gomoku.hpp"

#include <cctype>
#include <stdexcept>

namespace pnmcts::games {

namespace {
constexpr int kDirections[4][2] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};
}

std::size_t Gomoku::State::hash() const {
  const std::hash<std::bitset<kMaxCells>> h;
  return h(stones_[0]) * 31 + h(stones_[1]) * 17 + move_count_;
}

Gomoku::Gomoku(int size) : size_(size) {
  if (size < 5 || size > kMaxSize) throw std::invalid_argument("gomoku: board size must be in [5, 15]");
}

Gomoku::State Gomoku::from_stones(const std::vector<int>& first, const std::vector<int>& second) const {
  State s;
  auto place = [&](int c, int who) {
    if (c < 0 || c >= size_ * size_) throw std::invalid_argument("gomoku: cell off the board");
    if (!s.empty(c)) throw std::invalid_argument("gomoku: cell placed twice");
    s.stones_[who].set(c);
  };
  for (int c : first) place(c, 0);
  for (int c : second) place(c, 1);
  const int diff = static_cast<int>(first.size()) - static_cast<int>(second.size());
  if (diff != 0 && diff != 1) throw std::invalid_argument("gomoku: stone counts must differ by 0 or 1");
  s.to_move_ = diff == 0 ? Player::kFirst : Player::kSecond;
  s.move_count_ = static_cast<std::uint32_t>(first.size() + second.size());
  // Check the player who moved last first.
  for (Player p : {opponent(s.to_move_), s.to_move_}) {
    for (int c = 0; c < size_ * size_ && s.winner_ == 0; ++c) {
      if (s.has_stone(p, c) && completes_exact_five(s, c)) s.winner_ = static_cast<std::uint8_t>(index_of(p) + 1);
    }
  }
  return s;
}

int Gomoku::run_length(const std::bitset<kMaxCells>& stones, int cell, int dc, int dr) const {
  const int c0 = cell % size_;
  const int r0 = cell / size_;
  int length = 1;
  for (int sign : {1, -1}) {
    int c = c0 + sign * dc;
    int r = r0 + sign * dr;
    while (c >= 0 && c < size_ && r >= 0 && r < size_ && stones[r * size_ + c]) {
      ++length;
      c += sign * dc;
      r += sign * dr;
    }
  }
  return length;
}

bool Gomoku::completes_exact_five(const State& s, int cell) const {
  const int who = s.stones_[0][cell] ? 0 : s.stones_[1][cell] ? 1 : -1;
  if (who < 0) return false;
  for (const auto& d : kDirections) {
    if (run_length(s.stones_[who], cell, d[0], d[1]) == 5) return true;
  }
  return false;
}

std::optional<Outcome> Gomoku::terminal_outcome(const State& s) const {
  if (auto w = s.winner()) return win_for(*w);
  if (static_cast<int>(s.move_count_) >= size_ * size_) return Outcome::kDraw;
  return std::nullopt;
}

void Gomoku::generate_moves(const State& s, std::vector<Move>& out) const {
  out.clear();
  const auto occupied = s.stones_[0] | s.stones_[1];
  for (int c = 0; c < size_ * size_; ++c) {
    if (!occupied[c]) out.push_back(Move{static_cast<std::uint8_t>(c)});
  }
}

std::optional<std::string> Gomoku::why_illegal(const State& s, const Move& m) const {
  if (m.cell >= size_ * size_) return std::string("cell off the board");
  if (!s.empty(m.cell)) return "cell " + render_move(m) + " is already occupied";
  return std::nullopt;
}

Gomoku::State Gomoku::play(const State& s, const Move& m) const {
  State next = s;
  const int me = index_of(s.to_move_);
  next.stones_[me].set(m.cell);
  next.move_count_ = s.move_count_ + 1;
  next.to_move_ = opponent(s.to_move_);
  if (completes_exact_five(next, m.cell)) next.winner_ = static_cast<std::uint8_t>(me + 1);
  return next;
}

std::string Gomoku::render_move(const Move& m) const {
  std::string out(1, static_cast<char>('a' + m.cell % size_));
  out += std::to_string(m.cell / size_ + 1);
  return out;
}

Gomoku::Move Gomoku::parse_move(std::string_view text) const {
  if (text.size() < 2 || text.size() > 3) throw NotationError("gomoku: bad cell '" + std::string(text) + "'");
  const int column = std::tolower(static_cast<unsigned char>(text[0])) - 'a';
  int row = 0;
  for (char c : text.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw NotationError("gomoku: bad cell '" + std::string(text) + "'");
    row = row * 10 + (c - '0');
  }
  if (column < 0 || column >= size_ || row < 1 || row > size_) {
    throw NotationError("gomoku: cell '" + std::string(text) + "' is off the board");
  }
  return Move{static_cast<std::uint8_t>(cell(column, row - 1))};
}

}  // namespace pnmcts::games
