#include "arena/games/connect_four.hpp"

#include "arena/core/errors.hpp"
#include "arena/core/registry.hpp"
#include "arena/games/text_util.hpp"

namespace arena::games {

ConnectFour::ConnectFour(int num_players, std::uint64_t /*seed*/)
    : Game(connect_four_info(), num_players) {
  board_.fill('.');
  broadcast("Player 0 plays X, Player 1 plays O.\n" + render(0));
}

LegalActions ConnectFour::legal_actions() const {
  if (is_terminal()) throw TerminalError();
  LegalActions legal;
  for (int c = 0; c < kCols; ++c) {
    if (cell(kRows - 1, c) == '.') legal.tokens.push_back(std::to_string(c));
  }
  return legal;
}

std::string ConnectFour::render(int /*viewer*/) const {
  std::string out;
  for (int r = kRows - 1; r >= 0; --r) {
    for (int c = 0; c < kCols; ++c) {
      out += cell(r, c);
      out += c + 1 < kCols ? " " : "\n";
    }
  }
  out += "0 1 2 3 4 5 6\n";
  return out;
}

bool ConnectFour::connects_four(int row, int col) const {
  const char mark = cell(row, col);
  constexpr int kDirs[4][2] = {{0, 1}, {1, 0}, {1, 1}, {1, -1}};
  for (const auto& d : kDirs) {
    int run = 1;
    for (int sign : {1, -1}) {
      int r = row + sign * d[0];
      int c = col + sign * d[1];
      while (r >= 0 && r < kRows && c >= 0 && c < kCols && cell(r, c) == mark) {
        ++run;
        r += sign * d[0];
        c += sign * d[1];
      }
    }
    if (run >= 4) return true;
  }
  return false;
}

void ConnectFour::do_apply(int player, std::string_view token) {
  const auto col = text::parse_int(text::trim(token));
  if (!col || *col < 0 || *col >= kCols) throw IllegalAction(std::string(token), "column must be 0-6");
  const int c = static_cast<int>(*col);
  int row = 0;
  while (row < kRows && cell(row, c) != '.') ++row;
  if (row == kRows) throw IllegalAction(std::string(token), "column is full");

  const char mark = player == 0 ? 'X' : 'O';
  board_[static_cast<std::size_t>(row * kCols + c)] = mark;
  ++placed_;
  broadcast("Player " + std::to_string(player) + " dropped " + mark + " into column " +
            std::to_string(c) + ".\n" + render(player));
  if (connects_four(row, c)) {
    finish_winner(player, "four in a row");
    broadcast("Player " + std::to_string(player) + " connects four and wins.");
    return;
  }
  if (placed_ == kRows * kCols) {
    finish_draw("board full");
    broadcast("The board is full. The game is a draw.");
    return;
  }
  to_move_ = 1 - player;
}

const GameInfo& connect_four_info() {
  static const GameInfo info{
      .env_id = "ConnectFour-v0",
      .min_players = 2,
      .max_players = 2,
      .turn_limit = 42,
      .draws_possible = true,
      .rules =
          "You are playing Connect Four on a 7-column, 6-row board. Drop a token into a column; it "
          "falls to the lowest empty row. Connect four tokens horizontally, vertically or "
          "diagonally to win. Submit your move as [column], columns 0-6, e.g. [3].",
      .skills = uniform_skills({Skill::StrategicPlanning, Skill::SpatialThinking,
                                Skill::PatternRecognition, Skill::LogicalReasoning}),
      .factory = [](int n, std::uint64_t seed) { return std::make_unique<ConnectFour>(n, seed); },
  };
  return info;
}

}  // namespace arena::games
