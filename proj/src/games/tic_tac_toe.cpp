#include "arena/games/tic_tac_toe.hpp"

#include <algorithm>

#include "arena/core/errors.hpp"
#include "arena/core/registry.hpp"
#include "arena/games/text_util.hpp"

namespace arena::games {
namespace {

constexpr int kLines[8][3] = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 3, 6},
                              {1, 4, 7}, {2, 5, 8}, {0, 4, 8}, {2, 4, 6}};

}  // namespace

TicTacToe::TicTacToe(int num_players, std::uint64_t /*seed*/) : Game(tic_tac_toe_info(), num_players) {
  board_.fill('.');
  broadcast("Player 0 plays X, Player 1 plays O.\n" + render(0));
}

LegalActions TicTacToe::legal_actions() const {
  if (is_terminal()) throw TerminalError();
  LegalActions legal;
  for (int i = 0; i < 9; ++i) {
    if (board_[static_cast<std::size_t>(i)] == '.') legal.tokens.push_back(std::to_string(i));
  }
  return legal;
}

std::string TicTacToe::render(int /*viewer*/) const {
  std::string out;
  for (int r = 0; r < 3; ++r) {
    if (r > 0) out += "---+---+---\n";
    for (int c = 0; c < 3; ++c) {
      out += ' ';
      out += board_[static_cast<std::size_t>(r * 3 + c)];
      out += c < 2 ? " |" : "\n";
    }
  }
  return out;
}

void TicTacToe::do_apply(int player, std::string_view token) {
  const auto cell = text::parse_int(text::trim(token));
  if (!cell || *cell < 0 || *cell > 8) throw IllegalAction(std::string(token), "cell must be 0-8");
  auto& square = board_[static_cast<std::size_t>(*cell)];
  if (square != '.') throw IllegalAction(std::string(token), "cell is already taken");
  const char mark = player == 0 ? 'X' : 'O';
  square = mark;
  broadcast("Player " + std::to_string(player) + " placed " + mark + " on cell " +
            std::to_string(*cell) + ".\n" + render(player));

  for (const auto& line : kLines) {
    if (board_[static_cast<std::size_t>(line[0])] == mark &&
        board_[static_cast<std::size_t>(line[1])] == mark &&
        board_[static_cast<std::size_t>(line[2])] == mark) {
      finish_winner(player, "three in a row");
      broadcast("Player " + std::to_string(player) + " wins with three in a row.");
      return;
    }
  }
  if (std::find(board_.begin(), board_.end(), '.') == board_.end()) {
    finish_draw("board full");
    broadcast("The board is full. The game is a draw.");
    return;
  }
  to_move_ = 1 - player;
}

const GameInfo& tic_tac_toe_info() {
  static const GameInfo info{
      .env_id = "TicTacToe-v0",
      .min_players = 2,
      .max_players = 2,
      .turn_limit = 9,
      .draws_possible = true,
      .rules =
          "You are playing Tic Tac Toe. Take turns marking a cell of the 3x3 grid; the first to "
          "align three marks in a row, column or diagonal wins. Cells are numbered 0-8 left to "
          "right, top to bottom. Submit your move as [cell], e.g. [4].",
      .skills = uniform_skills({Skill::StrategicPlanning, Skill::LogicalReasoning}),
      .factory = [](int n, std::uint64_t seed) { return std::make_unique<TicTacToe>(n, seed); },
  };
  return info;
}

}  // namespace arena::games
