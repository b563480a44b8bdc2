#include "arena/games/minesweeper.hpp"

#include <algorithm>
#include <numeric>

#include "arena/core/errors.hpp"
#include "arena/core/registry.hpp"
#include "arena/core/rng.hpp"
#include "arena/games/text_util.hpp"

namespace arena::games {

Minesweeper::Minesweeper(int num_players, std::uint64_t seed, Config config)
    : Game(minesweeper_info(), num_players),
      config_(config),
      mines_(static_cast<std::size_t>(config.rows * config.cols), false),
      revealed_(static_cast<std::size_t>(config.rows * config.cols), false) {
  std::vector<int> cells(mines_.size());
  std::iota(cells.begin(), cells.end(), 0);
  Rng(seed, "mines").shuffle(std::span<int>(cells));
  for (int i = 0; i < config_.mines; ++i) mines_[static_cast<std::size_t>(cells[static_cast<std::size_t>(i)])] = true;
  broadcast(render(0));
}

int Minesweeper::adjacent_mines(int row, int col) const {
  int count = 0;
  for (int dr = -1; dr <= 1; ++dr) {
    for (int dc = -1; dc <= 1; ++dc) {
      const int r = row + dr;
      const int c = col + dc;
      if ((dr || dc) && r >= 0 && r < config_.rows && c >= 0 && c < config_.cols && is_mine(r, c)) ++count;
    }
  }
  return count;
}

int Minesweeper::mine_count() const { return static_cast<int>(std::count(mines_.begin(), mines_.end(), true)); }

LegalActions Minesweeper::legal_actions() const {
  if (is_terminal()) throw TerminalError();
  LegalActions legal;
  for (int r = 0; r < config_.rows; ++r) {
    for (int c = 0; c < config_.cols; ++c) {
      if (!is_revealed(r, c)) legal.tokens.push_back(std::to_string(r) + " " + std::to_string(c));
    }
  }
  return legal;
}

std::string Minesweeper::render(int /*viewer*/) const {
  const bool show_mines = is_terminal();
  std::string out = "   ";
  for (int c = 0; c < config_.cols; ++c) out += std::to_string(c % 10) + (c + 1 < config_.cols ? " " : "\n");
  for (int r = 0; r < config_.rows; ++r) {
    out += std::to_string(r % 10) + "  ";
    for (int c = 0; c < config_.cols; ++c) {
      char ch = '#';
      if (is_revealed(r, c)) {
        const int n = adjacent_mines(r, c);
        ch = n == 0 ? '.' : static_cast<char>('0' + n);
      } else if (show_mines && is_mine(r, c)) {
        ch = '*';
      }
      out += ch;
      out += c + 1 < config_.cols ? " " : "\n";
    }
  }
  return out;
}

void Minesweeper::flood_reveal(int row, int col) {
  std::vector<std::pair<int, int>> stack{{row, col}};
  while (!stack.empty()) {
    const auto [r, c] = stack.back();
    stack.pop_back();
    if (r < 0 || r >= config_.rows || c < 0 || c >= config_.cols) continue;
    if (is_revealed(r, c) || is_mine(r, c)) continue;
    revealed_[index(r, c)] = true;
    ++revealed_count_;
    if (adjacent_mines(r, c) != 0) continue;
    for (int dr = -1; dr <= 1; ++dr) {
      for (int dc = -1; dc <= 1; ++dc) {
        if (dr || dc) stack.emplace_back(r + dr, c + dc);
      }
    }
  }
}

void Minesweeper::do_apply(int /*player*/, std::string_view token) {
  const auto parts = text::split_ws(token);
  if (parts.size() != 2) throw IllegalAction(std::string(token), "expected [row col]");
  const auto row = text::parse_int(parts[0]);
  const auto col = text::parse_int(parts[1]);
  if (!row || !col || *row < 0 || *row >= config_.rows || *col < 0 || *col >= config_.cols) {
    throw IllegalAction(std::string(token), "cell is off the board");
  }
  const int r = static_cast<int>(*row);
  const int c = static_cast<int>(*col);
  if (is_revealed(r, c)) throw IllegalAction(std::string(token), "cell already revealed");

  if (first_reveal_) {
    first_reveal_ = false;
    if (is_mine(r, c)) {
      const std::size_t here = index(r, c);
      for (std::size_t i = 0; i < mines_.size(); ++i) {
        if (i != here && !mines_[i]) {
          mines_[i] = true;
          break;
        }
      }
      mines_[here] = false;
    }
  }
  if (is_mine(r, c)) {
    revealed_[index(r, c)] = true;
    broadcast("Boom! Cell (" + std::to_string(r) + ", " + std::to_string(c) + ") was a mine.\n" + render(0));
    finish(TerminalKind::Failure, {{0}}, "hit a mine");
    return;
  }
  flood_reveal(r, c);
  if (revealed_count_ == config_.rows * config_.cols - config_.mines) {
    finish_winner(0, "cleared the board");
    broadcast("All safe cells revealed. You win!\n" + render(0));
    return;
  }
  broadcast(render(0));
}

const GameInfo& minesweeper_info() {
  static const GameInfo info{
      .env_id = "Minesweeper-v0",
      .min_players = 1,
      .max_players = 1,
      .turn_limit = 64,
      .draws_possible = false,
      .rules =
          "You are playing Minesweeper on an 8x8 grid hiding 10 mines. Reveal a cell with "
          "[row col], e.g. [3 4]. A revealed number counts the mines around it. Reveal every safe "
          "cell to win; revealing a mine loses. Your first reveal is always safe.",
      .skills = uniform_skills({Skill::PatternRecognition, Skill::LogicalReasoning,
                                Skill::UncertaintyEstimation}),
      .factory = [](int n, std::uint64_t seed) { return std::make_unique<Minesweeper>(n, seed); },
  };
  return info;
}

}  // namespace arena::games
