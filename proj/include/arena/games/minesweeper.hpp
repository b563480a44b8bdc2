#pragma once

#include <cstdint>
#include <vector>

#include "arena/core/game.hpp"

namespace arena::games {

/// Reveal every safe cell with "[row col]". The first reveal never hits a
/// mine: a mine there is moved to the first free cell in row-major order.
class Minesweeper final : public Game {
 public:
  struct Config {
    int rows = 8;
    int cols = 8;
    int mines = 10;
  };

  Minesweeper(int num_players, std::uint64_t seed) : Minesweeper(num_players, seed, Config{}) {}
  Minesweeper(int num_players, std::uint64_t seed, Config config);

  int to_move() const override { return 0; }
  LegalActions legal_actions() const override;
  std::string render(int viewer) const override;
  std::unique_ptr<Game> clone() const override { return std::make_unique<Minesweeper>(*this); }

  bool is_mine(int row, int col) const { return mines_[index(row, col)]; }
  bool is_revealed(int row, int col) const { return revealed_[index(row, col)]; }
  int adjacent_mines(int row, int col) const;
  int mine_count() const;

 protected:
  void do_apply(int player, std::string_view token) override;

 private:
  std::size_t index(int row, int col) const { return static_cast<std::size_t>(row * config_.cols + col); }
  void flood_reveal(int row, int col);

  Config config_;
  std::vector<bool> mines_;
  std::vector<bool> revealed_;
  int revealed_count_ = 0;
  bool first_reveal_ = true;
};

const GameInfo& minesweeper_info();

}  // namespace arena::games
