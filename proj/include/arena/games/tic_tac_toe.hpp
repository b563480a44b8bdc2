#pragma once

#include <array>
#include <cstdint>

#include "arena/core/game.hpp"

namespace arena::games {

/// 3x3 noughts and crosses; cells 0-8 row-major, player 0 plays X.
class TicTacToe final : public Game {
 public:
  TicTacToe(int num_players, std::uint64_t seed);

  int to_move() const override { return to_move_; }
  LegalActions legal_actions() const override;
  std::string render(int viewer) const override;
  std::unique_ptr<Game> clone() const override { return std::make_unique<TicTacToe>(*this); }

  const std::array<char, 9>& board() const { return board_; }

 protected:
  void do_apply(int player, std::string_view token) override;

 private:
  std::array<char, 9> board_;
  int to_move_ = 0;
};

const GameInfo& tic_tac_toe_info();

}  // namespace arena::games
