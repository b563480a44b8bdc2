#pragma once

#include <array>
#include <cstdint>

#include "arena/core/game.hpp"

namespace arena::games {

/// 7 columns x 6 rows; a token drops to the lowest empty row of its column.
class ConnectFour final : public Game {
 public:
  static constexpr int kCols = 7;
  static constexpr int kRows = 6;

  ConnectFour(int num_players, std::uint64_t seed);

  int to_move() const override { return to_move_; }
  LegalActions legal_actions() const override;
  std::string render(int viewer) const override;
  std::unique_ptr<Game> clone() const override { return std::make_unique<ConnectFour>(*this); }

  /// Row 0 is the bottom. '.', 'X' (player 0) or 'O'.
  char cell(int row, int col) const { return board_[static_cast<std::size_t>(row * kCols + col)]; }

 protected:
  void do_apply(int player, std::string_view token) override;

 private:
  bool connects_four(int row, int col) const;

  std::array<char, kRows * kCols> board_;
  int to_move_ = 0;
  int placed_ = 0;
};

const GameInfo& connect_four_info();

}  // namespace arena::games
