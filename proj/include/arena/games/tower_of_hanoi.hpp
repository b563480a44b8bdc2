#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "arena/core/game.hpp"

namespace arena::games {

/// Move the disk stack from peg A to peg C, "[A C]" moving one top disk,
/// never placing a larger disk on a smaller one.
class TowerOfHanoi final : public Game {
 public:
  struct Config {
    int disks = 3;
    int max_moves = 50;
  };

  TowerOfHanoi(int num_players, std::uint64_t seed) : TowerOfHanoi(num_players, seed, Config{}) {}
  TowerOfHanoi(int num_players, std::uint64_t seed, Config config);

  int to_move() const override { return 0; }
  LegalActions legal_actions() const override;
  std::string render(int viewer) const override;
  std::unique_ptr<Game> clone() const override { return std::make_unique<TowerOfHanoi>(*this); }

  /// Bottom to top disk sizes of peg 0..2.
  const std::vector<int>& peg(int index) const { return pegs_[static_cast<std::size_t>(index)]; }
  int moves() const { return moves_; }

 protected:
  void do_apply(int player, std::string_view token) override;

 private:
  Config config_;
  std::array<std::vector<int>, 3> pegs_;
  int moves_ = 0;
};

const GameInfo& tower_of_hanoi_info();

}  // namespace arena::games
