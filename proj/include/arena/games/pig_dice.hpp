#pragma once

#include <array>
#include <cstdint>

#include "arena/core/game.hpp"
#include "arena/core/rng.hpp"

namespace arena::games {

/// Pig: "[roll]" adds the die to the turn total (a 1 busts it and passes the
/// turn), "[hold]" banks it. First to the target wins.
class PigDice final : public Game {
 public:
  struct Config {
    int target = 100;
    int die_sides = 6;
  };

  PigDice(int num_players, std::uint64_t seed) : PigDice(num_players, seed, Config{}) {}
  PigDice(int num_players, std::uint64_t seed, Config config);

  int to_move() const override { return to_move_; }
  LegalActions legal_actions() const override;
  std::string render(int viewer) const override;
  std::unique_ptr<Game> clone() const override { return std::make_unique<PigDice>(*this); }
  Ranking standing() const override;

  int score(int seat) const { return scores_[static_cast<std::size_t>(seat)]; }
  int turn_total() const { return turn_total_; }
  int last_roll() const { return last_roll_; }

 protected:
  void do_apply(int player, std::string_view token) override;

 private:
  Config config_;
  Rng dice_;
  std::array<int, 2> scores_{};
  int turn_total_ = 0;
  int last_roll_ = 0;
  int to_move_ = 0;
};

const GameInfo& pig_dice_info();

}  // namespace arena::games
