#pragma once

#include <cstdint>

#include "arena/core/game.hpp"

namespace arena::games {

/// Find a hidden integer in [low, high] with "higher"/"lower" hints.
class GuessTheNumber final : public Game {
 public:
  struct Config {
    int low = 1;
    int high = 20;
    int guesses = 5;
  };

  GuessTheNumber(int num_players, std::uint64_t seed) : GuessTheNumber(num_players, seed, Config{}) {}
  GuessTheNumber(int num_players, std::uint64_t seed, Config config);

  int to_move() const override { return 0; }
  LegalActions legal_actions() const override;
  std::string render(int viewer) const override;
  std::unique_ptr<Game> clone() const override { return std::make_unique<GuessTheNumber>(*this); }

  int secret() const { return secret_; }
  int guesses_left() const { return guesses_left_; }

 protected:
  void do_apply(int player, std::string_view token) override;

 private:
  Config config_;
  int secret_ = 0;
  int guesses_left_ = 0;
};

const GameInfo& guess_the_number_info();

}  // namespace arena::games
