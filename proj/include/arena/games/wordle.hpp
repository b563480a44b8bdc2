#pragma once

#include <cstdint>
#include <utility>
#include <string>
#include <vector>

#include "arena/core/game.hpp"

namespace arena::games {

/// Guess a five-letter word from the bundled list with G/Y/X feedback.
class Wordle final : public Game {
 public:
  struct Config {
    int guesses = 6;
  };

  Wordle(int num_players, std::uint64_t seed) : Wordle(num_players, seed, Config{}) {}
  Wordle(int num_players, std::uint64_t seed, Config config);
  explicit Wordle(std::string secret) : Wordle(std::move(secret), Config{}) {}
  Wordle(std::string secret, Config config);

  int to_move() const override { return 0; }
  LegalActions legal_actions() const override;
  std::string render(int viewer) const override;
  std::unique_ptr<Game> clone() const override { return std::make_unique<Wordle>(*this); }

  const std::string& secret() const { return secret_; }
  int guesses_left() const { return guesses_left_; }

 protected:
  void do_apply(int player, std::string_view token) override;

 private:
  Config config_;
  std::string secret_;
  std::vector<std::pair<std::string, std::string>> history_;
  int guesses_left_ = 0;
};

const GameInfo& wordle_info();

}  // namespace arena::games
