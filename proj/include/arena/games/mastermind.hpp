#pragma once

#include <cstdint>
#include <utility>
#include <optional>
#include <vector>

#include "arena/core/game.hpp"

namespace arena::games {

/// Break a hidden code of digits 1..symbols from black/white peg feedback.
class Mastermind final : public Game {
 public:
  struct Config {
    int length = 4;
    int symbols = 6;
    int guesses = 12;
  };

  Mastermind(int num_players, std::uint64_t seed) : Mastermind(num_players, seed, Config{}) {}
  Mastermind(int num_players, std::uint64_t seed, Config config);
  explicit Mastermind(std::vector<int> secret) : Mastermind(std::move(secret), Config{}) {}
  Mastermind(std::vector<int> secret, Config config);

  int to_move() const override { return 0; }
  LegalActions legal_actions() const override;
  std::string render(int viewer) const override;
  std::unique_ptr<Game> clone() const override { return std::make_unique<Mastermind>(*this); }

  const std::vector<int>& secret() const { return secret_; }
  int guesses_left() const { return guesses_left_; }

  /// "1 3 5 6", "1356" and "1,3,5,6" all parse to {1,3,5,6}.
  std::optional<std::vector<int>> parse_code(std::string_view token) const;

 protected:
  void do_apply(int player, std::string_view token) override;

 private:
  Config config_;
  std::vector<int> secret_;
  int guesses_left_ = 0;
};

const GameInfo& mastermind_info();

}  // namespace arena::games
