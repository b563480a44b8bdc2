#pragma once

#include <cstdint>
#include <utility>
#include <set>
#include <string>

#include "arena/core/game.hpp"

namespace arena::games {

/// Guess a hidden word one letter at a time (or the whole word at once)
/// before running out of wrong guesses.
class Hangman final : public Game {
 public:
  struct Config {
    int max_wrong = 6;
  };

  Hangman(int num_players, std::uint64_t seed) : Hangman(num_players, seed, Config{}) {}
  Hangman(int num_players, std::uint64_t seed, Config config);
  explicit Hangman(std::string secret) : Hangman(std::move(secret), Config{}) {}
  Hangman(std::string secret, Config config);

  int to_move() const override { return 0; }
  LegalActions legal_actions() const override;
  std::string render(int viewer) const override;
  std::unique_ptr<Game> clone() const override { return std::make_unique<Hangman>(*this); }

  const std::string& secret() const { return secret_; }
  int wrong() const { return wrong_; }
  /// Secret with unguessed letters as '_'.
  std::string pattern() const;

 protected:
  void do_apply(int player, std::string_view token) override;

 private:
  bool is_legal(std::string_view token) const;

  Config config_;
  std::string secret_;
  std::set<char> guessed_;
  int wrong_ = 0;
};

const GameInfo& hangman_info();

}  // namespace arena::games
