#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <string>

#include "arena/core/game.hpp"

namespace arena::games {

/// Each seat holds a secret word; a seat wins as soon as the opponent says
/// it (whole word, case-insensitive, punctuation stripped).
class DontSayIt final : public Game {
 public:
  struct Config {
    int max_turns = 20;
  };

  DontSayIt(int num_players, std::uint64_t seed) : DontSayIt(num_players, seed, Config{}) {}
  DontSayIt(int num_players, std::uint64_t seed, Config config);
  /// Fixed secrets, for tests.
  explicit DontSayIt(std::array<std::string, 2> secrets) : DontSayIt(std::move(secrets), Config{}) {}
  DontSayIt(std::array<std::string, 2> secrets, Config config);

  int to_move() const override { return to_move_; }
  LegalActions legal_actions() const override;
  std::string render(int viewer) const override;
  std::unique_ptr<Game> clone() const override { return std::make_unique<DontSayIt>(*this); }

  const std::string& secret(int seat) const { return secrets_[static_cast<std::size_t>(seat)]; }

  /// True when `utterance` contains `word` as a whole word.
  static bool says_word(std::string_view utterance, std::string_view word);

 protected:
  void do_apply(int player, std::string_view token) override;

 private:
  void announce_secrets();

  Config config_;
  std::array<std::string, 2> secrets_;
  int turns_ = 0;
  int to_move_ = 0;
};

const GameInfo& dont_say_it_info();

}  // namespace arena::games
