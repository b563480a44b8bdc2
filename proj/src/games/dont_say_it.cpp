#include "arena/games/dont_say_it.hpp"

#include "arena/core/errors.hpp"
#include "arena/core/registry.hpp"
#include "arena/core/rng.hpp"
#include "arena/games/text_util.hpp"
#include "arena/games/wordlists.hpp"

namespace arena::games {

DontSayIt::DontSayIt(int num_players, std::uint64_t seed, Config config)
    : Game(dont_say_it_info(), num_players), config_(config) {
  const auto words = general_words();
  Rng rng(seed, "secret-words");
  const std::size_t first = rng.index(words.size());
  std::size_t second = rng.index(words.size() - 1);
  if (second >= first) ++second;
  secrets_ = {words[first], words[second]};
  announce_secrets();
}

DontSayIt::DontSayIt(std::array<std::string, 2> secrets, Config config)
    : Game(dont_say_it_info(), 2), config_(config), secrets_(std::move(secrets)) {
  announce_secrets();
}

void DontSayIt::announce_secrets() {
  for (int seat = 0; seat < 2; ++seat) {
    tell(seat, "Your secret word is '" + secrets_[static_cast<std::size_t>(seat)] +
                   "'. Get the other player to say it without saying it yourself.");
  }
}

bool DontSayIt::says_word(std::string_view utterance, std::string_view word) {
  const auto target = text::lower(word);
  for (const auto& w : text::words(utterance)) {
    if (w == target) return true;
  }
  return false;
}

LegalActions DontSayIt::legal_actions() const {
  if (is_terminal()) throw TerminalError();
  LegalActions legal;
  const auto words = general_words();
  legal.tokens.assign(words.begin(), words.end());
  legal.exhaustive = false;
  legal.validator = [](std::string_view token) { return !text::trim(token).empty(); };
  return legal;
}

std::string DontSayIt::render(int viewer) const {
  return "Your secret word: " + secret(viewer) + ". Turns played: " + std::to_string(turns_) + "/" +
         std::to_string(config_.max_turns) + ".";
}

void DontSayIt::do_apply(int player, std::string_view token) {
  if (text::trim(token).empty()) throw IllegalAction(std::string(token), "say something");
  ++turns_;
  const int other = 1 - player;
  if (says_word(token, secret(other))) {
    broadcast("Player " + std::to_string(player) + " said '" + secret(other) + "', Player " +
              std::to_string(other) + "'s secret word. Player " + std::to_string(other) + " wins.");
    finish_winner(other, "opponent said the secret word");
    return;
  }
  if (turns_ >= config_.max_turns) {
    broadcast("Nobody said a secret word within " + std::to_string(config_.max_turns) +
              " turns. The game is a draw.");
    finish_draw("turn limit");
    return;
  }
  to_move_ = other;
}

const GameInfo& dont_say_it_info() {
  static const GameInfo info{
      .env_id = "DontSayIt-v0",
      .min_players = 2,
      .max_players = 2,
      .turn_limit = 20,
      .draws_possible = true,
      .rules =
          "You are playing Don't Say It. Each player has a private secret word. You win when the "
          "other player says your word; you lose if you say theirs. Put what you say in brackets, "
          "e.g. [What do you like to eat for breakfast?]. After 20 turns the game is a draw.",
      .skills = uniform_skills({Skill::TheoryOfMind, Skill::MemoryRecall, Skill::Bluffing,
                                Skill::Adaptability}),
      .factory = [](int n, std::uint64_t seed) { return std::make_unique<DontSayIt>(n, seed); },
  };
  return info;
}

}  // namespace arena::games
