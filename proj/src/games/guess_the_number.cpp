#include "arena/games/guess_the_number.hpp"

#include "arena/core/errors.hpp"
#include "arena/core/registry.hpp"
#include "arena/core/rng.hpp"
#include "arena/games/text_util.hpp"

namespace arena::games {

GuessTheNumber::GuessTheNumber(int num_players, std::uint64_t seed, Config config)
    : Game(guess_the_number_info(), num_players),
      config_(config),
      secret_(static_cast<int>(Rng(seed, "secret").uniform_int(config.low, config.high))),
      guesses_left_(config.guesses) {
  broadcast(render(0));
}

LegalActions GuessTheNumber::legal_actions() const {
  if (is_terminal()) throw TerminalError();
  LegalActions legal;
  for (int n = config_.low; n <= config_.high; ++n) legal.tokens.push_back(std::to_string(n));
  return legal;
}

std::string GuessTheNumber::render(int /*viewer*/) const {
  return "The number is between " + std::to_string(config_.low) + " and " + std::to_string(config_.high) +
         ". Guesses left: " + std::to_string(guesses_left_) + ".";
}

void GuessTheNumber::do_apply(int /*player*/, std::string_view token) {
  const auto guess = text::parse_int(text::trim(token));
  if (!guess || *guess < config_.low || *guess > config_.high) {
    throw IllegalAction(std::string(token), "guess a whole number in range");
  }
  --guesses_left_;
  if (*guess == secret_) {
    broadcast("Correct! The number was " + std::to_string(secret_) + ".");
    finish_winner(0, "found the number");
    return;
  }
  const char* hint = *guess < secret_ ? "higher" : "lower";
  if (guesses_left_ == 0) {
    broadcast(std::string("Wrong, go ") + hint + ". No guesses left; the number was " +
              std::to_string(secret_) + ".");
    finish(TerminalKind::Failure, {{0}}, "out of guesses");
    return;
  }
  broadcast("Wrong, go " + std::string(hint) + ". Guesses left: " + std::to_string(guesses_left_) + ".");
}

const GameInfo& guess_the_number_info() {
  static const GameInfo info{
      .env_id = "GuessTheNumber-v0",
      .min_players = 1,
      .max_players = 1,
      .turn_limit = 5,
      .draws_possible = false,
      .rules =
          "You are playing Guess The Number. A secret whole number between 1 and 20 has been "
          "chosen. You have 5 guesses; after each wrong guess you are told to go higher or lower. "
          "Submit a guess as [number], e.g. [10].",
      .skills = uniform_skills({Skill::PatternRecognition, Skill::LogicalReasoning,
                                Skill::UncertaintyEstimation}),
      .factory = [](int n, std::uint64_t seed) { return std::make_unique<GuessTheNumber>(n, seed); },
  };
  return info;
}

}  // namespace arena::games
