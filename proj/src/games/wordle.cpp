#include "arena/games/wordle.hpp"

#include "arena/core/errors.hpp"
#include "arena/core/registry.hpp"
#include "arena/core/rng.hpp"
#include "arena/games/feedback.hpp"
#include "arena/games/text_util.hpp"
#include "arena/games/wordlists.hpp"

namespace arena::games {

Wordle::Wordle(int num_players, std::uint64_t seed, Config config)
    : Game(wordle_info(), num_players), config_(config), guesses_left_(config.guesses) {
  const auto words = five_letter_words();
  secret_ = words[Rng(seed, "secret").index(words.size())];
  broadcast(render(0));
}

Wordle::Wordle(std::string secret, Config config)
    : Game(wordle_info(), 1), config_(config), secret_(std::move(secret)), guesses_left_(config.guesses) {
  broadcast(render(0));
}

LegalActions Wordle::legal_actions() const {
  if (is_terminal()) throw TerminalError();
  const auto words = five_letter_words();
  return LegalActions{{words.begin(), words.end()}};
}

std::string Wordle::render(int /*viewer*/) const {
  std::string out;
  for (const auto& [guess, feedback] : history_) out += guess + "  " + feedback + "\n";
  out += "Guesses left: " + std::to_string(guesses_left_) + ".";
  return out;
}

void Wordle::do_apply(int /*player*/, std::string_view token) {
  const auto guess = text::lower(text::trim(token));
  if (guess.size() != 5) throw IllegalAction(std::string(token), "guess a five-letter word");
  if (!is_five_letter_word(guess)) throw IllegalAction(std::string(token), "not in the word list");
  --guesses_left_;
  const auto feedback = wordle_feedback(guess, secret_);
  history_.emplace_back(guess, feedback);
  broadcast("Feedback for '" + guess + "': " + feedback + " (G = right place, Y = wrong place, X = absent). " +
            "Guesses left: " + std::to_string(guesses_left_) + ".");
  if (feedback == "GGGGG") {
    finish_winner(0, "word found");
    return;
  }
  if (guesses_left_ == 0) {
    broadcast("Out of guesses. The word was '" + secret_ + "'.");
    finish(TerminalKind::Failure, {{0}}, "out of guesses");
  }
}

const GameInfo& wordle_info() {
  static const GameInfo info{
      .env_id = "Wordle-v0",
      .min_players = 1,
      .max_players = 1,
      .turn_limit = 6,
      .draws_possible = false,
      .rules =
          "You are playing Wordle. Guess the hidden five-letter word in 6 tries. Each guess must "
          "be a word from the list. Feedback marks each letter G (right letter, right place), Y "
          "(in the word, wrong place) or X (not in the word, or no copies left). Submit [crane].",
      .skills = uniform_skills({Skill::PatternRecognition, Skill::LogicalReasoning,
                                Skill::MemoryRecall}),
      .factory = [](int n, std::uint64_t seed) { return std::make_unique<Wordle>(n, seed); },
  };
  return info;
}

}  // namespace arena::games
