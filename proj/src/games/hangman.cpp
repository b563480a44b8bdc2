#include "arena/games/hangman.hpp"

#include <algorithm>

#include "arena/core/errors.hpp"
#include "arena/core/registry.hpp"
#include "arena/core/rng.hpp"
#include "arena/games/text_util.hpp"
#include "arena/games/wordlists.hpp"

namespace arena::games {
namespace {

bool all_alpha(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= 'a' && c <= 'z'; });
}

}  // namespace

Hangman::Hangman(int num_players, std::uint64_t seed, Config config)
    : Game(hangman_info(), num_players), config_(config) {
  const auto words = general_words();
  secret_ = words[Rng(seed, "word").index(words.size())];
  broadcast(render(0));
}

Hangman::Hangman(std::string secret, Config config)
    : Game(hangman_info(), 1), config_(config), secret_(std::move(secret)) {
  broadcast(render(0));
}

std::string Hangman::pattern() const {
  std::string out;
  for (char c : secret_) out += guessed_.contains(c) ? c : '_';
  return out;
}

bool Hangman::is_legal(std::string_view token) const {
  const auto t = text::lower(text::trim(token));
  if (!all_alpha(t)) return false;
  if (t.size() == 1) return !guessed_.contains(t[0]);
  return t.size() == secret_.size();
}

LegalActions Hangman::legal_actions() const {
  if (is_terminal()) throw TerminalError();
  LegalActions legal;
  for (char c = 'a'; c <= 'z'; ++c) {
    if (!guessed_.contains(c)) legal.tokens.emplace_back(1, c);
  }
  legal.exhaustive = false;
  legal.validator = [this](std::string_view token) { return is_legal(token); };
  return legal;
}

std::string Hangman::render(int /*viewer*/) const {
  std::string shown;
  for (char c : pattern()) {
    if (!shown.empty()) shown += ' ';
    shown += c;
  }
  std::string letters;
  for (char c : guessed_) letters += c;
  return "Word: " + shown + "  Wrong guesses: " + std::to_string(wrong_) + "/" +
         std::to_string(config_.max_wrong) + "  Guessed: " + (letters.empty() ? "-" : letters);
}

void Hangman::do_apply(int /*player*/, std::string_view token) {
  if (!is_legal(token)) {
    throw IllegalAction(std::string(token), "guess a new letter or a word of the right length");
  }
  const auto t = text::lower(text::trim(token));
  if (t.size() == 1) {
    guessed_.insert(t[0]);
    if (secret_.find(t[0]) == std::string::npos) ++wrong_;
  } else if (t == secret_) {
    for (char c : secret_) guessed_.insert(c);
  } else {
    ++wrong_;
  }
  if (pattern() == secret_) {
    broadcast("Solved! The word was '" + secret_ + "'.");
    finish_winner(0, "word solved");
    return;
  }
  if (wrong_ >= config_.max_wrong) {
    broadcast("Out of guesses. The word was '" + secret_ + "'.");
    finish(TerminalKind::Failure, {{0}}, "out of guesses");
    return;
  }
  broadcast(render(0));
}

const GameInfo& hangman_info() {
  static const GameInfo info{
      .env_id = "Hangman-v0",
      .min_players = 1,
      .max_players = 1,
      .turn_limit = 40,
      .draws_possible = false,
      .rules =
          "You are playing Hangman. Uncover the hidden word by guessing one letter at a time, "
          "e.g. [e], or the whole word, e.g. [planet]. Six wrong guesses and you lose. Guessing a "
          "letter twice is an invalid move.",
      .skills = uniform_skills({Skill::LogicalReasoning, Skill::MemoryRecall, Skill::Adaptability}),
      .factory = [](int n, std::uint64_t seed) { return std::make_unique<Hangman>(n, seed); },
  };
  return info;
}

}  // namespace arena::games
