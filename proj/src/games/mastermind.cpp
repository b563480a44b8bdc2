#include "arena/games/mastermind.hpp"

#include "arena/core/errors.hpp"
#include "arena/core/registry.hpp"
#include "arena/core/rng.hpp"
#include "arena/games/feedback.hpp"

namespace arena::games {

Mastermind::Mastermind(int num_players, std::uint64_t seed, Config config)
    : Game(mastermind_info(), num_players), config_(config), guesses_left_(config.guesses) {
  Rng rng(seed, "code");
  for (int i = 0; i < config_.length; ++i) secret_.push_back(static_cast<int>(rng.uniform_int(1, config_.symbols)));
  broadcast(render(0));
}

Mastermind::Mastermind(std::vector<int> secret, Config config)
    : Game(mastermind_info(), 1), config_(config), secret_(std::move(secret)), guesses_left_(config.guesses) {
  broadcast(render(0));
}

std::optional<std::vector<int>> Mastermind::parse_code(std::string_view token) const {
  std::vector<int> code;
  for (char c : token) {
    if (c >= '0' && c <= '9') {
      code.push_back(c - '0');
    } else if (c != ' ' && c != ',' && c != '\t') {
      return std::nullopt;
    }
  }
  if (static_cast<int>(code.size()) != config_.length) return std::nullopt;
  for (int d : code) {
    if (d < 1 || d > config_.symbols) return std::nullopt;
  }
  return code;
}

LegalActions Mastermind::legal_actions() const {
  if (is_terminal()) throw TerminalError();
  LegalActions legal;
  std::vector<int> code(static_cast<std::size_t>(config_.length), 1);
  while (true) {
    std::string token;
    for (std::size_t i = 0; i < code.size(); ++i) {
      if (i > 0) token += ' ';
      token += static_cast<char>('0' + code[i]);
    }
    legal.tokens.push_back(std::move(token));
    int pos = config_.length - 1;
    while (pos >= 0 && code[static_cast<std::size_t>(pos)] == config_.symbols) {
      code[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++code[static_cast<std::size_t>(pos)];
  }
  return legal;
}

std::string Mastermind::render(int /*viewer*/) const {
  return "Code length " + std::to_string(config_.length) + ", digits 1-" + std::to_string(config_.symbols) +
         ". Guesses left: " + std::to_string(guesses_left_) + ".";
}

void Mastermind::do_apply(int /*player*/, std::string_view token) {
  const auto code = parse_code(token);
  if (!code) {
    throw IllegalAction(std::string(token), "expected " + std::to_string(config_.length) + " digits 1-" +
                                                std::to_string(config_.symbols));
  }
  --guesses_left_;
  const auto score = mastermind_feedback(*code, secret_, config_.symbols);
  std::string shown;
  for (int d : *code) shown += static_cast<char>('0' + d);
  broadcast("Guess " + shown + ": " + std::to_string(score.black) + " black, " + std::to_string(score.white) +
            " white. Guesses left: " + std::to_string(guesses_left_) + ".");
  if (score.black == config_.length) {
    finish_winner(0, "code broken");
    return;
  }
  if (guesses_left_ == 0) {
    std::string secret;
    for (int d : secret_) secret += static_cast<char>('0' + d);
    broadcast("Out of guesses. The code was " + secret + ".");
    finish(TerminalKind::Failure, {{0}}, "out of guesses");
  }
}

const GameInfo& mastermind_info() {
  static const GameInfo info{
      .env_id = "Mastermind-v0",
      .min_players = 1,
      .max_players = 1,
      .turn_limit = 12,
      .draws_possible = false,
      .rules =
          "You are playing Mastermind. Deduce a hidden code of 4 digits, each 1-6 (repeats "
          "allowed), within 12 guesses. After each guess you get the number of black pegs (right "
          "digit, right place) and white pegs (right digit, wrong place). Submit a guess as "
          "[1 2 3 4].",
      .skills = uniform_skills({Skill::StrategicPlanning, Skill::PatternRecognition,
                                Skill::LogicalReasoning}),
      .factory = [](int n, std::uint64_t seed) { return std::make_unique<Mastermind>(n, seed); },
  };
  return info;
}

}  // namespace arena::games
