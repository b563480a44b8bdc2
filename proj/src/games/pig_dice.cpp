#include "arena/games/pig_dice.hpp"

#include "arena/core/errors.hpp"
#include "arena/core/registry.hpp"
#include "arena/games/text_util.hpp"

namespace arena::games {

PigDice::PigDice(int num_players, std::uint64_t seed, Config config)
    : Game(pig_dice_info(), num_players), config_(config), dice_(seed, "dice") {
  broadcast("First to " + std::to_string(config_.target) + " points wins. " + render(0));
}

LegalActions PigDice::legal_actions() const {
  if (is_terminal()) throw TerminalError();
  return LegalActions{{"roll", "hold"}};
}

std::string PigDice::render(int /*viewer*/) const {
  return "Scores: Player 0 = " + std::to_string(scores_[0]) + ", Player 1 = " +
         std::to_string(scores_[1]) + ". Player " + std::to_string(to_move_) +
         "'s turn total: " + std::to_string(turn_total_) + ".";
}

Ranking PigDice::standing() const {
  return rank_by_score({static_cast<double>(scores_[0]), static_cast<double>(scores_[1])});
}

void PigDice::do_apply(int player, std::string_view token) {
  const auto action = text::lower(text::trim(token));
  const std::string who = "Player " + std::to_string(player);
  if (action == "roll") {
    last_roll_ = static_cast<int>(dice_.uniform_int(1, config_.die_sides));
    if (last_roll_ == 1) {
      turn_total_ = 0;
      to_move_ = 1 - player;
      broadcast(who + " rolled a 1 and loses the turn total. " + render(player));
    } else {
      turn_total_ += last_roll_;
      broadcast(who + " rolled a " + std::to_string(last_roll_) + ". " + render(player));
    }
    return;
  }
  if (action == "hold") {
    auto& score = scores_[static_cast<std::size_t>(player)];
    score += turn_total_;
    turn_total_ = 0;
    if (score >= config_.target) {
      broadcast(who + " holds and reaches " + std::to_string(score) + " points.");
      finish_winner(player, "reached the target");
      return;
    }
    to_move_ = 1 - player;
    broadcast(who + " holds. " + render(player));
    return;
  }
  throw IllegalAction(std::string(token), "expected [roll] or [hold]");
}

const GameInfo& pig_dice_info() {
  static const GameInfo info{
      .env_id = "PigDice-v0",
      .min_players = 2,
      .max_players = 2,
      .turn_limit = 1000,
      .draws_possible = true,
      .rules =
          "You are playing Pig. On your turn, [roll] a six-sided die to add it to your turn total, "
          "or [hold] to bank the turn total into your score. Rolling a 1 loses the turn total and "
          "ends your turn. The first player to reach 100 points wins.",
      .skills = uniform_skills({Skill::StrategicPlanning, Skill::LogicalReasoning,
                                Skill::UncertaintyEstimation}),
      .factory = [](int n, std::uint64_t seed) { return std::make_unique<PigDice>(n, seed); },
  };
  return info;
}

}  // namespace arena::games
