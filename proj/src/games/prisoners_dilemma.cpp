#include "arena/games/prisoners_dilemma.hpp"

#include "arena/core/errors.hpp"
#include "arena/core/registry.hpp"
#include "arena/games/text_util.hpp"

namespace arena::games {
namespace {

std::optional<bool> parse_defect(std::string_view token) {
  const auto t = text::lower(text::trim(token));
  if (t == "cooperate" || t == "c") return false;
  if (t == "defect" || t == "d") return true;
  return std::nullopt;
}

const char* verb(bool defects) { return defects ? "defected" : "cooperated"; }

}  // namespace

IteratedPrisonersDilemma::IteratedPrisonersDilemma(int num_players, std::uint64_t /*seed*/, Config config)
    : Game(prisoners_dilemma_info(), num_players), config_(config) {
  broadcast("Round 1 of " + std::to_string(config_.rounds) + ". " + render(0));
}

LegalActions IteratedPrisonersDilemma::legal_actions() const {
  if (is_terminal()) throw TerminalError();
  return LegalActions{{"cooperate", "defect"}};
}

std::string IteratedPrisonersDilemma::render(int /*viewer*/) const {
  return "Scores: Player 0 = " + std::to_string(scores_[0]) + ", Player 1 = " +
         std::to_string(scores_[1]) + ".";
}

Ranking IteratedPrisonersDilemma::standing() const {
  return rank_by_score({static_cast<double>(scores_[0]), static_cast<double>(scores_[1])});
}

void IteratedPrisonersDilemma::do_apply(int player, std::string_view token) {
  const auto defects = parse_defect(token);
  if (!defects) throw IllegalAction(std::string(token), "expected [cooperate] or [defect]");
  if (player == 0) {
    first_defects_ = *defects;
    to_move_ = 1;
    return;
  }
  const bool d0 = *first_defects_;
  const bool d1 = *defects;
  int p0 = 0;
  int p1 = 0;
  if (!d0 && !d1) {
    p0 = p1 = config_.reward;
  } else if (d0 && d1) {
    p0 = p1 = config_.punishment;
  } else if (d0) {
    p0 = config_.temptation;
    p1 = config_.sucker;
  } else {
    p0 = config_.sucker;
    p1 = config_.temptation;
  }
  scores_[0] += p0;
  scores_[1] += p1;
  broadcast("Round " + std::to_string(round_) + ": Player 0 " + verb(d0) + ", Player 1 " + verb(d1) +
            ". Payoffs: " + std::to_string(p0) + " / " + std::to_string(p1) + ". " + render(0));
  first_defects_.reset();
  to_move_ = 0;
  if (round_ == config_.rounds) {
    if (scores_[0] == scores_[1]) {
      finish_draw("equal totals");
      broadcast("Final totals are equal. The game is a draw.");
    } else {
      const int winner = scores_[0] > scores_[1] ? 0 : 1;
      finish_winner(winner, "higher total");
      broadcast("Player " + std::to_string(winner) + " wins with the higher total.");
    }
    return;
  }
  ++round_;
  broadcast("Round " + std::to_string(round_) + " of " + std::to_string(config_.rounds) + ".");
}

const GameInfo& prisoners_dilemma_info() {
  static const GameInfo info{
      .env_id = "IteratedPrisonersDilemma-v0",
      .min_players = 2,
      .max_players = 2,
      .turn_limit = 20,
      .draws_possible = true,
      .rules =
          "You are playing the Iterated Prisoner's Dilemma for 10 rounds. Each round both players "
          "secretly choose [cooperate] or [defect]. Both cooperate: 3 points each. Both defect: 1 "
          "point each. A defector facing a cooperator gets 5, the cooperator 0. The higher total "
          "after the last round wins.",
      .skills = uniform_skills({Skill::StrategicPlanning, Skill::TheoryOfMind,
                                Skill::UncertaintyEstimation, Skill::Adaptability}),
      .factory = [](int n, std::uint64_t seed) {
        return std::make_unique<IteratedPrisonersDilemma>(n, seed);
      },
  };
  return info;
}

}  // namespace arena::games
