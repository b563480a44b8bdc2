#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "arena/core/game.hpp"

namespace arena::games {

/// Repeated prisoner's dilemma. Each round both seats choose cooperate or
/// defect; seat 0's choice stays hidden until seat 1 has chosen.
class IteratedPrisonersDilemma final : public Game {
 public:
  struct Config {
    int rounds = 10;
    int temptation = 5;
    int reward = 3;
    int punishment = 1;
    int sucker = 0;
  };

  IteratedPrisonersDilemma(int num_players, std::uint64_t seed)
      : IteratedPrisonersDilemma(num_players, seed, Config{}) {}
  IteratedPrisonersDilemma(int num_players, std::uint64_t seed, Config config);

  int to_move() const override { return to_move_; }
  LegalActions legal_actions() const override;
  std::string render(int viewer) const override;
  std::unique_ptr<Game> clone() const override {
    return std::make_unique<IteratedPrisonersDilemma>(*this);
  }
  Ranking standing() const override;
  Visibility action_visibility(int player) const override { return Visibility::only(player); }

  int score(int seat) const { return scores_[static_cast<std::size_t>(seat)]; }
  int round() const { return round_; }

 protected:
  void do_apply(int player, std::string_view token) override;

 private:
  Config config_;
  std::array<int, 2> scores_{};
  std::optional<bool> first_defects_;
  int round_ = 1;
  int to_move_ = 0;
};

const GameInfo& prisoners_dilemma_info();

}  // namespace arena::games
