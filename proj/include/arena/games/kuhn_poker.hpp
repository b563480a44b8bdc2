#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <string>

#include "arena/core/game.hpp"

namespace arena::games {

/// One hand of Kuhn poker: deck {J, Q, K}, ante 1, a single bet of 1.
/// Actions are check/bet, or fold/call when facing a bet.
class KuhnPoker final : public Game {
 public:
  enum Card { Jack = 0, Queen = 1, King = 2 };
  struct Config {
    int ante = 1;
    int bet = 1;
  };

  KuhnPoker(int num_players, std::uint64_t seed);
  /// Fixed deal, for enumeration.
  explicit KuhnPoker(std::array<Card, 2> deal) : KuhnPoker(std::move(deal), Config{}) {}
  KuhnPoker(std::array<Card, 2> deal, Config config);

  int to_move() const override { return to_move_; }
  LegalActions legal_actions() const override;
  std::string render(int viewer) const override;
  std::unique_ptr<Game> clone() const override { return std::make_unique<KuhnPoker>(*this); }

  Card card(int seat) const { return deal_[static_cast<std::size_t>(seat)]; }
  /// Betting history, one letter per action: c(heck) b(et) f(old) k (call).
  const std::string& history() const { return history_; }
  /// Net chips won by each seat; zero until the hand ends.
  int chips(int seat) const { return chips_[static_cast<std::size_t>(seat)]; }

  static char card_symbol(Card c);

 protected:
  void do_apply(int player, std::string_view token) override;

 private:
  void deal_messages();
  void settle(int winner, int pot_each);

  Config config_;
  std::array<Card, 2> deal_{};
  std::string history_;
  std::array<int, 2> chips_{};
  int to_move_ = 0;
};

const GameInfo& kuhn_poker_info();

}  // namespace arena::games
