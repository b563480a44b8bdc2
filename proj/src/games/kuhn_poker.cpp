#include "arena/games/kuhn_poker.hpp"

#include "arena/core/errors.hpp"
#include "arena/core/registry.hpp"
#include "arena/core/rng.hpp"
#include "arena/games/text_util.hpp"

namespace arena::games {

char KuhnPoker::card_symbol(Card c) {
  switch (c) {
    case Jack: return 'J';
    case Queen: return 'Q';
    case King: return 'K';
  }
  return '?';
}

KuhnPoker::KuhnPoker(int num_players, std::uint64_t seed) : Game(kuhn_poker_info(), num_players) {
  std::array<Card, 3> deck{Jack, Queen, King};
  Rng(seed, "deal").shuffle(std::span<Card>(deck));
  deal_ = {deck[0], deck[1]};
  deal_messages();
}

KuhnPoker::KuhnPoker(std::array<Card, 2> deal, Config config)
    : Game(kuhn_poker_info(), 2), config_(config), deal_(deal) {
  deal_messages();
}

void KuhnPoker::deal_messages() {
  broadcast("Each player antes " + std::to_string(config_.ante) + ". Pot: " +
            std::to_string(2 * config_.ante) + ".");
  for (int seat = 0; seat < 2; ++seat) {
    tell(seat, std::string("Your card is ") + card_symbol(card(seat)) + ".");
  }
}

LegalActions KuhnPoker::legal_actions() const {
  if (is_terminal()) throw TerminalError();
  const bool facing_bet = !history_.empty() && history_.back() == 'b';
  if (facing_bet) return LegalActions{{"fold", "call"}};
  return LegalActions{{"check", "bet"}};
}

std::string KuhnPoker::render(int viewer) const {
  std::string out = "Your card: ";
  out += card_symbol(card(viewer));
  out += ". Opponent card: ";
  out += is_terminal() && history_.back() != 'f' ? std::string(1, card_symbol(card(1 - viewer))) : "hidden";
  out += ". History: " + (history_.empty() ? std::string("-") : history_) + ".";
  return out;
}

void KuhnPoker::settle(int winner, int pot_each) {
  chips_[static_cast<std::size_t>(winner)] = pot_each;
  chips_[static_cast<std::size_t>(1 - winner)] = -pot_each;
}

void KuhnPoker::do_apply(int player, std::string_view token) {
  const auto action = text::lower(text::trim(token));
  const bool facing_bet = !history_.empty() && history_.back() == 'b';
  char code = 0;
  if (!facing_bet && action == "check") code = 'c';
  if (!facing_bet && action == "bet") code = 'b';
  if (facing_bet && action == "fold") code = 'f';
  if (facing_bet && action == "call") code = 'k';
  if (code == 0) {
    throw IllegalAction(std::string(token), facing_bet ? "expected [fold] or [call]" : "expected [check] or [bet]");
  }
  history_ += code;
  const std::string who = "Player " + std::to_string(player);

  const int stake = config_.ante + config_.bet;
  const int showdown_winner = card(0) > card(1) ? 0 : 1;
  auto showdown = [&](int each) {
    settle(showdown_winner, each);
    broadcast(std::string("Showdown: Player 0 has ") + card_symbol(card(0)) + ", Player 1 has " +
              card_symbol(card(1)) + ". Player " + std::to_string(showdown_winner) + " wins " +
              std::to_string(each) + ".");
    finish_winner(showdown_winner, "showdown");
  };

  if (history_ == "c") {
    broadcast(who + " checks.");
  } else if (history_ == "b" || history_ == "cb") {
    broadcast(who + " bets " + std::to_string(config_.bet) + ".");
  } else if (history_ == "cc") {
    broadcast(who + " checks.");
    showdown(config_.ante);
    return;
  } else if (history_ == "bk" || history_ == "cbk") {
    broadcast(who + " calls.");
    showdown(stake);
    return;
  } else if (history_ == "bf" || history_ == "cbf") {
    const int winner = 1 - player;
    settle(winner, config_.ante);
    broadcast(who + " folds. Player " + std::to_string(winner) + " wins " + std::to_string(config_.ante) + ".");
    finish_winner(winner, "fold");
    return;
  }
  to_move_ = 1 - player;
}

const GameInfo& kuhn_poker_info() {
  static const GameInfo info{
      .env_id = "KuhnPoker-v0",
      .min_players = 2,
      .max_players = 2,
      .turn_limit = 3,
      .draws_possible = false,
      .rules =
          "You are playing Kuhn Poker with a three-card deck (J < Q < K). Each player antes 1 and "
          "receives one private card. Player 0 acts first: [check] or [bet] (1 chip). Facing a "
          "bet you may [fold] or [call]. If nobody folds, the higher card wins the pot.",
      .skills = uniform_skills({Skill::StrategicPlanning, Skill::TheoryOfMind, Skill::Bluffing,
                                Skill::UncertaintyEstimation}),
      .factory = [](int n, std::uint64_t seed) { return std::make_unique<KuhnPoker>(n, seed); },
  };
  return info;
}

}  // namespace arena::games
