#include "arena/games/liars_dice.hpp"

#include <algorithm>
#include <map>

#include "arena/core/errors.hpp"
#include "arena/core/registry.hpp"
#include "arena/games/text_util.hpp"

namespace arena::games {
namespace {

constexpr int kFaces = 6;

std::string dice_text(const std::vector<int>& dice) {
  std::string out;
  for (int d : dice) out += (out.empty() ? "" : " ") + std::to_string(d);
  return out;
}

}  // namespace

LiarsDice::LiarsDice(int num_players, std::uint64_t seed, Config config)
    : Game(liars_dice_info(), num_players),
      config_(config),
      rng_(seed, "dice"),
      dice_(static_cast<std::size_t>(num_players), std::vector<int>(static_cast<std::size_t>(config.dice))) {
  roll_all();
}

void LiarsDice::roll_all() {
  for (int seat = 0; seat < num_players(); ++seat) {
    auto& hand = dice_[static_cast<std::size_t>(seat)];
    for (int& d : hand) d = static_cast<int>(rng_.uniform_int(1, kFaces));
    std::sort(hand.begin(), hand.end());
    if (!hand.empty()) tell(seat, "Round " + std::to_string(round_) + ". Your dice: " + dice_text(hand) + ".");
  }
  broadcast("Round " + std::to_string(round_) + " begins with " + std::to_string(dice_in_play()) +
            " dice in play. Player " + std::to_string(to_move_) + " opens.");
}

int LiarsDice::dice_in_play() const {
  int total = 0;
  for (const auto& hand : dice_) total += static_cast<int>(hand.size());
  return total;
}

int LiarsDice::next_alive(int seat) const {
  for (int step = 1; step <= num_players(); ++step) {
    const int s = (seat + step) % num_players();
    if (alive(s)) return s;
  }
  return seat;
}

LegalActions LiarsDice::legal_actions() const {
  if (is_terminal()) throw TerminalError();
  LegalActions legal;
  if (bid_) legal.tokens.emplace_back("call");
  for (int q = 1; q <= dice_in_play(); ++q) {
    for (int f = 1; f <= kFaces; ++f) {
      if (bid_ && (q < bid_->quantity || (q == bid_->quantity && f <= bid_->face))) continue;
      legal.tokens.push_back("bid " + std::to_string(q) + " " + std::to_string(f));
    }
  }
  return legal;
}

std::string LiarsDice::render(int viewer) const {
  std::string out = "Dice per player:";
  for (int seat = 0; seat < num_players(); ++seat) {
    out += " P" + std::to_string(seat) + "=" + std::to_string(dice_[static_cast<std::size_t>(seat)].size());
  }
  out += "\n";
  if (viewer >= 0 && viewer < num_players() && alive(viewer)) {
    out += "Your dice: " + dice_text(dice_[static_cast<std::size_t>(viewer)]) + "\n";
  }
  if (bid_) {
    out += "Current bid: " + std::to_string(bid_->quantity) + " x " + std::to_string(bid_->face) + " by Player " +
           std::to_string(bid_->bidder) + ".";
  } else {
    out += "No bid yet.";
  }
  return out;
}

Ranking LiarsDice::standing() const {
  std::map<std::size_t, std::vector<int>, std::greater<>> by_dice;
  for (int seat = 0; seat < num_players(); ++seat) {
    if (alive(seat)) by_dice[dice_[static_cast<std::size_t>(seat)].size()].push_back(seat);
  }
  Ranking ranking;
  for (auto& [count, seats] : by_dice) ranking.push_back(seats);
  for (auto it = eliminated_.rbegin(); it != eliminated_.rend(); ++it) ranking.push_back({*it});
  return ranking;
}

void LiarsDice::do_apply(int player, std::string_view token) {
  const auto parts = text::split_ws(text::lower(token));
  if (parts.size() == 1 && parts[0] == "call") {
    if (!bid_) throw IllegalAction(std::string(token), "there is no bid to call");
    int matching = 0;
    std::string reveal = "Player " + std::to_string(player) + " calls. Dice revealed:";
    for (int seat = 0; seat < num_players(); ++seat) {
      const auto& hand = dice_[static_cast<std::size_t>(seat)];
      if (hand.empty()) continue;
      matching += static_cast<int>(std::count(hand.begin(), hand.end(), bid_->face));
      reveal += " P" + std::to_string(seat) + "[" + dice_text(hand) + "]";
    }
    const bool bid_holds = matching >= bid_->quantity;
    const int loser = bid_holds ? player : bid_->bidder;
    reveal += ". There are " + std::to_string(matching) + " dice showing " + std::to_string(bid_->face) +
              "; the bid " + (bid_holds ? "holds" : "fails") + ". Player " + std::to_string(loser) +
              " loses a die.";
    broadcast(reveal);
    dice_[static_cast<std::size_t>(loser)].pop_back();
    if (!alive(loser)) {
      eliminated_.push_back(loser);
      broadcast("Player " + std::to_string(loser) + " is out of dice.");
    }
    bid_.reset();
    const int alive_count = static_cast<int>(
        std::count_if(dice_.begin(), dice_.end(), [](const auto& hand) { return !hand.empty(); }));
    if (alive_count <= 1) {
      finish(TerminalKind::Rank, standing(), "last player with dice");
      return;
    }
    ++round_;
    to_move_ = alive(loser) ? loser : next_alive(loser);
    roll_all();
    return;
  }

  if (parts.size() != 3 || parts[0] != "bid") throw IllegalAction(std::string(token), "expected [bid q f] or [call]");
  const auto q = text::parse_int(parts[1]);
  const auto f = text::parse_int(parts[2]);
  if (!q || !f || *f < 1 || *f > kFaces) throw IllegalAction(std::string(token), "face must be 1-6");
  if (*q < 1 || *q > dice_in_play()) throw IllegalAction(std::string(token), "quantity exceeds the dice in play");
  if (bid_ && (*q < bid_->quantity || (*q == bid_->quantity && *f <= bid_->face))) {
    throw IllegalAction(std::string(token), "a bid must raise the quantity, or keep it and raise the face");
  }
  bid_ = Bid{static_cast<int>(*q), static_cast<int>(*f), player};
  broadcast("Player " + std::to_string(player) + " bids " + std::to_string(*q) + " x " + std::to_string(*f) + ".");
  to_move_ = next_alive(player);
}

const GameInfo& liars_dice_info() {
  static const GameInfo info{
      .env_id = "LiarsDice-v0",
      .min_players = 2,
      .max_players = 6,
      .turn_limit = 2000,
      .draws_possible = false,
      .rules =
          "You are playing Liar's Dice. Everyone holds 5 hidden dice. On your turn either raise "
          "the bid with [bid q f], claiming at least q dice on the table show face f, or challenge "
          "the last bid with [call]. A new bid must have a higher quantity, or the same quantity "
          "and a higher face. On a call all dice are shown: if the bid holds the caller loses a "
          "die, otherwise the bidder does. The last player with dice wins.",
      .skills = uniform_skills({Skill::TheoryOfMind, Skill::MemoryRecall, Skill::Bluffing,
                                Skill::UncertaintyEstimation}),
      .factory = [](int n, std::uint64_t seed) { return std::make_unique<LiarsDice>(n, seed); },
  };
  return info;
}

}  // namespace arena::games
