#include "arena/games/blind_auction.hpp"

#include <numeric>

#include "arena/core/errors.hpp"
#include "arena/core/registry.hpp"
#include "arena/core/rng.hpp"
#include "arena/games/text_util.hpp"

namespace arena::games {
namespace {

std::string bid_token(const std::vector<int>& bids) {
  std::string out = "bid";
  for (int b : bids) out += " " + std::to_string(b);
  return out;
}

}  // namespace

BlindAuction::BlindAuction(int num_players, std::uint64_t seed, Config config)
    : Game(blind_auction_info(), num_players), config_(config) {
  Rng rng(seed, "valuations");
  for (int seat = 0; seat < num_players; ++seat) {
    std::vector<int> values;
    for (int item = 0; item < config_.items; ++item) {
      values.push_back(static_cast<int>(rng.uniform_int(config_.value_min, config_.value_max)));
    }
    values_.push_back(values);
    tell(seat, render(seat));
  }
}

std::optional<std::vector<int>> BlindAuction::parse_bid(std::string_view token) const {
  auto parts = text::split_ws(text::lower(token));
  if (!parts.empty() && parts.front() == "bid") parts.erase(parts.begin());
  if (static_cast<int>(parts.size()) != config_.items) return std::nullopt;
  std::vector<int> bids;
  long long total = 0;
  for (const auto& p : parts) {
    const auto v = text::parse_int(p);
    if (!v || *v < 0 || *v > config_.budget) return std::nullopt;
    total += *v;
    bids.push_back(static_cast<int>(*v));
  }
  if (total > config_.budget) return std::nullopt;
  return bids;
}

LegalActions BlindAuction::legal_actions() const {
  if (is_terminal()) throw TerminalError();
  const auto& values = valuations(to_move());
  std::vector<int> zero(values.size(), 0);
  std::vector<int> half;
  std::vector<int> most;
  for (int v : values) {
    half.push_back(v / 2);
    most.push_back(v * 3 / 4);
  }
  LegalActions legal{{bid_token(zero), bid_token(half), bid_token(most)}, false};
  legal.validator = [this](std::string_view token) { return parse_bid(token).has_value(); };
  return legal;
}

std::string BlindAuction::render(int viewer) const {
  std::string out = "Items 0-" + std::to_string(config_.items - 1) + ". Budget " + std::to_string(config_.budget) + ".";
  if (viewer >= 0 && viewer < static_cast<int>(values_.size())) {
    out += " Your valuations:";
    for (int v : values_[static_cast<std::size_t>(viewer)]) out += " " + std::to_string(v);
    out += ".";
  }
  out += " Bids received: " + std::to_string(bids_.size()) + "/" + std::to_string(num_players()) + ".";
  return out;
}

void BlindAuction::do_apply(int player, std::string_view token) {
  auto bids = parse_bid(token);
  if (!bids) {
    throw IllegalAction(std::string(token), "expected [bid b0 ... b" + std::to_string(config_.items - 1) +
                                                "] with non-negative bids summing to at most the budget");
  }
  bids_.push_back(std::move(*bids));
  broadcast("Player " + std::to_string(player) + " submitted a sealed bid.");
  if (static_cast<int>(bids_.size()) == num_players()) resolve();
}

void BlindAuction::resolve() {
  payoffs_.assign(static_cast<std::size_t>(num_players()), 0);
  winners_.assign(static_cast<std::size_t>(config_.items), std::nullopt);
  std::string summary = "All bids are in.";
  for (int item = 0; item < config_.items; ++item) {
    const auto i = static_cast<std::size_t>(item);
    int best = 0;
    for (int seat = 0; seat < num_players(); ++seat) {
      const int b = bids_[static_cast<std::size_t>(seat)][i];
      if (b > best) {
        best = b;
        winners_[i] = seat;
      }
    }
    if (winners_[i]) {
      const auto w = static_cast<std::size_t>(*winners_[i]);
      payoffs_[w] += values_[w][i] - best;
      summary += " Item " + std::to_string(item) + ": Player " + std::to_string(*winners_[i]) + " for " +
                 std::to_string(best) + ".";
    } else {
      summary += " Item " + std::to_string(item) + ": unsold.";
    }
  }
  summary += " Payoffs:";
  std::vector<double> scores;
  for (int seat = 0; seat < num_players(); ++seat) {
    summary += " P" + std::to_string(seat) + "=" + std::to_string(payoffs_[static_cast<std::size_t>(seat)]);
    scores.push_back(payoffs_[static_cast<std::size_t>(seat)]);
  }
  broadcast(summary);
  finish(TerminalKind::Rank, rank_by_score(scores), "auction resolved");
}

const GameInfo& blind_auction_info() {
  static const GameInfo info{
      .env_id = "BlindAuction-v0",
      .min_players = 2,
      .max_players = 6,
      .turn_limit = 6,
      .draws_possible = true,
      .rules =
          "You are playing a sealed-bid auction of 5 items. Each player privately values every "
          "item and has a budget of 1000. Submit one bid per item in a single move, e.g. "
          "[bid 10 0 35 0 20]; bids must be non-negative and sum to at most the budget. The "
          "highest positive bid wins an item (lowest seat on ties) and pays its bid. Your payoff "
          "is the value of items won minus what you paid; the highest payoff wins.",
      .skills = uniform_skills({Skill::TheoryOfMind, Skill::Persuasion, Skill::UncertaintyEstimation}),
      .factory = [](int n, std::uint64_t seed) { return std::make_unique<BlindAuction>(n, seed); },
  };
  return info;
}

}  // namespace arena::games
