#include "arena/games/simple_negotiation.hpp"

#include <regex>

#include "arena/core/errors.hpp"
#include "arena/core/registry.hpp"
#include "arena/core/rng.hpp"
#include "arena/games/text_util.hpp"

namespace arena::games {
namespace {

std::optional<int> resource_index(std::string_view name) {
  const auto lowered = text::lower(name);
  const auto& names = SimpleNegotiation::resource_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (text::lower(names[i]) == lowered) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::string describe(const SimpleNegotiation::Offer& o) {
  const auto& names = SimpleNegotiation::resource_names();
  return std::to_string(o.give_amount) + " " + names[static_cast<std::size_t>(o.give_resource)] +
         " for " + std::to_string(o.receive_amount) + " " +
         names[static_cast<std::size_t>(o.receive_resource)];
}

}  // namespace

const std::array<std::string, SimpleNegotiation::kResources>& SimpleNegotiation::resource_names() {
  static const std::array<std::string, kResources> names{"Wheat", "Wood", "Sheep", "Brick", "Ore"};
  return names;
}

SimpleNegotiation::SimpleNegotiation(int num_players, std::uint64_t seed, Config config)
    : Game(simple_negotiation_info(), num_players), config_(config) {
  Rng rng(seed, "economy");
  for (int seat = 0; seat < 2; ++seat) {
    for (int r = 0; r < kResources; ++r) {
      holdings_[static_cast<std::size_t>(seat)][static_cast<std::size_t>(r)] =
          static_cast<int>(rng.uniform_int(config_.endowment_min, config_.endowment_max));
      values_[static_cast<std::size_t>(seat)][static_cast<std::size_t>(r)] =
          static_cast<int>(rng.uniform_int(config_.value_min, config_.value_max));
    }
  }
  initial_ = holdings_;
  for (int seat = 0; seat < 2; ++seat) tell(seat, render(seat));
}

std::optional<SimpleNegotiation::ParsedAction> SimpleNegotiation::parse(std::string_view token) {
  const auto t = text::lower(text::trim(token));
  if (t == "accept") return ParsedAction{Kind::Accept, {}};
  if (t == "deny") return ParsedAction{Kind::Deny, {}};
  static const std::regex kOffer(
      R"(^offer\s*:?\s*give\s+(\d+)\s+([a-z]+)\s*->\s*receive\s+(\d+)\s+([a-z]+)$)");
  std::smatch m;
  if (!std::regex_match(t, m, kOffer)) return std::nullopt;
  const auto give = resource_index(m[2].str());
  const auto receive = resource_index(m[4].str());
  const auto give_n = text::parse_int(m[1].str());
  const auto receive_n = text::parse_int(m[3].str());
  if (!give || !receive || !give_n || !receive_n || *give_n > 1000000 || *receive_n > 1000000) {
    return std::nullopt;
  }
  Offer offer;
  offer.give_amount = static_cast<int>(*give_n);
  offer.give_resource = *give;
  offer.receive_amount = static_cast<int>(*receive_n);
  offer.receive_resource = *receive;
  return ParsedAction{Kind::Offer, offer};
}

std::string SimpleNegotiation::why_illegal(int player, const ParsedAction& action) const {
  const auto& mine = holdings(player);
  switch (action.kind) {
    case Kind::Deny:
      return {};
    case Kind::Accept: {
      if (!pending_ || pending_->proposer == player) return "there is no offer from the other player";
      if (mine[static_cast<std::size_t>(pending_->receive_resource)] < pending_->receive_amount) {
        return "you do not hold enough to accept";
      }
      return {};
    }
    case Kind::Offer: {
      const auto& o = action.offer;
      if (o.give_amount < 1 || o.receive_amount < 1) return "amounts must be at least 1";
      if (o.give_resource == o.receive_resource) return "trade two different resources";
      if (mine[static_cast<std::size_t>(o.give_resource)] < o.give_amount) return "you do not hold enough";
      return {};
    }
  }
  return "unknown action";
}

bool SimpleNegotiation::is_legal(int player, std::string_view token) const {
  const auto parsed = parse(token);
  return parsed && why_illegal(player, *parsed).empty();
}

LegalActions SimpleNegotiation::legal_actions() const {
  if (is_terminal()) throw TerminalError();
  LegalActions legal;
  legal.exhaustive = false;
  const int player = to_move_;
  legal.tokens.push_back("Deny");
  if (is_legal(player, "Accept")) legal.tokens.push_back("Accept");
  const auto& names = resource_names();
  const auto& mine = holdings(player);
  for (int give = 0; give < kResources; ++give) {
    for (int receive = 0; receive < kResources; ++receive) {
      if (give == receive) continue;
      for (int x = 1; x <= 3 && x <= mine[static_cast<std::size_t>(give)]; ++x) {
        for (int y = 1; y <= 3; ++y) {
          legal.tokens.push_back("Offer: give " + std::to_string(x) + " " + names[static_cast<std::size_t>(give)] +
                                 " -> receive " + std::to_string(y) + " " +
                                 names[static_cast<std::size_t>(receive)]);
        }
      }
    }
  }
  legal.validator = [this, player](std::string_view token) { return is_legal(player, token); };
  return legal;
}

int SimpleNegotiation::gain(int seat) const {
  int total = 0;
  const auto s = static_cast<std::size_t>(seat);
  for (std::size_t r = 0; r < kResources; ++r) total += values_[s][r] * (holdings_[s][r] - initial_[s][r]);
  return total;
}

Ranking SimpleNegotiation::standing() const {
  return rank_by_score({static_cast<double>(gain(0)), static_cast<double>(gain(1))});
}

std::string SimpleNegotiation::render(int viewer) const {
  const auto& names = resource_names();
  std::string out = "Your resources (quantity, value per unit):";
  for (std::size_t r = 0; r < kResources; ++r) {
    out += " " + names[r] + " " + std::to_string(holdings(viewer)[r]) + " @" +
           std::to_string(values(viewer)[r]) + (r + 1 < kResources ? "," : ".");
  }
  out += " Gain so far: " + std::to_string(gain(viewer)) + ". Turns played: " + std::to_string(turns_) +
         "/" + std::to_string(config_.max_turns) + ".";
  if (pending_) {
    out += " Standing offer from Player " + std::to_string(pending_->proposer) + ": gives " +
           describe(*pending_) + ".";
  }
  return out;
}

void SimpleNegotiation::do_apply(int player, std::string_view token) {
  const auto parsed = parse(token);
  if (!parsed) {
    throw IllegalAction(std::string(token), "expected [Offer: give X A -> receive Y B], [Accept] or [Deny]");
  }
  if (auto why = why_illegal(player, *parsed); !why.empty()) throw IllegalAction(std::string(token), why);

  const std::string who = "Player " + std::to_string(player);
  switch (parsed->kind) {
    case Kind::Deny:
      if (pending_ && pending_->proposer != player) broadcast(who + " rejects the offer.");
      pending_.reset();
      break;
    case Kind::Offer: {
      Offer offer = parsed->offer;
      offer.proposer = player;
      pending_ = offer;
      broadcast(who + " offers " + describe(offer) + ".");
      break;
    }
    case Kind::Accept: {
      const Offer o = *pending_;
      auto& giver = holdings_[static_cast<std::size_t>(o.proposer)];
      auto& taker = holdings_[static_cast<std::size_t>(player)];
      giver[static_cast<std::size_t>(o.give_resource)] -= o.give_amount;
      taker[static_cast<std::size_t>(o.give_resource)] += o.give_amount;
      taker[static_cast<std::size_t>(o.receive_resource)] -= o.receive_amount;
      giver[static_cast<std::size_t>(o.receive_resource)] += o.receive_amount;
      pending_.reset();
      broadcast(who + " accepts. Trade executed: Player " + std::to_string(o.proposer) + " gives " +
                describe(o) + ".");
      break;
    }
  }
  end_turn();
}

void SimpleNegotiation::end_turn() {
  ++turns_;
  if (turns_ >= config_.max_turns) {
    const int g0 = gain(0);
    const int g1 = gain(1);
    broadcast("Negotiation over. Gains: Player 0 = " + std::to_string(g0) + ", Player 1 = " +
              std::to_string(g1) + ".");
    if (g0 == g1) {
      finish_draw("equal gains");
    } else {
      finish_winner(g0 > g1 ? 0 : 1, "larger gain");
    }
    return;
  }
  to_move_ = 1 - to_move_;
  tell(to_move_, render(to_move_));
}

const GameInfo& simple_negotiation_info() {
  static const GameInfo info{
      .env_id = "SimpleNegotiation-v0",
      .min_players = 2,
      .max_players = 2,
      .turn_limit = 10,
      .draws_possible = true,
      .rules =
          "You are playing Simple Negotiation. Each player owns Wheat, Wood, Sheep, Brick and Ore "
          "and values each unit privately. Propose a trade with [Offer: give X A -> receive Y B], "
          "take the other player's standing offer with [Accept], or reject it with [Deny]. After "
          "10 turns the player whose holdings gained more in their own valuation wins.",
      .skills = uniform_skills({Skill::StrategicPlanning, Skill::TheoryOfMind, Skill::Bluffing,
                                Skill::Adaptability}),
      .factory = [](int n, std::uint64_t seed) { return std::make_unique<SimpleNegotiation>(n, seed); },
  };
  return info;
}

}  // namespace arena::games
