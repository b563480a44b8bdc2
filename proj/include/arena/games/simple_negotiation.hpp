#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "arena/core/game.hpp"

namespace arena::games {

/// Two traders with private per-unit values swap resources for a fixed number
/// of turns. "[Offer: give X A -> receive Y B]" proposes, "[Accept]" takes
/// the opponent's standing offer, "[Deny]" rejects it. The larger gain in own
/// valuation wins.
class SimpleNegotiation final : public Game {
 public:
  static constexpr int kResources = 5;
  using Bundle = std::array<int, kResources>;

  struct Config {
    int max_turns = 10;
    int endowment_min = 5;
    int endowment_max = 25;
    int value_min = 5;
    int value_max = 15;
  };

  struct Offer {
    int proposer = 0;
    int give_amount = 0;
    int give_resource = 0;
    int receive_amount = 0;
    int receive_resource = 0;
  };

  enum class Kind { Offer, Accept, Deny };
  struct ParsedAction {
    Kind kind;
    Offer offer;
  };

  SimpleNegotiation(int num_players, std::uint64_t seed)
      : SimpleNegotiation(num_players, seed, Config{}) {}
  SimpleNegotiation(int num_players, std::uint64_t seed, Config config);

  int to_move() const override { return to_move_; }
  LegalActions legal_actions() const override;
  std::string render(int viewer) const override;
  std::unique_ptr<Game> clone() const override { return std::make_unique<SimpleNegotiation>(*this); }
  Ranking standing() const override;

  static const std::array<std::string, kResources>& resource_names();
  static std::optional<ParsedAction> parse(std::string_view token);

  const Bundle& holdings(int seat) const { return holdings_[static_cast<std::size_t>(seat)]; }
  const Bundle& values(int seat) const { return values_[static_cast<std::size_t>(seat)]; }
  const std::optional<Offer>& pending() const { return pending_; }
  /// Change in own valuation of holdings since the start.
  int gain(int seat) const;

  /// Whether `player` may send `token` in the current state.
  bool is_legal(int player, std::string_view token) const;

 protected:
  void do_apply(int player, std::string_view token) override;

 private:
  std::string why_illegal(int player, const ParsedAction& action) const;
  void end_turn();

  Config config_;
  std::array<Bundle, 2> holdings_{};
  std::array<Bundle, 2> initial_{};
  std::array<Bundle, 2> values_{};
  std::optional<Offer> pending_;
  int turns_ = 0;
  int to_move_ = 0;
};

const GameInfo& simple_negotiation_info();

}  // namespace arena::games
