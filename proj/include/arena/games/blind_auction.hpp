#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "arena/core/game.hpp"

namespace arena::games {

/// Sealed-bid first-price auction over several items. Each seat submits one
/// bid vector "[bid b1 ... bk]" within its budget; the highest positive bid
/// takes an item (lowest seat wins ties) and pays its bid. Seats are ranked
/// by won value minus spend.
class BlindAuction final : public Game {
 public:
  struct Config {
    int items = 5;
    int value_min = 5;
    int value_max = 100;
    int budget = 1000;
  };

  BlindAuction(int num_players, std::uint64_t seed) : BlindAuction(num_players, seed, Config{}) {}
  BlindAuction(int num_players, std::uint64_t seed, Config config);

  int to_move() const override { return static_cast<int>(bids_.size()); }
  LegalActions legal_actions() const override;
  std::string render(int viewer) const override;
  std::unique_ptr<Game> clone() const override { return std::make_unique<BlindAuction>(*this); }
  Visibility action_visibility(int player) const override { return Visibility::only(player); }

  const std::vector<int>& valuations(int seat) const { return values_[static_cast<std::size_t>(seat)]; }
  /// Payoff per seat once resolved.
  const std::vector<int>& payoffs() const { return payoffs_; }
  /// Winner per item once resolved (nullopt: unsold).
  const std::vector<std::optional<int>>& winners() const { return winners_; }

  std::optional<std::vector<int>> parse_bid(std::string_view token) const;

 protected:
  void do_apply(int player, std::string_view token) override;

 private:
  void resolve();

  Config config_;
  std::vector<std::vector<int>> values_;
  std::vector<std::vector<int>> bids_;
  std::vector<int> payoffs_;
  std::vector<std::optional<int>> winners_;
};

const GameInfo& blind_auction_info();

}  // namespace arena::games
