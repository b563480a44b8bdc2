#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "arena/core/game.hpp"
#include "arena/core/rng.hpp"

namespace arena::games {

/// Liar's Dice for 2-6 seats. "[bid q f]" claims at least q dice show face f
/// across the table and must raise quantity, or keep quantity and raise the
/// face. "[call]" challenges the standing bid; the loser of the challenge
/// drops a die and a seat with no dice is out.
class LiarsDice final : public Game {
 public:
  struct Config {
    int dice = 5;
  };
  struct Bid {
    int quantity = 0;
    int face = 0;
    int bidder = 0;
  };

  LiarsDice(int num_players, std::uint64_t seed) : LiarsDice(num_players, seed, Config{}) {}
  LiarsDice(int num_players, std::uint64_t seed, Config config);

  int to_move() const override { return to_move_; }
  LegalActions legal_actions() const override;
  std::string render(int viewer) const override;
  std::unique_ptr<Game> clone() const override { return std::make_unique<LiarsDice>(*this); }
  Ranking standing() const override;

  const std::vector<int>& dice(int seat) const { return dice_[static_cast<std::size_t>(seat)]; }
  const std::optional<Bid>& current_bid() const { return bid_; }
  int dice_in_play() const;
  /// Seats in the order they were knocked out.
  const std::vector<int>& eliminated() const { return eliminated_; }

 protected:
  void do_apply(int player, std::string_view token) override;

 private:
  void roll_all();
  int next_alive(int seat) const;
  bool alive(int seat) const { return !dice_[static_cast<std::size_t>(seat)].empty(); }

  Config config_;
  Rng rng_;
  std::vector<std::vector<int>> dice_;
  std::vector<int> eliminated_;
  std::optional<Bid> bid_;
  int round_ = 1;
  int to_move_ = 0;
};

const GameInfo& liars_dice_info();

}  // namespace arena::games
