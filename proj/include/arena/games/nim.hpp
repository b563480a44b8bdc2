#pragma once

#include <cstdint>
#include <vector>

#include "arena/core/game.hpp"

namespace arena::games {

/// Normal-play Nim: "[pile count]" removes count >= 1 from a pile (0-based);
/// whoever takes the last object wins.
class Nim final : public Game {
 public:
  struct Config {
    std::vector<int> piles{3, 4, 5};
  };

  Nim(int num_players, std::uint64_t seed) : Nim(num_players, seed, Config{}) {}
  Nim(int num_players, std::uint64_t seed, Config config);

  int to_move() const override { return to_move_; }
  LegalActions legal_actions() const override;
  std::string render(int viewer) const override;
  std::unique_ptr<Game> clone() const override { return std::make_unique<Nim>(*this); }

  const std::vector<int>& piles() const { return piles_; }

 protected:
  void do_apply(int player, std::string_view token) override;

 private:
  std::vector<int> piles_;
  int to_move_ = 0;
};

const GameInfo& nim_info();

}  // namespace arena::games
