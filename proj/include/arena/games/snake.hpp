#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include "arena/core/game.hpp"
#include "arena/core/rng.hpp"

namespace arena::games {

/// Multi-snake on a grid. Every living snake submits a direction (in seat
/// order, each blind to the others), then the tick resolves at once: snakes
/// die on walls, bodies, or head-on collisions, and grow on apples.
class Snake final : public Game {
 public:
  struct Config {
    int width = 10;
    int height = 10;
    int apples = 3;
    int max_ticks = 100;
  };
  using Cell = std::pair<int, int>;  // (x, y), y grows downward

  Snake(int num_players, std::uint64_t seed) : Snake(num_players, seed, Config{}) {}
  Snake(int num_players, std::uint64_t seed, Config config);

  int to_move() const override;
  LegalActions legal_actions() const override;
  std::string render(int viewer) const override;
  std::unique_ptr<Game> clone() const override { return std::make_unique<Snake>(*this); }
  Ranking standing() const override;
  Visibility action_visibility(int player) const override { return Visibility::only(player); }

  bool alive(int seat) const { return snakes_[static_cast<std::size_t>(seat)].alive; }
  const std::deque<Cell>& body(int seat) const { return snakes_[static_cast<std::size_t>(seat)].body; }
  const std::vector<Cell>& apples() const { return apples_; }
  int tick() const { return tick_; }
  /// Tick at which a seat died, nullopt while alive.
  std::optional<int> death_tick(int seat) const { return snakes_[static_cast<std::size_t>(seat)].died_at; }

 protected:
  void do_apply(int player, std::string_view token) override;

 private:
  struct SnakeState {
    std::deque<Cell> body;  // head first
    bool alive = true;
    std::optional<int> died_at;
    int length_at_end = 1;
  };

  void resolve_tick();
  bool occupied(const Cell& c) const;
  void spawn_apples();
  int alive_count() const;

  Config config_;
  Rng apple_rng_;
  std::vector<SnakeState> snakes_;
  std::vector<Cell> apples_;
  std::vector<std::optional<Cell>> pending_;  // direction deltas submitted this tick
  int tick_ = 0;
};

const GameInfo& snake_info();

}  // namespace arena::games
