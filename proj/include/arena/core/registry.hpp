#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "arena/core/game.hpp"
#include "arena/core/skills.hpp"

namespace arena {

using GameFactory = std::function<std::unique_ptr<Game>(int num_players, std::uint64_t seed)>;

struct GameInfo {
  std::string env_id;
  int min_players = 1;
  int max_players = 1;
  /// Hard cap on accepted steps; reaching it ends the game with turn_limit.
  int turn_limit = 100;
  bool draws_possible = false;
  /// Rules prompt; first message every seat sees.
  std::string rules;
  SkillWeights skills;
  GameFactory factory;
};

/// Immutable registry of every built-in game, keyed by env id.
const std::vector<const GameInfo*>& registered_games();

/// nullptr when unknown.
const GameInfo* find_game(std::string_view env_id);

/// Throws UnknownEnvId when unknown.
const GameInfo& game_info(std::string_view env_id);

/// Throws PlayerCountOutOfRange.
std::unique_ptr<Game> create_game(std::string_view env_id, int num_players, std::uint64_t seed);

}  // namespace arena
