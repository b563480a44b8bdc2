#include "arena/core/registry.hpp"

#include "arena/core/errors.hpp"
#include "arena/games/blind_auction.hpp"
#include "arena/games/connect_four.hpp"
#include "arena/games/dont_say_it.hpp"
#include "arena/games/guess_the_number.hpp"
#include "arena/games/hangman.hpp"
#include "arena/games/kuhn_poker.hpp"
#include "arena/games/liars_dice.hpp"
#include "arena/games/mastermind.hpp"
#include "arena/games/minesweeper.hpp"
#include "arena/games/nim.hpp"
#include "arena/games/pig_dice.hpp"
#include "arena/games/prisoners_dilemma.hpp"
#include "arena/games/simple_negotiation.hpp"
#include "arena/games/snake.hpp"
#include "arena/games/tic_tac_toe.hpp"
#include "arena/games/tower_of_hanoi.hpp"
#include "arena/games/wordle.hpp"

namespace arena {

const std::vector<const GameInfo*>& registered_games() {
  using namespace games;
  static const std::vector<const GameInfo*> games{
      &blind_auction_info(),   &connect_four_info(),       &dont_say_it_info(),   &guess_the_number_info(),
      &hangman_info(),         &kuhn_poker_info(),         &liars_dice_info(),    &mastermind_info(),
      &minesweeper_info(),     &nim_info(),                &pig_dice_info(),      &prisoners_dilemma_info(),
      &simple_negotiation_info(), &snake_info(),           &tic_tac_toe_info(),   &tower_of_hanoi_info(),
      &wordle_info(),
  };
  return games;
}

const GameInfo* find_game(std::string_view env_id) {
  for (const GameInfo* info : registered_games()) {
    if (info->env_id == env_id) return info;
  }
  return nullptr;
}

const GameInfo& game_info(std::string_view env_id) {
  const GameInfo* info = find_game(env_id);
  if (!info) throw UnknownEnvId(std::string(env_id));
  return *info;
}

std::unique_ptr<Game> create_game(std::string_view env_id, int num_players, std::uint64_t seed) {
  return game_info(env_id).factory(num_players, seed);
}

}  // namespace arena
