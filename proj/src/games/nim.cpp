#include "arena/games/nim.hpp"

#include <numeric>

#include "arena/core/errors.hpp"
#include "arena/core/registry.hpp"
#include "arena/games/text_util.hpp"

namespace arena::games {

Nim::Nim(int num_players, std::uint64_t /*seed*/, Config config)
    : Game(nim_info(), num_players), piles_(std::move(config.piles)) {
  broadcast(render(0));
  if (std::accumulate(piles_.begin(), piles_.end(), 0) == 0) {
    // Nothing to take: the player to move has already lost.
    finish_winner(1, "no objects left");
  }
}

LegalActions Nim::legal_actions() const {
  if (is_terminal()) throw TerminalError();
  LegalActions legal;
  for (std::size_t p = 0; p < piles_.size(); ++p) {
    for (int k = 1; k <= piles_[p]; ++k) legal.tokens.push_back(std::to_string(p) + " " + std::to_string(k));
  }
  return legal;
}

std::string Nim::render(int /*viewer*/) const {
  std::string out = "Piles:";
  for (std::size_t p = 0; p < piles_.size(); ++p) {
    out += " [" + std::to_string(p) + "]=" + std::to_string(piles_[p]);
  }
  return out;
}

void Nim::do_apply(int player, std::string_view token) {
  const auto parts = text::split_ws(token);
  if (parts.size() != 2) throw IllegalAction(std::string(token), "expected [pile count]");
  const auto pile = text::parse_int(parts[0]);
  const auto count = text::parse_int(parts[1]);
  if (!pile || *pile < 0 || *pile >= static_cast<long long>(piles_.size())) {
    throw IllegalAction(std::string(token), "no such pile");
  }
  if (!count || *count < 1 || *count > piles_[static_cast<std::size_t>(*pile)]) {
    throw IllegalAction(std::string(token), "count must be between 1 and the pile size");
  }
  piles_[static_cast<std::size_t>(*pile)] -= static_cast<int>(*count);
  broadcast("Player " + std::to_string(player) + " took " + std::to_string(*count) + " from pile " +
            std::to_string(*pile) + ". " + render(player));
  if (std::accumulate(piles_.begin(), piles_.end(), 0) == 0) {
    finish_winner(player, "took the last object");
    broadcast("Player " + std::to_string(player) + " took the last object and wins.");
    return;
  }
  to_move_ = 1 - player;
}

const GameInfo& nim_info() {
  static const GameInfo info{
      .env_id = "Nim-v0",
      .min_players = 2,
      .max_players = 2,
      .turn_limit = 100,
      .draws_possible = false,
      .rules =
          "You are playing Nim. On your turn remove one or more objects from a single pile. The "
          "player who takes the last object wins. Piles are numbered from 0. Submit [pile count], "
          "e.g. [1 3] removes three objects from pile 1.",
      .skills = uniform_skills({Skill::StrategicPlanning, Skill::LogicalReasoning}),
      .factory = [](int n, std::uint64_t seed) { return std::make_unique<Nim>(n, seed); },
  };
  return info;
}

}  // namespace arena::games
