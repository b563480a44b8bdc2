#include "arena/core/game.hpp"

#include <algorithm>
#include <numeric>

#include "arena/core/errors.hpp"
#include "arena/core/registry.hpp"

namespace arena {

std::string_view to_string(TerminalKind kind) {
  switch (kind) {
    case TerminalKind::Win: return "win";
    case TerminalKind::Draw: return "draw";
    case TerminalKind::Rank: return "rank";
    case TerminalKind::Success: return "success";
    case TerminalKind::Failure: return "failure";
    case TerminalKind::InvalidMove: return "invalid_move";
    case TerminalKind::TurnLimit: return "turn_limit";
  }
  return "unknown";
}

Rewards outcome(const TerminalInfo& terminal, int num_players) {
  Rewards rewards(static_cast<std::size_t>(num_players), 0.0);
  if (num_players == 1) {
    rewards[0] = terminal.kind == TerminalKind::Success ? 1.0 : -1.0;
    return rewards;
  }
  const double n = num_players;
  int next_rank = 1;
  for (const auto& group : terminal.ranking) {
    const int size = static_cast<int>(group.size());
    // Mean of ranks next_rank .. next_rank + size - 1.
    const double mean_rank = next_rank + (size - 1) / 2.0;
    const double reward = 1.0 - 2.0 * (mean_rank - 1.0) / (n - 1.0);
    for (int seat : group) rewards[static_cast<std::size_t>(seat)] = reward;
    next_rank += size;
  }
  return rewards;
}

bool LegalActions::allows(std::string_view token) const {
  if (validator) return validator(token);
  return std::find(tokens.begin(), tokens.end(), token) != tokens.end();
}

Game::Game(const GameInfo& info, int num_players) : info_(&info), num_players_(num_players) {
  if (num_players < info.min_players || num_players > info.max_players) {
    throw PlayerCountOutOfRange(info.min_players, info.max_players, num_players);
  }
}

Ranking all_tied(int num_players) {
  std::vector<int> all(static_cast<std::size_t>(num_players));
  std::iota(all.begin(), all.end(), 0);
  return {all};
}

Ranking Game::standing() const { return all_tied(num_players_); }

void Game::apply(int player, std::string_view token) {
  if (is_terminal()) throw TerminalError();
  if (player != to_move()) {
    throw IllegalAction(std::string(token), "it is not player " + std::to_string(player) + "'s turn");
  }
  do_apply(player, token);
}

void Game::terminate(TerminalInfo info) {
  if (is_terminal()) throw TerminalError();
  terminal_ = std::move(info);
}

std::vector<Message> Game::take_messages() {
  std::vector<Message> out;
  out.swap(outbox_);
  return out;
}

void Game::broadcast(std::string text) {
  outbox_.push_back(Message{kGameSender, std::move(text), Visibility::broadcast()});
}

void Game::tell(int seat, std::string text) {
  outbox_.push_back(Message{kGameSender, std::move(text), Visibility::only(seat)});
}

void Game::tell(std::vector<int> seats, std::string text) {
  outbox_.push_back(Message{kGameSender, std::move(text), Visibility::only(std::move(seats))});
}

void Game::finish(TerminalKind kind, Ranking ranking, std::string detail) {
  terminate(TerminalInfo{kind, std::move(ranking), std::move(detail)});
}

void Game::finish_winner(int winner, std::string detail) {
  Ranking ranking{{winner}};
  std::vector<int> rest;
  for (int s = 0; s < num_players_; ++s) {
    if (s != winner) rest.push_back(s);
  }
  if (!rest.empty()) ranking.push_back(std::move(rest));
  finish(num_players_ == 1 ? TerminalKind::Success : TerminalKind::Win, std::move(ranking),
         std::move(detail));
}

void Game::finish_draw(std::string detail) {
  finish(TerminalKind::Draw, all_tied(num_players_), std::move(detail));
}

Ranking rank_by_score(const std::vector<double>& scores) {
  std::vector<int> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return scores[static_cast<std::size_t>(a)] > scores[static_cast<std::size_t>(b)]; });
  Ranking ranking;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0 && scores[static_cast<std::size_t>(order[i])] == scores[static_cast<std::size_t>(order[i - 1])]) {
      ranking.back().push_back(order[i]);
    } else {
      ranking.push_back({order[i]});
    }
  }
  return ranking;
}

}  // namespace arena
