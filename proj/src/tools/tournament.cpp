#include "arena/tools/tournament.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "arena/core/errors.hpp"
#include "arena/core/registry.hpp"
#include "arena/core/rng.hpp"

namespace arena {

void TournamentPlan::validate() const {
  if (env_ids.empty()) throw ArenaError("tournament needs at least one environment");
  if (roster.size() < 2) throw ArenaError("tournament needs at least two agents");
  if (games_per_pairing < 1) throw ArenaError("games per pairing must be at least 1");
  if (jobs < 1) throw ArenaError("jobs must be at least 1");
  for (const auto& id : env_ids) {
    const auto& info = game_info(id);
    if (info.min_players > 2) throw ArenaError(id + " needs more than two players");
  }
  for (const auto& name : roster_names(roster)) {
    if (name == kHumanity) throw ArenaError("the name Humanity is reserved");
  }
}

std::vector<std::string> roster_names(const std::vector<AgentSpec>& roster) {
  std::vector<std::string> names;
  std::map<std::string, int> seen;
  for (const auto& spec : roster) {
    const auto base = spec.display_name();
    const int count = ++seen[base];
    names.push_back(count == 1 ? base : base + "#" + std::to_string(count));
  }
  return names;
}

std::vector<ScheduledGame> schedule(const TournamentPlan& plan) {
  std::vector<ScheduledGame> games;
  const int n = static_cast<int>(plan.roster.size());
  for (const auto& env_id : plan.env_ids) {
    const auto& info = game_info(env_id);
    auto add = [&](std::vector<int> seats) {
      const auto index = games.size();
      const auto seed = derive_seed(plan.seed, "game/" + std::to_string(index));
      games.push_back({env_id, std::move(seats), seed, "t" + std::to_string(plan.seed) + "-" + std::to_string(index)});
    };
    if (info.max_players < 2) {
      for (int a = 0; a < n; ++a) {
        for (int g = 0; g < plan.games_per_pairing; ++g) add({a});
      }
      continue;
    }
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        for (int g = 0; g < plan.games_per_pairing; ++g) add(g % 2 == 0 ? std::vector<int>{a, b} : std::vector<int>{b, a});
      }
    }
  }
  return games;
}

void CrossTable::add(const MatchRecord& record) {
  const auto best = *std::max_element(record.rewards.begin(), record.rewards.end());
  const auto top = std::count(record.rewards.begin(), record.rewards.end(), best);
  auto outcome = [&](std::size_t seat, Tally& t) {
    const double r = record.rewards[seat];
    ++t.games;
    t.reward_sum += r;
    if (record.num_players == 1) {
      (r > 0 ? t.wins : t.losses)++;
    } else if (r == best) {
      (top == 1 ? t.wins : t.draws)++;
    } else {
      ++t.losses;
    }
  };
  for (std::size_t s = 0; s < record.participants.size(); ++s) {
    outcome(s, by_agent_env[{record.participants[s], record.env_id}]);
    if (record.num_players != 2) continue;
    const auto& opponent = record.participants[1 - s];
    outcome(s, head_to_head[{record.participants[s], opponent, record.env_id}]);
  }
}

TournamentResult run_tournament(const TournamentPlan& plan, const AgentMaker& make_agent) {
  plan.validate();
  const auto games = schedule(plan);
  const auto names = roster_names(plan.roster);

  std::vector<std::optional<MatchRecord>> slots(games.size());
  std::vector<std::string> errors(games.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_failure{games.size()};

  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= games.size() || i > first_failure.load()) return;
      const auto& game = games[i];
      try {
        std::vector<std::unique_ptr<Agent>> owned;
        std::vector<Agent*> agents;
        std::vector<std::string> ids;
        for (std::size_t s = 0; s < game.seats.size(); ++s) {
          const auto& spec = plan.roster[static_cast<std::size_t>(game.seats[s])];
          owned.push_back(make_agent(spec, derive_seed(game.seed, "seat/" + std::to_string(s))));
          agents.push_back(owned.back().get());
          ids.push_back(names[static_cast<std::size_t>(game.seats[s])]);
        }
        slots[i] = play_match({game.match_id, game.env_id, game.seed, ids}, agents);
      } catch (const std::exception& e) {
        errors[i] = e.what();
        std::size_t cur = first_failure.load();
        while (i < cur && !first_failure.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  const int threads = std::min<int>(plan.jobs, static_cast<int>(std::max<std::size_t>(games.size(), 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  TournamentResult result;
  const std::size_t stop = first_failure.load();
  for (std::size_t i = 0; i < stop; ++i) {
    auto record = std::move(*slots[i]);
    rate_match(result.board, record);
    result.table.add(record);
    result.records.push_back(std::move(record));
  }
  if (stop < games.size()) {
    result.error = "game " + games[stop].match_id + " (" + games[stop].env_id + "): " + errors[stop];
  }
  return result;
}

}  // namespace arena
