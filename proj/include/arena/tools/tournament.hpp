#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "arena/agents/agent.hpp"
#include "arena/rating/leaderboard.hpp"
#include "arena/tools/match_record.hpp"

namespace arena {

using AgentMaker = std::function<std::unique_ptr<Agent>(const AgentSpec& spec, std::uint64_t seed)>;

struct TournamentPlan {
  std::vector<std::string> env_ids;
  std::vector<AgentSpec> roster;
  int games_per_pairing = 1;
  std::uint64_t seed = 0;
  int jobs = 1;

  /// Throws ArenaError (UnknownEnvId for bad ids).
  void validate() const;
};

/// One scheduled game: seats hold roster indices.
struct ScheduledGame {
  std::string env_id;
  std::vector<int> seats;
  std::uint64_t seed = 0;
  std::string match_id;
};

/// Every unordered pair plays `games_per_pairing` games per env, alternating
/// seat order; single-seat envs give each agent that many solo games.
std::vector<ScheduledGame> schedule(const TournamentPlan& plan);

/// Roster names with duplicates suffixed "#2", "#3", ...
std::vector<std::string> roster_names(const std::vector<AgentSpec>& roster);

struct Tally {
  int games = 0;
  int wins = 0;
  int draws = 0;
  int losses = 0;
  double reward_sum = 0.0;

  double win_rate() const { return games ? static_cast<double>(wins) / games : 0.0; }
  double draw_rate() const { return games ? static_cast<double>(draws) / games : 0.0; }
  double mean_reward() const { return games ? reward_sum / games : 0.0; }
};

struct CrossTable {
  /// (agent, env) -> tally
  std::map<std::pair<std::string, std::string>, Tally> by_agent_env;
  /// (agent, opponent, env) -> agent's tally against that opponent
  std::map<std::tuple<std::string, std::string, std::string>, Tally> head_to_head;

  /// Folds one finished match in. Win: sole best reward; draw: shared best.
  void add(const MatchRecord& record);
};

struct TournamentResult {
  std::vector<MatchRecord> records;
  CrossTable table;
  Leaderboard board;
  /// First agent failure; records stop just before that game.
  std::optional<std::string> error;
};

/// Plays the schedule on up to `plan.jobs` threads, then rates and tallies
/// the records in schedule order so results do not depend on `jobs`.
TournamentResult run_tournament(const TournamentPlan& plan, const AgentMaker& make_agent);

}  // namespace arena
