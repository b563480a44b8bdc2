#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "arena/agents/agent.hpp"
#include "arena/core/game.hpp"
#include "arena/rating/leaderboard.hpp"

namespace arena {

struct TurnRecord {
  int seat = 0;
  std::string observation;
  std::string raw_action;
  std::optional<std::string> parsed_token;
  double wall_time = 0.0;
};

struct RatingDelta {
  Rating before;
  Rating after;
};

struct ParticipantRatings {
  RatingDelta global;
  RatingDelta per_env;
};

/// Replayable transcript of one match. Feeding `[parsed_token]` (or an empty
/// action when the token is null) for every turn into a fresh env made from
/// env_id + seed reproduces `rewards`.
struct MatchRecord {
  std::string match_id;
  std::string env_id;
  std::uint64_t seed = 0;
  int num_players = 0;
  /// Leaderboard id per seat.
  std::vector<std::string> participants;
  std::vector<TurnRecord> turns;
  Rewards rewards;
  std::map<std::string, ParticipantRatings> ratings;
};

nlohmann::json to_json(const MatchRecord& record);
MatchRecord match_record_from_json(const nlohmann::json& doc);

/// Replays the record's tokens and returns the rewards the env produces.
Rewards replay_rewards(const MatchRecord& record);

/// Ranking implied by the rewards (higher first, equal rewards tied).
MatchResult match_result(const MatchRecord& record);

/// Applies the record to `board` and fills `record.ratings`. Single-seat
/// records are left unrated.
void rate_match(Leaderboard& board, MatchRecord& record);

struct MatchSetup {
  std::string match_id;
  std::string env_id;
  std::uint64_t seed = 0;
  /// Leaderboard id per seat.
  std::vector<std::string> participants;
};

struct PlayOptions {
  /// Measure agent think time; off keeps records byte-reproducible.
  bool record_wall_time = false;
  std::function<void(const TurnRecord&)> on_turn;
};

/// Drives one match from reset to close. Agents see the LLM-wrapped
/// observation. A TurnTimeout from an agent forfeits its seat; any other
/// agent error propagates.
MatchRecord play_match(const MatchSetup& setup, std::span<Agent* const> agents, const PlayOptions& options = {});

}  // namespace arena
