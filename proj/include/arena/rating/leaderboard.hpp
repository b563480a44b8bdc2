#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "arena/rating/trueskill.hpp"

namespace arena {

/// The one leaderboard entity standing in for every human player.
inline constexpr std::string_view kHumanity = "Humanity";

struct ParticipantRef {
  std::string name;
  bool human = false;

  /// Leaderboard id: the model name, or "Humanity" for any human.
  std::string rating_id() const { return human ? std::string(kHumanity) : name; }
};

struct MatchResult {
  std::string env_id;
  /// Best first; participants in one group tied.
  std::vector<std::vector<ParticipantRef>> ranking;
  std::int64_t timestamp = 0;
};

struct RatingEntry {
  Rating rating;
  int matches = 0;
};

struct LeaderboardEntry {
  std::string id;
  RatingEntry global;
  std::map<std::string, RatingEntry, std::less<>> per_env;
};

struct RatingChange {
  std::string id;
  Rating global_before;
  Rating global_after;
  Rating env_before;
  Rating env_after;
};

class Leaderboard {
 public:
  Leaderboard() : Leaderboard(RatingConfig{}) {}
  explicit Leaderboard(RatingConfig config);

  const RatingConfig& config() const { return config_; }

  /// Config for one environment: the draw margin is calibrated from the
  /// configured draw rate when the game can end in a draw, zero otherwise.
  RatingConfig config_for(std::string_view env_id) const;

  const LeaderboardEntry* find(std::string_view id) const;
  /// Registers `id` at the initial rating when unknown.
  LeaderboardEntry& ensure(std::string_view id);

  /// Updates global and per-env ratings of every participant and bumps their
  /// match counts. Changes are returned in ranking order. Throws ArenaError
  /// when two participants map to the same id.
  std::vector<RatingChange> record_match(const MatchResult& result);

  /// Entries by global conservative score descending, ties by name.
  std::vector<const LeaderboardEntry*> sorted() const;
  const std::map<std::string, LeaderboardEntry, std::less<>>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// {name: {global: {mu, sigma, matches}, per_env: {env: {mu, sigma, matches}}}}
  nlohmann::json to_json() const;
  static Leaderboard from_json(const nlohmann::json& doc, RatingConfig config = RatingConfig{});

  friend bool operator==(const Leaderboard& a, const Leaderboard& b) { return a.to_json() == b.to_json(); }

 private:
  RatingConfig config_;
  std::map<std::string, LeaderboardEntry, std::less<>> entries_;
};

}  // namespace arena
