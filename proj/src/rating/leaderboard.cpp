#include "arena/rating/leaderboard.hpp"

#include <algorithm>
#include <set>

#include "arena/core/errors.hpp"
#include "arena/core/registry.hpp"

namespace arena {
namespace {

nlohmann::json entry_json(const RatingEntry& e) {
  return {{"mu", e.rating.mu}, {"sigma", e.rating.sigma}, {"matches", e.matches}};
}

RatingEntry entry_from(const nlohmann::json& j) {
  return RatingEntry{Rating{j.at("mu").get<double>(), j.at("sigma").get<double>()}, j.at("matches").get<int>()};
}

}  // namespace

Leaderboard::Leaderboard(RatingConfig config) : config_(config) { config_.validate(); }

RatingConfig Leaderboard::config_for(std::string_view env_id) const {
  RatingConfig c = config_;
  const GameInfo* info = find_game(env_id);
  c.draw_margin = info && info->draws_possible ? draw_margin_for(c.draw_probability, c.beta) : 0.0;
  return c;
}

const LeaderboardEntry* Leaderboard::find(std::string_view id) const {
  const auto it = entries_.find(id);
  return it == entries_.end() ? nullptr : &it->second;
}

LeaderboardEntry& Leaderboard::ensure(std::string_view id) {
  auto it = entries_.find(id);
  if (it == entries_.end()) {
    LeaderboardEntry e;
    e.id = std::string(id);
    e.global.rating = init_rating(config_);
    it = entries_.emplace(e.id, std::move(e)).first;
  }
  return it->second;
}

std::vector<RatingChange> Leaderboard::record_match(const MatchResult& result) {
  std::vector<std::string> ids;
  std::vector<int> ranks;
  std::set<std::string, std::less<>> seen;
  for (std::size_t g = 0; g < result.ranking.size(); ++g) {
    for (const auto& p : result.ranking[g]) {
      auto id = p.rating_id();
      if (!seen.insert(id).second) throw ArenaError("participant '" + id + "' appears twice in one match");
      ids.push_back(std::move(id));
      ranks.push_back(static_cast<int>(g));
    }
  }
  if (ids.size() < 2) throw TooFewPlayers();

  const RatingConfig cfg = config_for(result.env_id);
  std::vector<Rating> global_before;
  std::vector<Rating> env_before;
  for (const auto& id : ids) {
    auto& e = ensure(id);
    global_before.push_back(e.global.rating);
    const auto it = e.per_env.find(result.env_id);
    env_before.push_back(it == e.per_env.end() ? init_rating(config_) : it->second.rating);
  }
  // Compute both updates before touching any entry.
  const auto global_after = update_multiplayer(global_before, ranks, cfg);
  const auto env_after = update_multiplayer(env_before, ranks, cfg);

  std::vector<RatingChange> changes;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    auto& e = entries_.at(ids[i]);
    e.global.rating = global_after[i];
    ++e.global.matches;
    auto& env = e.per_env[result.env_id];
    env.rating = env_after[i];
    ++env.matches;
    changes.push_back({ids[i], global_before[i], global_after[i], env_before[i], env_after[i]});
  }
  return changes;
}

std::vector<const LeaderboardEntry*> Leaderboard::sorted() const {
  std::vector<const LeaderboardEntry*> out;
  for (const auto& [id, e] : entries_) out.push_back(&e);
  std::stable_sort(out.begin(), out.end(), [](const LeaderboardEntry* a, const LeaderboardEntry* b) {
    const double ca = a->global.rating.conservative();
    const double cb = b->global.rating.conservative();
    if (ca != cb) return ca > cb;
    return a->id < b->id;
  });
  return out;
}

nlohmann::json Leaderboard::to_json() const {
  nlohmann::json doc = nlohmann::json::object();
  for (const auto& [id, e] : entries_) {
    nlohmann::json per_env = nlohmann::json::object();
    for (const auto& [env, r] : e.per_env) per_env[env] = entry_json(r);
    doc[id] = {{"global", entry_json(e.global)}, {"per_env", per_env}};
  }
  return doc;
}

Leaderboard Leaderboard::from_json(const nlohmann::json& doc, RatingConfig config) {
  Leaderboard board(config);
  for (const auto& [id, row] : doc.items()) {
    LeaderboardEntry e;
    e.id = id;
    e.global = entry_from(row.at("global"));
    for (const auto& [env, r] : row.at("per_env").items()) e.per_env[env] = entry_from(r);
    board.entries_[id] = std::move(e);
  }
  return board;
}

}  // namespace arena
