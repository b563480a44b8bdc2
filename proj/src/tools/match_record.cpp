#include "arena/tools/match_record.hpp"

#include <chrono>

#include "arena/core/action_parse.hpp"
#include "arena/core/env.hpp"
#include "arena/core/errors.hpp"

namespace arena {
namespace {

nlohmann::json delta_json(const RatingDelta& d) {
  return {{"mu_before", d.before.mu},
          {"sigma_before", d.before.sigma},
          {"mu_after", d.after.mu},
          {"sigma_after", d.after.sigma}};
}

RatingDelta delta_from(const nlohmann::json& j) {
  return {{j.at("mu_before").get<double>(), j.at("sigma_before").get<double>()},
          {j.at("mu_after").get<double>(), j.at("sigma_after").get<double>()}};
}

}  // namespace

nlohmann::json to_json(const MatchRecord& record) {
  nlohmann::json turns = nlohmann::json::array();
  for (const auto& t : record.turns) {
    turns.push_back({{"seat", t.seat},
                     {"observation", t.observation},
                     {"raw_action", t.raw_action},
                     {"parsed_token", t.parsed_token ? nlohmann::json(*t.parsed_token) : nlohmann::json(nullptr)},
                     {"wall_time", t.wall_time}});
  }
  nlohmann::json rewards = nlohmann::json::object();
  for (std::size_t i = 0; i < record.rewards.size(); ++i) rewards[std::to_string(i)] = record.rewards[i];
  nlohmann::json ratings = nlohmann::json::object();
  for (const auto& [id, r] : record.ratings) {
    ratings[id] = {{"global", delta_json(r.global)}, {"per_env", delta_json(r.per_env)}};
  }
  return {{"match_id", record.match_id},
          {"env_id", record.env_id},
          {"seed", record.seed},
          {"num_players", record.num_players},
          {"participants", record.participants},
          {"turns", turns},
          {"rewards", rewards},
          {"ratings", ratings}};
}

MatchRecord match_record_from_json(const nlohmann::json& doc) {
  MatchRecord r;
  r.match_id = doc.at("match_id").get<std::string>();
  r.env_id = doc.at("env_id").get<std::string>();
  r.seed = doc.at("seed").get<std::uint64_t>();
  r.num_players = doc.at("num_players").get<int>();
  r.participants = doc.at("participants").get<std::vector<std::string>>();
  for (const auto& t : doc.at("turns")) {
    TurnRecord turn;
    turn.seat = t.at("seat").get<int>();
    turn.observation = t.at("observation").get<std::string>();
    turn.raw_action = t.at("raw_action").get<std::string>();
    if (!t.at("parsed_token").is_null()) turn.parsed_token = t.at("parsed_token").get<std::string>();
    turn.wall_time = t.at("wall_time").get<double>();
    r.turns.push_back(std::move(turn));
  }
  r.rewards.assign(static_cast<std::size_t>(r.num_players), 0.0);
  for (const auto& [seat, value] : doc.at("rewards").items()) {
    const auto i = std::stoul(seat);
    if (i >= r.rewards.size()) throw ArenaError("match record: reward for unknown seat " + seat);
    r.rewards[i] = value.get<double>();
  }
  for (const auto& [id, v] : doc.at("ratings").items()) {
    r.ratings[id] = {delta_from(v.at("global")), delta_from(v.at("per_env"))};
  }
  return r;
}

Rewards replay_rewards(const MatchRecord& record) {
  Env env = Env::make(record.env_id, record.seed);
  env.reset(record.num_players);
  for (const auto& turn : record.turns) {
    if (env.done()) throw ArenaError("match record '" + record.match_id + "' has turns after the end");
    if (env.current_player() != turn.seat) {
      throw ArenaError("match record '" + record.match_id + "' is out of turn order");
    }
    env.step(turn.parsed_token ? "[" + *turn.parsed_token + "]" : std::string());
  }
  return env.close();
}

MatchResult match_result(const MatchRecord& record) {
  std::vector<double> rewards(record.rewards.begin(), record.rewards.end());
  MatchResult result;
  result.env_id = record.env_id;
  for (const auto& group : rank_by_score(rewards)) {
    std::vector<ParticipantRef> refs;
    for (int seat : group) {
      const auto& id = record.participants.at(static_cast<std::size_t>(seat));
      refs.push_back(ParticipantRef{id, id == kHumanity});
    }
    result.ranking.push_back(std::move(refs));
  }
  return result;
}

void rate_match(Leaderboard& board, MatchRecord& record) {
  if (record.num_players < 2) return;
  for (const auto& change : board.record_match(match_result(record))) {
    record.ratings[change.id] = {{change.global_before, change.global_after}, {change.env_before, change.env_after}};
  }
}

MatchRecord play_match(const MatchSetup& setup, std::span<Agent* const> agents, const PlayOptions& options) {
  const int n = static_cast<int>(agents.size());
  if (static_cast<int>(setup.participants.size()) != n) {
    throw ArenaError("play_match: one participant id per agent required");
  }
  Env env = wrap_llm_observation(Env::make(setup.env_id, setup.seed));
  env.reset(n);

  MatchRecord record;
  record.match_id = setup.match_id;
  record.env_id = setup.env_id;
  record.seed = setup.seed;
  record.num_players = n;
  record.participants = setup.participants;

  while (!env.done()) {
    auto [seat, obs] = env.get_observation();
    TurnRecord turn;
    turn.seat = seat;
    turn.observation = std::move(obs.text);
    const TurnContext ctx{seat, turn.observation, setup.env_id, &env.game()};
    const auto started = std::chrono::steady_clock::now();
    bool forfeited = false;
    std::string reason;
    try {
      turn.raw_action = agents[static_cast<std::size_t>(seat)]->act(ctx);
    } catch (const TurnTimeout& e) {
      forfeited = true;
      reason = e.what();
    }
    if (options.record_wall_time) {
      turn.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    }
    if (forfeited) {
      env.forfeit(reason);
    } else {
      turn.parsed_token = try_parse_bracketed_action(turn.raw_action);
      env.step(turn.raw_action);
    }
    if (options.on_turn) options.on_turn(turn);
    record.turns.push_back(std::move(turn));
  }
  record.rewards = env.close();
  return record;
}

}  // namespace arena
