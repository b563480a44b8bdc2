#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "arena/rating/leaderboard.hpp"
#include "arena/rating/skill_profile.hpp"
#include "arena/tools/tournament.hpp"

namespace arena {

struct LeaderboardRow {
  std::string name;
  double mu = 0;
  double sigma = 0;
  double conservative = 0;
  int matches = 0;
};

struct SkillRow {
  std::string name;
  std::string skill;
  double raw = 0;
  double normalized = 0;
};

/// name,mu,sigma,conservative,matches in leaderboard order; floats use
/// 17 significant digits so re-import is exact.
std::string leaderboard_csv(const Leaderboard& board);
/// name,skill,raw,normalized
std::string skill_profile_csv(const std::vector<SkillProfile>& profiles);

std::vector<LeaderboardRow> parse_leaderboard_csv(std::string_view text);
std::vector<SkillRow> parse_skill_profile_csv(std::string_view text);

/// agent,env_id,games,wins,draws,losses,win_rate,mean_reward
std::string cross_table_csv(const CrossTable& table);
/// agent,opponent,env_id,games,wins,draws,losses,win_rate
std::string head_to_head_csv(const CrossTable& table);

/// RFC 4180 style field splitting of one CSV line.
std::vector<std::string> split_csv_line(std::string_view line);

}  // namespace arena
