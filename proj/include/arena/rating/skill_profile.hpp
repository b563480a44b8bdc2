#pragma once

#include <map>
#include <string>
#include <vector>

#include "arena/core/skills.hpp"
#include "arena/rating/leaderboard.hpp"

namespace arena {

struct SkillProfile {
  std::string id;
  std::map<Skill, double> raw;
  std::map<Skill, double> normalized;
};

/// Weighted average of the entry's per-env conservative scores for every
/// skill with non-zero total weight over the envs it has played. Throws
/// NoRatedEnvironments when the entry has no per-env ratings.
SkillProfile skill_profile(const LeaderboardEntry& entry, const SkillTable& weights);

/// Profiles of every entry with at least one rated env, normalized.
std::vector<SkillProfile> skill_profiles(const Leaderboard& board, const SkillTable& weights);

/// Per-skill min-max over the profiles holding that skill; a constant column
/// maps to 0.5.
void normalize_skills(std::vector<SkillProfile>& profiles);

}  // namespace arena
