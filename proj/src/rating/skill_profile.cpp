#include "arena/rating/skill_profile.hpp"

#include <algorithm>

#include "arena/core/errors.hpp"

namespace arena {

SkillProfile skill_profile(const LeaderboardEntry& entry, const SkillTable& weights) {
  if (entry.per_env.empty()) throw NoRatedEnvironments(entry.id);
  std::map<Skill, double> weighted;
  std::map<Skill, double> total;
  for (const auto& [env, r] : entry.per_env) {
    const auto it = weights.find(env);
    if (it == weights.end()) continue;
    for (const auto& [skill, w] : it->second) {
      if (w == 0) continue;
      weighted[skill] += w * r.rating.conservative();
      total[skill] += w;
    }
  }
  SkillProfile profile{entry.id, {}, {}};
  for (const auto& [skill, w] : total) profile.raw[skill] = weighted[skill] / w;
  return profile;
}

std::vector<SkillProfile> skill_profiles(const Leaderboard& board, const SkillTable& weights) {
  std::vector<SkillProfile> out;
  for (const auto* e : board.sorted()) {
    if (!e->per_env.empty()) out.push_back(skill_profile(*e, weights));
  }
  normalize_skills(out);
  return out;
}

void normalize_skills(std::vector<SkillProfile>& profiles) {
  for (Skill skill : kAllSkills) {
    double lo = 0;
    double hi = 0;
    bool any = false;
    for (const auto& p : profiles) {
      const auto it = p.raw.find(skill);
      if (it == p.raw.end()) continue;
      lo = any ? std::min(lo, it->second) : it->second;
      hi = any ? std::max(hi, it->second) : it->second;
      any = true;
    }
    for (auto& p : profiles) {
      const auto it = p.raw.find(skill);
      if (it == p.raw.end()) continue;
      p.normalized[skill] = hi > lo ? (it->second - lo) / (hi - lo) : 0.5;
    }
  }
}

}  // namespace arena
