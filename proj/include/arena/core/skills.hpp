#pragma once

#include <array>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace arena {

/// The ten soft skills environments are tagged with.
enum class Skill {
  StrategicPlanning,
  SpatialThinking,
  PatternRecognition,
  TheoryOfMind,
  LogicalReasoning,
  MemoryRecall,
  Bluffing,
  Persuasion,
  UncertaintyEstimation,
  Adaptability,
};

inline constexpr std::array<Skill, 10> kAllSkills = {
    Skill::StrategicPlanning,  Skill::SpatialThinking, Skill::PatternRecognition,
    Skill::TheoryOfMind,       Skill::LogicalReasoning, Skill::MemoryRecall,
    Skill::Bluffing,           Skill::Persuasion,      Skill::UncertaintyEstimation,
    Skill::Adaptability,
};

std::string_view to_string(Skill skill);
std::optional<Skill> skill_from_string(std::string_view name);

/// skill -> weight for one environment.
using SkillWeights = std::map<Skill, double>;

/// Equal weights summing to 1 over `tags`.
SkillWeights uniform_skills(std::initializer_list<Skill> tags);

/// env_id -> weights, for every registered environment.
using SkillTable = std::map<std::string, SkillWeights, std::less<>>;

/// The compiled-in table (uniform weights over each environment's tags).
const SkillTable& builtin_skill_table();

/// Parses the tab-separated `env_id<TAB>skill<TAB>weight` format; `#` starts a
/// comment line. Throws ArenaError on malformed rows.
SkillTable parse_skill_table(std::string_view text);

}  // namespace arena
