#include "arena/core/skills.hpp"

#include <sstream>

#include "arena/core/errors.hpp"
#include "arena/core/registry.hpp"
#include "arena/games/text_util.hpp"

namespace arena {
namespace {

constexpr std::array<std::string_view, 10> kSkillNames = {
    "Strategic Planning", "Spatial Thinking", "Pattern Recognition", "Theory of Mind",
    "Logical Reasoning",  "Memory Recall",    "Bluffing",            "Persuasion",
    "Uncertainty Estimation", "Adaptability",
};

}  // namespace

std::string_view to_string(Skill skill) { return kSkillNames[static_cast<std::size_t>(skill)]; }

std::optional<Skill> skill_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kSkillNames.size(); ++i) {
    if (kSkillNames[i] == name) return kAllSkills[i];
  }
  return std::nullopt;
}

SkillWeights uniform_skills(std::initializer_list<Skill> tags) {
  SkillWeights weights;
  for (Skill s : tags) weights[s] = 1.0 / static_cast<double>(tags.size());
  return weights;
}

const SkillTable& builtin_skill_table() {
  static const SkillTable table = [] {
    SkillTable t;
    for (const GameInfo* info : registered_games()) t.emplace(info->env_id, info->skills);
    return t;
  }();
  return table;
}

SkillTable parse_skill_table(std::string_view text) {
  SkillTable table;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto trimmed = text::trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    const auto tab1 = line.find('\t');
    const auto tab2 = tab1 == std::string::npos ? tab1 : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos) {
      throw ArenaError("skill table line " + std::to_string(line_no) + ": expected three tab-separated fields");
    }
    const std::string env = line.substr(0, tab1);
    const auto skill = skill_from_string(line.substr(tab1 + 1, tab2 - tab1 - 1));
    if (!skill) throw ArenaError("skill table line " + std::to_string(line_no) + ": unknown skill");
    double weight = 0;
    try {
      std::size_t used = 0;
      const std::string field(text::trim(std::string_view(line).substr(tab2 + 1)));
      weight = std::stod(field, &used);
      if (used != field.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ArenaError("skill table line " + std::to_string(line_no) + ": bad weight");
    }
    table[env][*skill] = weight;
  }
  return table;
}

}  // namespace arena
