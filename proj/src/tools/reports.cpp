#include "arena/tools/reports.hpp"

#include <cstdio>
#include <sstream>

#include "arena/core/errors.hpp"

namespace arena {
namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::vector<std::string>> rows_of(std::string_view text, std::size_t columns) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    auto cells = split_csv_line(line);
    if (cells.size() != columns) throw ArenaError("csv row has " + std::to_string(cells.size()) + " fields: " + line);
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> cells(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cells.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cells.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.emplace_back();
    } else if (c != '\r') {
      cells.back() += c;
    }
  }
  return cells;
}

std::string leaderboard_csv(const Leaderboard& board) {
  std::string out = "name,mu,sigma,conservative,matches\n";
  for (const auto* e : board.sorted()) {
    const auto& r = e->global.rating;
    out += field(e->id) + "," + num(r.mu) + "," + num(r.sigma) + "," + num(r.conservative()) + "," +
           std::to_string(e->global.matches) + "\n";
  }
  return out;
}

std::string skill_profile_csv(const std::vector<SkillProfile>& profiles) {
  std::string out = "name,skill,raw,normalized\n";
  for (const auto& p : profiles) {
    for (const auto& [skill, raw] : p.raw) {
      const auto it = p.normalized.find(skill);
      out += field(p.id) + "," + field(to_string(skill)) + "," + num(raw) + "," +
             num(it == p.normalized.end() ? 0.5 : it->second) + "\n";
    }
  }
  return out;
}

std::vector<LeaderboardRow> parse_leaderboard_csv(std::string_view text) {
  std::vector<LeaderboardRow> rows;
  for (const auto& c : rows_of(text, 5)) {
    rows.push_back({c[0], std::stod(c[1]), std::stod(c[2]), std::stod(c[3]), std::stoi(c[4])});
  }
  return rows;
}

std::vector<SkillRow> parse_skill_profile_csv(std::string_view text) {
  std::vector<SkillRow> rows;
  for (const auto& c : rows_of(text, 4)) rows.push_back({c[0], c[1], std::stod(c[2]), std::stod(c[3])});
  return rows;
}

std::string cross_table_csv(const CrossTable& table) {
  std::string out = "agent,env_id,games,wins,draws,losses,win_rate,mean_reward\n";
  for (const auto& [key, t] : table.by_agent_env) {
    out += field(key.first) + "," + field(key.second) + "," + std::to_string(t.games) + "," + std::to_string(t.wins) +
           "," + std::to_string(t.draws) + "," + std::to_string(t.losses) + "," + num(t.win_rate()) + "," +
           num(t.mean_reward()) + "\n";
  }
  return out;
}

std::string head_to_head_csv(const CrossTable& table) {
  std::string out = "agent,opponent,env_id,games,wins,draws,losses,win_rate\n";
  for (const auto& [key, t] : table.head_to_head) {
    const auto& [agent, opponent, env] = key;
    out += field(agent) + "," + field(opponent) + "," + field(env) + "," + std::to_string(t.games) + "," +
           std::to_string(t.wins) + "," + std::to_string(t.draws) + "," + std::to_string(t.losses) + "," +
           num(t.win_rate()) + "\n";
  }
  return out;
}

}  // namespace arena
