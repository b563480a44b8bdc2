#include "arena/games/snake.hpp"

#include <algorithm>
#include <map>

#include "arena/core/errors.hpp"
#include "arena/core/registry.hpp"
#include "arena/games/text_util.hpp"

namespace arena::games {
namespace {

std::optional<Snake::Cell> direction(std::string_view token) {
  const auto t = text::lower(text::trim(token));
  if (t == "up" || t == "u" || t == "w") return Snake::Cell{0, -1};
  if (t == "down" || t == "d" || t == "s") return Snake::Cell{0, 1};
  if (t == "left" || t == "l" || t == "a") return Snake::Cell{-1, 0};
  if (t == "right" || t == "r") return Snake::Cell{1, 0};
  return std::nullopt;
}

}  // namespace

Snake::Snake(int num_players, std::uint64_t seed, Config config)
    : Game(snake_info(), num_players),
      config_(config),
      apple_rng_(seed, "apples"),
      snakes_(static_cast<std::size_t>(num_players)),
      pending_(static_cast<std::size_t>(num_players)) {
  const int w = config_.width;
  const int h = config_.height;
  const std::vector<Cell> starts{{1, 1}, {w - 2, h - 2}, {w - 2, 1}, {1, h - 2}};
  for (int seat = 0; seat < num_players; ++seat) {
    snakes_[static_cast<std::size_t>(seat)].body.push_back(starts[static_cast<std::size_t>(seat)]);
  }
  spawn_apples();
  broadcast(render(-1));
}

int Snake::to_move() const {
  for (int seat = 0; seat < num_players(); ++seat) {
    if (alive(seat) && !pending_[static_cast<std::size_t>(seat)]) return seat;
  }
  return 0;
}

int Snake::alive_count() const {
  return static_cast<int>(std::count_if(snakes_.begin(), snakes_.end(), [](const auto& s) { return s.alive; }));
}

bool Snake::occupied(const Cell& c) const {
  for (const auto& s : snakes_) {
    if (s.alive && std::find(s.body.begin(), s.body.end(), c) != s.body.end()) return true;
  }
  return std::find(apples_.begin(), apples_.end(), c) != apples_.end();
}

void Snake::spawn_apples() {
  std::vector<Cell> free;
  for (int y = 0; y < config_.height; ++y) {
    for (int x = 0; x < config_.width; ++x) {
      if (!occupied({x, y})) free.emplace_back(x, y);
    }
  }
  while (static_cast<int>(apples_.size()) < config_.apples && !free.empty()) {
    const std::size_t i = apple_rng_.index(free.size());
    apples_.push_back(free[i]);
    free.erase(free.begin() + static_cast<std::ptrdiff_t>(i));
  }
}

LegalActions Snake::legal_actions() const {
  if (is_terminal()) throw TerminalError();
  return LegalActions{{"up", "down", "left", "right"}};
}

std::string Snake::render(int /*viewer*/) const {
  std::vector<std::string> grid(static_cast<std::size_t>(config_.height), std::string(static_cast<std::size_t>(config_.width), '.'));
  for (const auto& [x, y] : apples_) grid[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = '@';
  for (int seat = 0; seat < num_players(); ++seat) {
    const auto& s = snakes_[static_cast<std::size_t>(seat)];
    if (!s.alive) continue;
    for (std::size_t i = 0; i < s.body.size(); ++i) {
      const auto [x, y] = s.body[i];
      grid[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] =
          i == 0 ? static_cast<char>('0' + seat) : static_cast<char>('a' + seat);
    }
  }
  std::string out = "Tick " + std::to_string(tick_) + "/" + std::to_string(config_.max_ticks) + "\n";
  for (const auto& row : grid) out += row + "\n";
  out += "Lengths:";
  for (int seat = 0; seat < num_players(); ++seat) {
    const auto& s = snakes_[static_cast<std::size_t>(seat)];
    out += " P" + std::to_string(seat) + "=" + (s.alive ? std::to_string(s.body.size()) : "dead");
  }
  return out;
}

Ranking Snake::standing() const {
  std::vector<double> score;
  for (const auto& s : snakes_) {
    const int survived = s.alive ? config_.max_ticks + 1 : *s.died_at;
    const int length = s.alive ? static_cast<int>(s.body.size()) : s.length_at_end;
    score.push_back(survived * 10000.0 + length);
  }
  return rank_by_score(score);
}

void Snake::do_apply(int player, std::string_view token) {
  const auto dir = direction(token);
  if (!dir) throw IllegalAction(std::string(token), "direction must be up, down, left or right");
  pending_[static_cast<std::size_t>(player)] = dir;
  for (int seat = 0; seat < num_players(); ++seat) {
    if (alive(seat) && !pending_[static_cast<std::size_t>(seat)]) return;
  }
  resolve_tick();
}

void Snake::resolve_tick() {
  ++tick_;
  const auto n = static_cast<std::size_t>(num_players());
  std::vector<Cell> heads(n);
  std::vector<bool> eats(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (!snakes_[i].alive) continue;
    const auto [dx, dy] = *pending_[i];
    heads[i] = {snakes_[i].body.front().first + dx, snakes_[i].body.front().second + dy};
    eats[i] = std::find(apples_.begin(), apples_.end(), heads[i]) != apples_.end();
  }
  // Bodies after the move: tails advance unless the snake eats.
  std::vector<std::deque<Cell>> moved(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!snakes_[i].alive) continue;
    moved[i] = snakes_[i].body;
    if (!eats[i]) moved[i].pop_back();
  }
  std::vector<bool> dies(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (!snakes_[i].alive) continue;
    const auto [x, y] = heads[i];
    if (x < 0 || y < 0 || x >= config_.width || y >= config_.height) dies[i] = true;
    for (std::size_t j = 0; j < n && !dies[i]; ++j) {
      if (!snakes_[j].alive) continue;
      if (std::find(moved[j].begin(), moved[j].end(), heads[i]) != moved[j].end()) dies[i] = true;
      if (j != i && heads[j] == heads[i]) dies[i] = true;
    }
  }
  std::string summary = "Tick " + std::to_string(tick_) + " moves:";
  for (std::size_t i = 0; i < n; ++i) {
    if (!snakes_[i].alive) continue;
    const auto [dx, dy] = *pending_[i];
    summary += " P" + std::to_string(i) + "=" + (dy < 0 ? "up" : dy > 0 ? "down" : dx < 0 ? "left" : "right");
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto& s = snakes_[i];
    if (!s.alive) continue;
    if (dies[i]) {
      s.alive = false;
      s.died_at = tick_;
      s.length_at_end = static_cast<int>(s.body.size());
      summary += ". Player " + std::to_string(i) + " crashed";
      continue;
    }
    s.body = std::move(moved[i]);
    s.body.push_front(heads[i]);
    if (eats[i]) std::erase(apples_, heads[i]);
  }
  for (auto& p : pending_) p.reset();
  spawn_apples();
  broadcast(summary + ".\n" + render(-1));

  const int living = alive_count();
  if (living == 0 || (num_players() > 1 && living == 1) || tick_ >= config_.max_ticks) {
    finish(TerminalKind::Rank, standing(), living <= 1 ? "last snake standing" : "tick limit");
  }
}

const GameInfo& snake_info() {
  static const GameInfo info{
      .env_id = "Snake-v0",
      .min_players = 2,
      .max_players = 4,
      .turn_limit = 400,
      .draws_possible = true,
      .rules =
          "You are playing multiplayer Snake on a 10x10 grid. Each tick every living snake picks "
          "a direction with [up], [down], [left] or [right]; moves are revealed together. Eating "
          "an apple (@) grows you by one. Hitting a wall, any body, or another head kills you. "
          "The last snake alive wins; at the tick limit longer survival, then length, ranks higher.",
      .skills = uniform_skills({Skill::StrategicPlanning, Skill::SpatialThinking}),
      .factory = [](int n, std::uint64_t seed) { return std::make_unique<Snake>(n, seed); },
  };
  return info;
}

}  // namespace arena::games
