#include "arena/server/matchmaker.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <tuple>

#include "arena/core/registry.hpp"

namespace arena::server {
namespace {

bool compatible(const Ticket& a, const Ticket& b) {
  return a.participant != b.participant && a.rating_id != b.rating_id && !(a.house && b.house);
}

/// First env of `a` (in its listed order) that `b` also requested.
std::optional<std::string> shared_env(const Ticket& a, const Ticket& b) {
  for (const auto& env : a.env_ids) {
    if (std::find(b.env_ids.begin(), b.env_ids.end(), env) != b.env_ids.end()) return env;
  }
  return std::nullopt;
}

int group_size(const std::string& env_id) {
  const GameInfo* info = find_game(env_id);
  return info ? std::max(info->min_players, 2) : 2;
}

/// Extends {anchor, partner} to `size` seats with the closest remaining
/// compatible tickets that requested `env`.
std::optional<std::vector<std::size_t>> fill_group(const std::vector<Ticket>& queue, const std::vector<bool>& used,
                                                   std::size_t anchor, std::size_t partner, const std::string& env,
                                                   int size) {
  std::vector<std::size_t> group{anchor, partner};
  while (static_cast<int>(group.size()) < size) {
    std::optional<std::size_t> best;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      if (used[k] || std::find(group.begin(), group.end(), k) != group.end()) continue;
      if (std::find(queue[k].env_ids.begin(), queue[k].env_ids.end(), env) == queue[k].env_ids.end()) continue;
      const bool fits = std::all_of(group.begin(), group.end(), [&](std::size_t g) { return compatible(queue[g], queue[k]); });
      if (!fits) continue;
      const double d = std::abs(queue[k].score - queue[anchor].score);
      if (!best || d < std::abs(queue[*best].score - queue[anchor].score) ||
          (d == std::abs(queue[*best].score - queue[anchor].score) && queue[k].order < queue[*best].order)) {
        best = k;
      }
    }
    if (!best) return std::nullopt;
    group.push_back(*best);
  }
  return group;
}

}  // namespace

std::vector<MatchGroup> matchmake_sweep(std::vector<Ticket>& queue, std::chrono::steady_clock::time_point now,
                                        std::chrono::milliseconds starvation_age) {
  std::stable_sort(queue.begin(), queue.end(), [](const Ticket& a, const Ticket& b) { return a.order < b.order; });
  std::vector<bool> used(queue.size(), false);
  std::vector<MatchGroup> groups;

  auto emit = [&](const std::vector<std::size_t>& members, const std::string& env) {
    MatchGroup g{env, {}};
    for (std::size_t m : members) {
      used[m] = true;
      g.tickets.push_back(queue[m]);
    }
    groups.push_back(std::move(g));
  };

  // Starving tickets anchor, oldest first.
  for (std::size_t a = 0; a < queue.size(); ++a) {
    if (used[a] || now - queue[a].enqueued < starvation_age) continue;
    std::optional<std::tuple<double, std::uint64_t, std::size_t, std::string>> best;
    for (std::size_t b = 0; b < queue.size(); ++b) {
      if (b == a || used[b] || !compatible(queue[a], queue[b])) continue;
      const auto env = shared_env(queue[a], queue[b]);
      if (!env) continue;
      const std::tuple<double, std::uint64_t, std::size_t, std::string> key{
          std::abs(queue[a].score - queue[b].score), queue[b].order, b, *env};
      if (!best || key < *best) best = key;
    }
    if (!best) continue;
    const auto& env = std::get<3>(*best);
    if (auto members = fill_group(queue, used, a, std::get<2>(*best), env, group_size(env))) emit(*members, env);
  }

  // Everyone else: closest pair first.
  std::vector<bool> parked(queue.size(), false);
  while (true) {
    std::optional<std::tuple<double, std::uint64_t, std::uint64_t, std::size_t, std::size_t>> best;
    for (std::size_t a = 0; a < queue.size(); ++a) {
      if (used[a] || parked[a]) continue;
      for (std::size_t b = a + 1; b < queue.size(); ++b) {
        if (used[b] || parked[b] || !compatible(queue[a], queue[b]) || !shared_env(queue[a], queue[b])) continue;
        const std::tuple<double, std::uint64_t, std::uint64_t, std::size_t, std::size_t> key{
            std::abs(queue[a].score - queue[b].score), queue[a].order, queue[b].order, a, b};
        if (!best || key < *best) best = key;
      }
    }
    if (!best) break;
    const std::size_t a = std::get<3>(*best);
    const std::size_t b = std::get<4>(*best);
    const auto env = *shared_env(queue[a], queue[b]);
    auto members = fill_group(queue, used, a, b, env, group_size(env));
    if (!members) {
      // Not enough players for this env yet.
      parked[a] = parked[b] = true;
      continue;
    }
    emit(*members, env);
  }

  std::vector<Ticket> waiting;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    if (!used[i]) waiting.push_back(std::move(queue[i]));
  }
  queue = std::move(waiting);
  return groups;
}

}  // namespace arena::server
