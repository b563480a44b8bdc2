#include "arena/agents/agent.hpp"

#include <algorithm>

#include "arena/core/errors.hpp"
#include "arena/games/text_util.hpp"

namespace arena {

std::string RandomLegalAgent::act(const TurnContext& ctx) {
  if (!ctx.game) throw ArenaError("random agent needs game access");
  const auto legal = ctx.game->legal_actions();
  if (legal.tokens.empty()) throw ArenaError("no legal actions to choose from");
  return "[" + legal.tokens[rng_.index(legal.tokens.size())] + "]";
}

std::vector<std::string> listed_moves(std::string_view observation) {
  constexpr std::string_view kTag = "Valid moves:";
  const auto at = observation.rfind(kTag);
  if (at == std::string_view::npos) return {};
  auto rest = observation.substr(at + kTag.size());
  rest = rest.substr(0, rest.find('\n'));
  std::vector<std::string> moves;
  std::size_t pos = 0;
  while ((pos = rest.find('[', pos)) != std::string_view::npos) {
    const auto close = rest.find(']', pos);
    if (close == std::string_view::npos) break;
    moves.emplace_back(rest.substr(pos + 1, close - pos - 1));
    pos = close + 1;
  }
  return moves;
}

std::string ListedMoveAgent::act(const TurnContext& ctx) {
  const auto moves = listed_moves(ctx.observation);
  if (moves.empty()) throw ArenaError("observation lists no valid moves");
  return "[" + moves[rng_.index(moves.size())] + "]";
}

std::string NimPerfectAgent::act(const TurnContext& ctx) {
  constexpr std::string_view kTag = "Piles:";
  const auto at = ctx.observation.rfind(kTag);
  if (at == std::string_view::npos) throw ArenaError("observation shows no Nim piles");
  auto line = ctx.observation.substr(at + kTag.size());
  line = line.substr(0, line.find('\n'));
  std::vector<int> piles;
  for (const auto& part : text::split_ws(line)) {
    const auto eq = part.find('=');
    const auto n = eq == std::string::npos ? std::nullopt : text::parse_int(std::string_view(part).substr(eq + 1));
    if (!n) throw ArenaError("cannot read Nim pile '" + part + "'");
    piles.push_back(static_cast<int>(*n));
  }
  int nim_sum = 0;
  for (int p : piles) nim_sum ^= p;
  if (nim_sum != 0) {
    for (std::size_t i = 0; i < piles.size(); ++i) {
      const int target = piles[i] ^ nim_sum;
      if (target < piles[i]) return "[" + std::to_string(i) + " " + std::to_string(piles[i] - target) + "]";
    }
  }
  const auto largest = std::max_element(piles.begin(), piles.end()) - piles.begin();
  return "[" + std::to_string(largest) + " 1]";
}

std::string AgentSpec::display_name() const {
  const auto it = params.find("name");
  return it != params.end() ? it->second : text;
}

std::string AgentSpec::param(std::string_view key, std::string_view fallback) const {
  const auto it = params.find(key);
  return it != params.end() ? it->second : std::string(fallback);
}

AgentSpec parse_agent_spec(std::string_view text) {
  AgentSpec spec;
  spec.text = std::string(text::trim(text));
  const auto colon = spec.text.find(':');
  spec.kind = spec.text.substr(0, colon);
  if (spec.kind.empty()) throw BadAgentSpec("agent spec '" + spec.text + "' has no kind");
  if (colon == std::string::npos) return spec;
  std::string_view rest = std::string_view(spec.text).substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto item = rest.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw BadAgentSpec("agent spec '" + spec.text + "': expected key=value, got '" + std::string(item) + "'");
    }
    spec.params[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return spec;
}

std::unique_ptr<Agent> make_local_agent(const AgentSpec& spec, std::uint64_t seed) {
  if (const auto s = spec.param("seed"); !s.empty()) {
    const auto n = text::parse_int(s);
    if (!n) throw BadAgentSpec("agent spec '" + spec.text + "': seed must be an integer");
    seed = mix64(static_cast<std::uint64_t>(*n) ^ mix64(seed));
  }
  if (spec.kind == "random") return std::make_unique<RandomLegalAgent>(seed, spec.display_name());
  if (spec.kind == "listed") return std::make_unique<ListedMoveAgent>(seed, spec.display_name());
  if (spec.kind == "nim-perfect") return std::make_unique<NimPerfectAgent>(spec.display_name());
  throw BadAgentSpec("unknown agent kind '" + spec.kind + "'");
}

}  // namespace arena
