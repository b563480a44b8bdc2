#pragma once

#include <atomic>
#include <chrono>
#include <string>

#include "arena/agents/agent.hpp"

namespace arena {

struct LlmEndpointConfig {
  /// Up to and excluding "/chat/completions", e.g. "https://openrouter.ai/api/v1".
  std::string base_url = "https://openrouter.ai/api/v1";
  std::string model;
  /// Environment variable holding the bearer token.
  std::string api_key_env = "OPENROUTER_API_KEY";
  std::chrono::milliseconds timeout{60'000};
  int max_retries = 3;
  double temperature = 0.0;
  /// First retry delay; doubles per retry.
  std::chrono::milliseconds backoff{500};

  /// Throws ArenaError for a non-positive timeout or negative retries.
  void validate() const;
};

/// Chat-completion agent. Each turn is one stateless request carrying a
/// system line naming the game and the observation as the user message; the
/// reply text is returned untouched.
class LlmAgent final : public Agent {
 public:
  explicit LlmAgent(LlmEndpointConfig config, std::string name = {});

  /// Throws AuthError (no key, or 401/403), TimeoutError once retries are
  /// exhausted, MalformedResponse for an unusable reply.
  std::string act(const TurnContext& ctx) override;
  std::string name() const override { return name_; }
  std::string description() const override { return "chat-completion model " + config_.model; }

  /// HTTP requests issued so far (retries included).
  int requests_sent() const { return requests_.load(); }

 private:
  LlmEndpointConfig config_;
  std::string name_;
  std::atomic<int> requests_{0};
};

/// Every agent kind: the local ones plus "llm" (keys: model, base, key_env,
/// timeout_ms, retries, temperature, name).
std::unique_ptr<Agent> make_agent(const AgentSpec& spec, std::uint64_t seed);

}  // namespace arena
