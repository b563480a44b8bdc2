#include "arena/agents/llm_agent.hpp"

#include <cstdlib>
#include <regex>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "arena/core/errors.hpp"
#include "arena/games/text_util.hpp"

namespace arena {
namespace {

struct Endpoint {
  std::string origin;
  std::string path;
};

Endpoint split_url(const std::string& base) {
  static const std::regex url(R"(^(https?://[^/]+)(/.*)?$)");
  std::smatch m;
  if (!std::regex_match(base, m, url)) throw ArenaError("bad LLM base URL '" + base + "'");
  std::string path = m[2].str();
  while (!path.empty() && path.back() == '/') path.pop_back();
  return {m[1].str(), path + "/chat/completions"};
}

bool transient_status(int status) { return status == 408 || status == 429 || status >= 500; }

}  // namespace

void LlmEndpointConfig::validate() const {
  if (timeout.count() <= 0) throw ArenaError("LLM timeout must be positive");
  if (max_retries < 0) throw ArenaError("LLM retries must be non-negative");
  if (model.empty()) throw ArenaError("LLM model name is empty");
}

LlmAgent::LlmAgent(LlmEndpointConfig config, std::string name)
    : config_(std::move(config)), name_(name.empty() ? config_.model : std::move(name)) {
  config_.validate();
}

std::string LlmAgent::act(const TurnContext& ctx) {
  const char* key = std::getenv(config_.api_key_env.c_str());
  if (key == nullptr || *key == '\0') {
    throw AuthError("environment variable " + config_.api_key_env + " is not set");
  }
  const auto endpoint = split_url(config_.base_url);
  const nlohmann::json body = {
      {"model", config_.model},
      {"messages",
       {{{"role", "system"},
         {"content", "You are playing " + std::string(ctx.env_id) +
                         ". Reply with your reasoning if you like, and put your move in square brackets."}},
        {{"role", "user"}, {"content", std::string(ctx.observation)}}}},
      {"temperature", config_.temperature},
  };
  const auto payload = body.dump();

  auto delay = config_.backoff;
  std::string last_failure;
  for (int attempt = 0; attempt <= config_.max_retries; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(delay);
      delay *= 2;
    }
    httplib::Client client(endpoint.origin);
    client.set_connection_timeout(config_.timeout);
    client.set_read_timeout(config_.timeout);
    client.set_write_timeout(config_.timeout);
    client.set_bearer_token_auth(key);
    ++requests_;
    const auto res = client.Post(endpoint.path, payload, "application/json");
    if (!res) {
      last_failure = httplib::to_string(res.error());
      continue;
    }
    if (res->status == 401 || res->status == 403) {
      throw AuthError("endpoint rejected the API key (HTTP " + std::to_string(res->status) + ")");
    }
    if (transient_status(res->status)) {
      last_failure = "HTTP " + std::to_string(res->status);
      continue;
    }
    if (res->status < 200 || res->status >= 300) {
      throw MalformedResponse("endpoint returned HTTP " + std::to_string(res->status));
    }
    const auto reply = nlohmann::json::parse(res->body, nullptr, false);
    if (reply.is_discarded()) throw MalformedResponse("response is not JSON");
    try {
      const auto& content = reply.at("choices").at(0).at("message").at("content");
      if (!content.is_string()) throw MalformedResponse("message content is not text");
      return content.get<std::string>();
    } catch (const nlohmann::json::exception&) {
      throw MalformedResponse("response has no choices[0].message.content");
    }
  }
  throw TimeoutError("no usable response after " + std::to_string(config_.max_retries + 1) +
                     " attempts (last: " + last_failure + ")");
}

std::unique_ptr<Agent> make_agent(const AgentSpec& spec, std::uint64_t seed) {
  if (spec.kind != "llm") return make_local_agent(spec, seed);
  LlmEndpointConfig cfg;
  cfg.model = spec.param("model");
  if (cfg.model.empty()) throw BadAgentSpec("llm agent needs model=");
  cfg.base_url = spec.param("base", cfg.base_url);
  cfg.api_key_env = spec.param("key_env", cfg.api_key_env);
  auto int_param = [&](std::string_view key, long long fallback) {
    const auto text = spec.param(key);
    if (text.empty()) return fallback;
    const auto v = text::parse_int(text);
    if (!v) throw BadAgentSpec("llm agent: " + std::string(key) + " must be an integer");
    return *v;
  };
  cfg.timeout = std::chrono::milliseconds(int_param("timeout_ms", cfg.timeout.count()));
  cfg.max_retries = static_cast<int>(int_param("retries", cfg.max_retries));
  if (const auto t = spec.param("temperature"); !t.empty()) {
    try {
      cfg.temperature = std::stod(t);
    } catch (const std::exception&) {
      throw BadAgentSpec("llm agent: temperature must be a number");
    }
  }
  const auto name = spec.params.count("name") ? spec.param("name") : cfg.model;
  try {
    return std::make_unique<LlmAgent>(cfg, name);
  } catch (const ArenaError& e) {
    throw BadAgentSpec(e.what());
  }
}

}  // namespace arena
