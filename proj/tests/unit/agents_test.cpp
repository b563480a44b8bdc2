#include <gtest/gtest.h>

#include <atomic>
#include <cstdlib>
#include <future>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "arena/agents/agent.hpp"
#include "arena/agents/llm_agent.hpp"
#include "arena/agents/relay.hpp"
#include "arena/core/env.hpp"
#include "arena/core/errors.hpp"
#include "arena/games/nim.hpp"

using namespace arena;
using namespace std::chrono_literals;

namespace {

std::string act_on(Agent& agent, const Env& env) {
  const auto [player, obs] = env.get_observation();
  return agent.act({player, obs.text, env.env_id(), &env.game()});
}

/// Chat-completion stub on a free local port.
class MockEndpoint {
 public:
  using Handler = std::function<void(int call, const httplib::Request&, httplib::Response&)>;
  explicit MockEndpoint(Handler handler) : handler_(std::move(handler)) {
    server_.Post("/v1/chat/completions", [this](const httplib::Request& req, httplib::Response& res) {
      handler_(++calls_, req, res);
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~MockEndpoint() {
    server_.stop();
    thread_.join();
  }
  std::string base() const { return "http://127.0.0.1:" + std::to_string(port_) + "/v1"; }
  int calls() const { return calls_.load(); }

 private:
  Handler handler_;
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
  std::atomic<int> calls_{0};
};

void reply(httplib::Response& res, const std::string& content) {
  nlohmann::json body = {{"choices", {{{"message", {{"role", "assistant"}, {"content", content}}}}}}};
  res.set_content(body.dump(), "application/json");
}

LlmEndpointConfig config_for(const MockEndpoint& mock) {
  ::setenv("ARENA_TEST_LLM_KEY", "sk-test", 1);
  LlmEndpointConfig cfg;
  cfg.base_url = mock.base();
  cfg.model = "test-model";
  cfg.api_key_env = "ARENA_TEST_LLM_KEY";
  cfg.timeout = 300ms;
  cfg.max_retries = 3;
  cfg.backoff = 1ms;
  return cfg;
}

TurnContext ctx(const std::string& text) { return {0, text, "TicTacToe-v0", nullptr}; }

}  // namespace

TEST(RandomAgent, UniformOverEmptyBoard) {
  auto env = Env::make("TicTacToe-v0", 1);
  env.reset(2);
  RandomLegalAgent agent(42);
  std::map<std::string, int> counts;
  for (int i = 0; i < 90000; ++i) ++counts[act_on(agent, env)];
  ASSERT_EQ(counts.size(), 9u);
  // 5 sigma around 10000 for p = 1/9.
  for (const auto& [a, n] : counts) EXPECT_NEAR(n, 10000, 5 * std::sqrt(90000.0 * (1.0 / 9) * (8.0 / 9))) << a;
}

TEST(RandomAgent, DeterministicForSeed) {
  auto run = [](std::uint64_t seed) {
    auto env = Env::make("ConnectFour-v0", 3);
    env.reset(2);
    RandomLegalAgent agent(seed);
    std::vector<std::string> moves;
    while (!env.done()) {
      moves.push_back(act_on(agent, env));
      env.step(moves.back());
    }
    return moves;
  };
  EXPECT_EQ(run(9), run(9));
  EXPECT_NE(run(9), run(10));
}

TEST(RandomAgent, NimSingleton) {
  games::Nim g(2, 0, games::Nim::Config{{0, 0, 1}});
  RandomLegalAgent agent(1);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(agent.act({0, "", "Nim-v0", &g}), "[2 1]");
}

TEST(RandomAgent, NegotiationActionsAlwaysValid) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto env = Env::make("SimpleNegotiation-v0", seed);
    env.reset(2);
    RandomLegalAgent a(seed), b(seed + 1000);
    while (!env.done()) {
      const auto action = act_on(env.current_player() == 0 ? a : b, env);
      const auto r = env.step(action);
      if (r.done) {
        ASSERT_NE(r.info.at("reason"), "invalid_move") << action;
      }
    }
  }
}

TEST(RandomAgent, NeverInvalidInFiniteActionGames) {
  for (const GameInfo* info : registered_games()) {
    auto probe = Env::make(info->env_id, 0);
    probe.reset(info->min_players);
    if (!probe.game().legal_actions().exhaustive) continue;
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
      auto env = Env::make(info->env_id, seed);
      env.reset(info->min_players);
      RandomLegalAgent agent(seed);
      while (!env.done()) env.step(act_on(agent, env));
      ASSERT_NE(env.game().terminal()->kind, TerminalKind::InvalidMove) << info->env_id << " seed " << seed;
    }
  }
}

TEST(ListedAgent, PicksFromValidMovesLine) {
  EXPECT_EQ(listed_moves("[GAME] Valid moves: [0], [4]\n[GAME] Valid moves: [7], [8]"),
            (std::vector<std::string>{"7", "8"}));
  auto env = wrap_llm_observation(Env::make("TicTacToe-v0", 2));
  env.reset(2);
  ListedMoveAgent agent(3);
  while (!env.done()) {
    const auto r = env.step(act_on(agent, env));
    if (r.done) {
      EXPECT_NE(r.info.at("reason"), "invalid_move");
    }
  }
}

TEST(NimPerfect, WinsEveryGameMovingFirst) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto env = wrap_llm_observation(Env::make("Nim-v0", seed));
    env.reset(2);
    NimPerfectAgent perfect;
    RandomLegalAgent random(seed);
    while (!env.done()) env.step(act_on(env.current_player() == 0 ? static_cast<Agent&>(perfect) : random, env));
    EXPECT_EQ(env.close(), (Rewards{1, -1})) << seed;
  }
}

TEST(AgentSpec, Grammar) {
  const auto spec = parse_agent_spec("random:seed=1,name=r1");
  EXPECT_EQ(spec.kind, "random");
  EXPECT_EQ(spec.param("seed"), "1");
  EXPECT_EQ(spec.display_name(), "r1");
  EXPECT_EQ(parse_agent_spec("listed").display_name(), "listed");
  EXPECT_THROW(parse_agent_spec(""), BadAgentSpec);
  EXPECT_THROW(parse_agent_spec("random:seed"), BadAgentSpec);
  EXPECT_THROW(make_agent(parse_agent_spec("wizard"), 0), BadAgentSpec);
  EXPECT_THROW(make_agent(parse_agent_spec("llm:timeout_ms=0,model=x"), 0), BadAgentSpec);
}

TEST(LlmAgent, PassThroughAndRequestShape) {
  nlohmann::json seen;
  std::string auth;
  MockEndpoint mock([&](int, const httplib::Request& req, httplib::Response& res) {
    seen = nlohmann::json::parse(req.body);
    auth = req.get_header_value("Authorization");
    reply(res, "I choose [4]");
  });
  LlmAgent agent(config_for(mock), "m");
  EXPECT_EQ(agent.act(ctx("board text")), "I choose [4]");
  EXPECT_EQ(auth, "Bearer sk-test");
  EXPECT_EQ(seen["model"], "test-model");
  EXPECT_EQ(seen["temperature"], 0.0);
  ASSERT_EQ(seen["messages"].size(), 2u);
  EXPECT_EQ(seen["messages"][0]["role"], "system");
  EXPECT_NE(seen["messages"][0]["content"].get<std::string>().find("TicTacToe-v0"), std::string::npos);
  EXPECT_EQ(seen["messages"][1]["role"], "user");
  EXPECT_EQ(seen["messages"][1]["content"], "board text");
}

TEST(LlmAgent, RetriesAfterTimeouts) {
  MockEndpoint mock([](int call, const httplib::Request&, httplib::Response& res) {
    if (call <= 2) std::this_thread::sleep_for(600ms);
    reply(res, "[ok]");
  });
  LlmAgent agent(config_for(mock));
  EXPECT_EQ(agent.act(ctx("x")), "[ok]");
  EXPECT_EQ(agent.requests_sent(), 3);
}

TEST(LlmAgent, RetriesTransientStatus) {
  MockEndpoint mock([](int call, const httplib::Request&, httplib::Response& res) {
    if (call == 1) {
      res.status = 503;
      return;
    }
    if (call == 2) {
      res.status = 429;
      return;
    }
    reply(res, "[fine]");
  });
  LlmAgent agent(config_for(mock));
  EXPECT_EQ(agent.act(ctx("x")), "[fine]");
  EXPECT_EQ(mock.calls(), 3);
}

TEST(LlmAgent, GivesUpAfterRetries) {
  MockEndpoint mock([](int, const httplib::Request&, httplib::Response& res) { res.status = 500; });
  auto cfg = config_for(mock);
  cfg.max_retries = 2;
  LlmAgent agent(cfg);
  EXPECT_THROW(agent.act(ctx("x")), TimeoutError);
  EXPECT_EQ(mock.calls(), 3);
}

TEST(LlmAgent, MissingKeyMakesNoCall) {
  MockEndpoint mock([](int, const httplib::Request&, httplib::Response& res) { reply(res, "[x]"); });
  auto cfg = config_for(mock);
  cfg.api_key_env = "ARENA_TEST_KEY_THAT_IS_NOT_SET";
  ::unsetenv(cfg.api_key_env.c_str());
  LlmAgent agent(cfg);
  EXPECT_THROW(agent.act(ctx("x")), AuthError);
  EXPECT_EQ(mock.calls(), 0);
  EXPECT_EQ(agent.requests_sent(), 0);
}

TEST(LlmAgent, RejectedKey) {
  MockEndpoint mock([](int, const httplib::Request&, httplib::Response& res) { res.status = 401; });
  LlmAgent agent(config_for(mock));
  EXPECT_THROW(agent.act(ctx("x")), AuthError);
  EXPECT_EQ(mock.calls(), 1);
}

TEST(LlmAgent, MalformedResponses) {
  for (const std::string body : {"not json", R"({"choices":[]})", R"({"choices":[{"message":{}}]})"}) {
    MockEndpoint mock([&](int, const httplib::Request&, httplib::Response& res) { res.set_content(body, "application/json"); });
    LlmAgent agent(config_for(mock));
    EXPECT_THROW(agent.act(ctx("x")), MalformedResponse) << body;
  }
}

TEST(Relay, ReturnsSubmittedText) {
  auto channel = std::make_shared<RelayChannel>();
  std::promise<std::string> seen;
  RelayAgent agent("human", channel, [&](int, std::string_view obs) {
    seen.set_value(std::string(obs));
    EXPECT_TRUE(channel->submit("[4]"));
  }, 2s, 1s);
  EXPECT_EQ(agent.act(ctx("your move")), "[4]");
  EXPECT_EQ(seen.get_future().get(), "your move");
  EXPECT_FALSE(channel->submit("[5]"));
}

TEST(Relay, ClockExpires) {
  auto channel = std::make_shared<RelayChannel>();
  RelayAgent agent("human", channel, [](int, std::string_view) {}, 50ms, 1s);
  EXPECT_THROW(agent.act(ctx("x")), TurnTimeout);
}

TEST(Relay, DisconnectTimesOutAfterGrace) {
  auto channel = std::make_shared<RelayChannel>();
  RelayAgent agent("human", channel, [](int, std::string_view) {}, 10s, 100ms);
  const auto t0 = std::chrono::steady_clock::now();
  std::thread drop([&] {
    std::this_thread::sleep_for(50ms);
    channel->disconnect();
  });
  EXPECT_THROW(agent.act(ctx("x")), TurnTimeout);
  drop.join();
  const auto waited = std::chrono::steady_clock::now() - t0;
  EXPECT_GE(waited, 140ms);
  EXPECT_LT(waited, 5s);
}

TEST(Relay, CancelWakesWaiter) {
  auto channel = std::make_shared<RelayChannel>();
  RelayAgent agent("human", channel, [](int, std::string_view) {}, 10s, 10s);
  std::thread stop([&] {
    std::this_thread::sleep_for(50ms);
    channel->cancel();
  });
  EXPECT_THROW(agent.act(ctx("x")), SessionCancelled);
  stop.join();
}

TEST(Relay, SubmitOutsideTurnRejected) {
  RelayChannel channel;
  EXPECT_FALSE(channel.submit("[1]"));
  channel.open_turn();
  EXPECT_TRUE(channel.submit("[1]"));
  EXPECT_FALSE(channel.submit("[2]"));
  EXPECT_EQ(channel.await(1s, 1s), "[1]");
}
