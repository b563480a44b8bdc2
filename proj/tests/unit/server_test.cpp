#include <gtest/gtest.h>

#include <condition_variable>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <mutex>
#include <unistd.h>

#include <boost/asio/connect.hpp>
#include <boost/asio/ip/tcp.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/http.hpp>
#include <boost/beast/websocket.hpp>
#include <json.hpp>

#include "arena/agents/agent.hpp"
#include "arena/core/errors.hpp"
#include "arena/server/config.hpp"
#include "arena/server/matchmaker.hpp"
#include "arena/server/service.hpp"
#include "arena/server/store.hpp"
#include "arena/server/transport.hpp"
#include "arena/tools/match_record.hpp"

using namespace arena;
using namespace arena::server;
using namespace std::chrono_literals;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path scratch_dir(const std::string& tag) {
  const auto dir = fs::temp_directory_path() / ("arena-server-test-" + tag + "-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

Ticket ticket(std::string name, double score, std::vector<std::string> envs = {"TicTacToe-v0"}, std::uint64_t order = 0) {
  Ticket t;
  t.participant = name;
  t.rating_id = std::move(name);
  t.env_ids = std::move(envs);
  t.order = order;
  t.score = score;
  return t;
}

std::set<std::string> names(const MatchGroup& g) {
  std::set<std::string> out;
  for (const auto& t : g.tickets) out.insert(t.participant);
  return out;
}

class FakePeer : public Peer {
 public:
  void send(const json& message) override {
    std::lock_guard lock(mu_);
    inbox_.push_back(message);
    cv_.notify_all();
  }
  json next(std::chrono::milliseconds timeout = 5s) {
    std::unique_lock lock(mu_);
    if (!cv_.wait_for(lock, timeout, [&] { return !inbox_.empty(); })) throw std::runtime_error("no message");
    auto m = inbox_.front();
    inbox_.pop_front();
    return m;
  }
  json next_of(const std::string& type, std::chrono::milliseconds timeout = 5s) {
    for (;;) {
      auto m = next(timeout);
      if (m["type"] == type) return m;
    }
  }

 private:
  std::mutex mu_;
  std::condition_variable cv_;
  std::deque<json> inbox_;
};

ServerConfig quiet_config(const std::string& tag) {
  ServerConfig c;
  c.data_dir = scratch_dir(tag);
  c.sweep_interval = std::chrono::hours(1);
  c.enable_http = false;
  c.port = 0;
  return c;
}

std::string error_code(ArenaService& svc, const std::shared_ptr<FakePeer>& peer, const json& msg) {
  svc.handle(peer, msg.dump());
  const auto reply = peer->next();
  return reply["type"] == "error" ? reply["code"].get<std::string>() : "";
}

json hello(const std::string& name, const std::string& email = "a@x", bool human = false) {
  json h = {{"type", "hello"}, {"model_name", name}, {"model_description", "d"}, {"email", email}};
  if (human) h["human"] = true;
  return h;
}

json enqueue(std::vector<std::string> envs) { return {{"type", "enqueue"}, {"env_ids", envs}}; }

MatchRecord sample_record(std::uint64_t seed) {
  RandomLegalAgent a(seed), b(seed + 1);
  std::vector<Agent*> agents{&a, &b};
  return play_match({"rec-" + std::to_string(seed), "TicTacToe-v0", seed, {"alpha", "beta"}}, agents);
}

}  // namespace

TEST(Matchmaker, PairsClosestScores) {
  std::vector<Ticket> q{ticket("a", 0), ticket("b", 1, {"TicTacToe-v0"}, 1), ticket("c", 19, {"TicTacToe-v0"}, 2)};
  const auto groups = matchmake_sweep(q, std::chrono::steady_clock::now(), 1h);
  ASSERT_EQ(groups.size(), 1u);
  EXPECT_EQ(names(groups[0]), (std::set<std::string>{"a", "b"}));
  ASSERT_EQ(q.size(), 1u);
  EXPECT_EQ(q[0].participant, "c");
}

TEST(Matchmaker, FourTicketsTwoSessions) {
  std::vector<Ticket> q;
  for (int i = 0; i < 4; ++i) q.push_back(ticket("p" + std::to_string(i), i * 3.0, {"TicTacToe-v0"}, i));
  const auto groups = matchmake_sweep(q, std::chrono::steady_clock::now(), 1h);
  ASSERT_EQ(groups.size(), 2u);
  EXPECT_TRUE(q.empty());
  std::set<std::string> seen;
  for (const auto& g : groups) {
    EXPECT_EQ(g.tickets.size(), 2u);
    for (const auto& n : names(g)) EXPECT_TRUE(seen.insert(n).second);
  }
}

TEST(Matchmaker, OddCountLeavesOneWaiting) {
  std::vector<Ticket> q;
  for (int i = 0; i < 5; ++i) q.push_back(ticket("p" + std::to_string(i), i, {"LiarsDice-v0"}, i));
  const auto groups = matchmake_sweep(q, std::chrono::steady_clock::now(), 1h);
  EXPECT_EQ(groups.size(), 2u);
  EXPECT_EQ(q.size(), 1u);
}

TEST(Matchmaker, SameRatingIdNeverMeets) {
  std::vector<Ticket> q{ticket("h1", 0), ticket("h2", 0, {"TicTacToe-v0"}, 1)};
  q[0].rating_id = q[1].rating_id = "Humanity";
  EXPECT_TRUE(matchmake_sweep(q, std::chrono::steady_clock::now(), 1h).empty());
  EXPECT_EQ(q.size(), 2u);
}

TEST(Matchmaker, HouseTicketsNeverMeet) {
  std::vector<Ticket> q{ticket("x", 0), ticket("y", 0, {"TicTacToe-v0"}, 1)};
  q[0].house = q[1].house = true;
  EXPECT_TRUE(matchmake_sweep(q, std::chrono::steady_clock::now(), 1h).empty());
}

TEST(Matchmaker, NeedsSharedEnv) {
  std::vector<Ticket> q{ticket("a", 0, {"TicTacToe-v0"}), ticket("b", 0, {"Nim-v0"}, 1)};
  EXPECT_TRUE(matchmake_sweep(q, std::chrono::steady_clock::now(), 1h).empty());
  q.push_back(ticket("c", 5, {"Nim-v0", "TicTacToe-v0"}, 2));
  const auto groups = matchmake_sweep(q, std::chrono::steady_clock::now(), 1h);
  ASSERT_EQ(groups.size(), 1u);
  EXPECT_EQ(q.size(), 1u);
  for (const auto& t : groups[0].tickets) {
    EXPECT_NE(std::find(t.env_ids.begin(), t.env_ids.end(), groups[0].env_id), t.env_ids.end());
  }
}

TEST(Matchmaker, StarvedTicketAnchorsFirst) {
  const auto now = std::chrono::steady_clock::now();
  std::vector<Ticket> q{ticket("old", 40, {"TicTacToe-v0"}, 0), ticket("a", 0, {"TicTacToe-v0"}, 1),
                        ticket("b", 1, {"TicTacToe-v0"}, 2)};
  q[0].enqueued = now - 1min;
  q[1].enqueued = q[2].enqueued = now;
  const auto groups = matchmake_sweep(q, now, 30s);
  ASSERT_EQ(groups.size(), 1u);
  EXPECT_TRUE(names(groups[0]).count("old"));
  EXPECT_EQ(q.size(), 1u);
}

TEST(Config, IniThenEnvironment) {
  const auto dir = scratch_dir("config");
  const auto path = dir / "arena.ini";
  std::ofstream(path) << "[server]\nport = 9001\nhttp_port = 9002\ndata_dir = /tmp/somewhere\n"
                         "[clocks]\nhuman_ms = 5000\n[rating]\nbeta = 4.0\n[house]\nagents = random:seed=1; listed\n";
  ::setenv("ARENA_PORT", "9100", 1);
  const auto c = load_server_config(path);
  ::unsetenv("ARENA_PORT");
  EXPECT_EQ(c.port, 9100);
  EXPECT_EQ(c.http_port, 9002);
  EXPECT_EQ(c.data_dir, fs::path("/tmp/somewhere"));
  EXPECT_EQ(c.human_clock, 5000ms);
  EXPECT_DOUBLE_EQ(c.rating.beta, 4.0);
  EXPECT_EQ(c.house_agents, (std::vector<std::string>{"random:seed=1", "listed"}));
}

TEST(Config, RejectsBadValues) {
  const auto dir = scratch_dir("badconfig");
  std::ofstream(dir / "a.ini") << "[server]\nport = seventy\n";
  EXPECT_THROW(load_server_config(dir / "a.ini"), ArenaError);
  std::ofstream(dir / "b.ini") << "[server]\ncolour = blue\n";
  EXPECT_THROW(load_server_config(dir / "b.ini"), ArenaError);
  EXPECT_THROW(load_server_config(dir / "missing.ini"), ArenaError);
}

TEST(Store, AppendLoadAndTornTail) {
  MatchStore store(scratch_dir("store"));
  const auto r1 = sample_record(1);
  const auto r2 = sample_record(2);
  store.append(r1);
  store.append(r2);
  {
    std::ofstream out(store.matches_path(), std::ios::app);
    out << R"({"match_id":"torn","env_id":"TicT)";
  }
  const auto records = store.load_records();
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(to_json(records[0]), to_json(r1));
  EXPECT_EQ(to_json(records[1]), to_json(r2));
}

TEST(Store, RecoveryMatchesLiveRating) {
  MatchStore store(scratch_dir("recover"));
  Leaderboard live;
  for (std::uint64_t s = 0; s < 8; ++s) {
    auto r = sample_record(s);
    rate_match(live, r);
    store.append(r);
  }
  const auto recovered = store.recover(RatingConfig{});
  for (const auto& [id, e] : live.entries()) {
    const auto* r = recovered.find(id);
    ASSERT_NE(r, nullptr);
    EXPECT_EQ(r->global.rating.mu, e.global.rating.mu);
    EXPECT_EQ(r->global.rating.sigma, e.global.rating.sigma);
    EXPECT_EQ(r->global.matches, e.global.matches);
  }
  EXPECT_TRUE(fs::exists(store.leaderboard_path()));
}

TEST(Service, ProtocolErrors) {
  ArenaService svc(quiet_config("protocol"));
  svc.start();
  auto p = std::make_shared<FakePeer>();
  auto q = std::make_shared<FakePeer>();
  auto r = std::make_shared<FakePeer>();

  svc.handle(p, "{nope");
  EXPECT_EQ(p->next()["code"], "bad_json");
  EXPECT_EQ(error_code(svc, p, {{"type", "dance"}}), "unknown_type");
  EXPECT_EQ(error_code(svc, p, enqueue({"TicTacToe-v0"})), "not_registered");
  EXPECT_EQ(error_code(svc, p, hello("humanity")), "reserved_name");

  svc.handle(p, hello("alpha", "a@x").dump());
  svc.handle(p, hello("alpha", "a@x").dump());  // idempotent, no reply
  EXPECT_EQ(error_code(svc, q, hello("alpha", "other@x")), "name_conflict");
  EXPECT_EQ(error_code(svc, p, enqueue({"Chess-v9"})), "unknown_env");
  EXPECT_EQ(error_code(svc, p, enqueue({"Wordle-v0"})), "unsupported_env");
  EXPECT_EQ(error_code(svc, p, {{"type", "action"}, {"match_id", "m1"}, {"text", "[0]"}}), "not_in_match");

  svc.handle(p, enqueue({"TicTacToe-v0"}).dump());
  EXPECT_EQ(p->next()["type"], "queued");
  EXPECT_EQ(error_code(svc, p, enqueue({"TicTacToe-v0"})), "already_queued");

  svc.handle(r, hello("beta", "b@x").dump());
  svc.handle(r, enqueue({"TicTacToe-v0"}).dump());
  EXPECT_EQ(r->next()["type"], "queued");
  EXPECT_EQ(svc.queued(), 2u);
  svc.sweep();
  const auto found_p = p->next_of("match_found");
  const auto found_r = r->next_of("match_found");
  EXPECT_EQ(found_p["match_id"], found_r["match_id"]);
  auto& second = found_p["player_id"] == 1 ? p : r;
  const auto mid = found_p["match_id"].get<std::string>();
  EXPECT_EQ(error_code(svc, second, {{"type", "action"}, {"match_id", mid}, {"text", "[4]"}}), "not_your_turn");
  svc.stop();
}

TEST(Service, FreshBoardAndNewRegistrant) {
  ArenaService svc(quiet_config("fresh"));
  svc.start();
  EXPECT_TRUE(svc.leaderboard().entries().empty());
  auto p = std::make_shared<FakePeer>();
  svc.handle(p, hello("gamma").dump());
  const auto* e = svc.leaderboard().find("gamma");
  ASSERT_NE(e, nullptr);
  EXPECT_DOUBLE_EQ(e->global.rating.mu, 25.0);
  EXPECT_DOUBLE_EQ(e->global.rating.sigma, 25.0 / 3.0);
  EXPECT_EQ(e->global.matches, 0);
  svc.stop();
}

TEST(Service, IdleHumanForfeitsAndHumanityDrops) {
  auto cfg = quiet_config("idle");
  cfg.human_clock = 150ms;
  cfg.model_clock = 5s;
  ArenaService svc(cfg);
  svc.start();
  auto bot = std::make_shared<FakePeer>();
  auto human = std::make_shared<FakePeer>();
  svc.handle(bot, hello("bot").dump());
  svc.handle(human, hello("carol", "c@x", true).dump());
  svc.handle(bot, enqueue({"TicTacToe-v0"}).dump());
  svc.handle(human, enqueue({"TicTacToe-v0"}).dump());
  svc.sweep();
  const auto mid = bot->next_of("match_found")["match_id"].get<std::string>();
  json end;
  for (;;) {
    const auto m = bot->next();
    if (m["type"] == "observation") {
      svc.handle(bot, json{{"type", "action"}, {"match_id", mid}, {"text", "[4]"}}.dump());
    } else if (m["type"] == "match_end") {
      end = m;
      break;
    }
  }
  const auto human_end = human->next_of("match_end");
  EXPECT_EQ(human_end["match_id"], mid);
  const auto board = svc.leaderboard();
  EXPECT_LT(board.find("Humanity")->global.rating.mu, 25.0);
  EXPECT_GT(board.find("bot")->global.rating.mu, 25.0);
  EXPECT_EQ(board.find("carol"), nullptr);
  svc.stop();
}

namespace {

std::string http_get(unsigned short port, const std::string& target, int* status) {
  namespace beast = boost::beast;
  boost::asio::io_context io;
  boost::asio::ip::tcp::socket socket(io);
  socket.connect({boost::asio::ip::make_address("127.0.0.1"), port});
  beast::http::request<beast::http::empty_body> req{beast::http::verb::get, target, 11};
  req.set(beast::http::field::host, "127.0.0.1");
  beast::http::write(socket, req);
  beast::flat_buffer buf;
  beast::http::response<beast::http::string_body> res;
  beast::http::read(socket, buf, res);
  *status = static_cast<int>(res.result_int());
  return res.body();
}

}  // namespace

TEST(Transport, WebSocketAndHttp) {
  namespace beast = boost::beast;
  auto cfg = quiet_config("ws");
  cfg.enable_http = true;
  cfg.http_port = 0;
  ArenaServer server(cfg);
  server.start();
  ASSERT_NE(server.http_port(), 0);

  boost::asio::io_context io;
  beast::websocket::stream<boost::asio::ip::tcp::socket> ws(io);
  ws.next_layer().connect({boost::asio::ip::make_address("127.0.0.1"), server.http_port()});
  ws.handshake("127.0.0.1", "/");
  ws.text(true);
  ws.write(boost::asio::buffer(hello("wsbot").dump()));
  ws.write(boost::asio::buffer(enqueue({"TicTacToe-v0"}).dump()));
  beast::flat_buffer buf;
  ws.read(buf);
  EXPECT_EQ(json::parse(beast::buffers_to_string(buf.data()))["type"], "queued");
  ws.close(beast::websocket::close_code::normal);

  int status = 0;
  const auto board = json::parse(http_get(server.http_port(), "/leaderboard.json", &status));
  EXPECT_EQ(status, 200);
  EXPECT_TRUE(board.dump().find("wsbot") != std::string::npos);
  const auto csv = http_get(server.http_port(), "/leaderboard.csv", &status);
  EXPECT_EQ(status, 200);
  EXPECT_NE(csv.find("wsbot"), std::string::npos);
  http_get(server.http_port(), "/skill-profiles", &status);
  EXPECT_EQ(status, 200);
  http_get(server.http_port(), "/nothing-here", &status);
  EXPECT_EQ(status, 404);
  server.stop();
}
