#include <csignal>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <spdlog/spdlog.h>

#include "arena/agents/llm_agent.hpp"
#include "arena/core/errors.hpp"
#include "arena/core/registry.hpp"
#include "arena/core/rng.hpp"
#include "arena/core/skills.hpp"
#include "arena/server/client.hpp"
#include "arena/server/store.hpp"
#include "arena/server/transport.hpp"
#include "arena/tools/convergence.hpp"
#include "arena/tools/reports.hpp"
#include "arena/tools/tournament.hpp"

namespace fs = std::filesystem;
using namespace arena;

namespace {

constexpr int kOk = 0;
constexpr int kConfigError = 1;
constexpr int kRuntimeError = 2;

/// Bad input detected before any work starts.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out.flush()) throw std::runtime_error("write failed: " + path.string());
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string jsonl(const std::vector<MatchRecord>& records) {
  std::string out;
  for (const auto& r : records) out += to_json(r).dump() + "\n";
  return out;
}

std::vector<AgentSpec> parse_roster(const std::vector<std::string>& texts) {
  std::vector<AgentSpec> roster;
  try {
    for (const auto& t : texts) roster.push_back(parse_agent_spec(t));
  } catch (const ArenaError& e) {
    throw ConfigError(e.what());
  }
  return roster;
}

const SkillTable& skill_table(const std::string& path, SkillTable& storage) {
  if (path.empty()) return builtin_skill_table();
  try {
    storage = parse_skill_table(read_file(path));
  } catch (const ArenaError& e) {
    throw ConfigError(e.what());
  }
  return storage;
}

void write_reports(const fs::path& out, const Leaderboard& board, const SkillTable& table) {
  write_file(out / "leaderboard.json", board.to_json().dump(2) + "\n");
  write_file(out / "leaderboard.csv", leaderboard_csv(board));
  write_file(out / "skill_profiles.csv", skill_profile_csv(skill_profiles(board, table)));
}

// play ----------------------------------------------------------------------

struct PlayArgs {
  std::string env;
  std::vector<std::string> agents;
  std::uint64_t seed = 1;
  std::string out;
  bool wall_time = false;
};

int run_play(const PlayArgs& a) {
  const auto roster = parse_roster(a.agents);
  const GameInfo* info = find_game(a.env);
  if (!info) throw ConfigError("unknown environment id: " + a.env);
  const int n = static_cast<int>(roster.size());
  if (n < info->min_players || n > info->max_players) {
    throw ConfigError(a.env + " needs " + std::to_string(info->min_players) + "-" + std::to_string(info->max_players) +
                      " agents, got " + std::to_string(n));
  }
  const auto names = roster_names(roster);
  std::vector<std::unique_ptr<Agent>> owned;
  std::vector<Agent*> seats;
  for (int s = 0; s < n; ++s) {
    try {
      owned.push_back(make_agent(roster[s], derive_seed(a.seed, "seat/" + std::to_string(s))));
    } catch (const BadAgentSpec& e) {
      throw ConfigError(e.what());
    }
    seats.push_back(owned.back().get());
  }
  MatchSetup setup{"play-" + std::to_string(a.seed), a.env, a.seed, names};
  PlayOptions options;
  options.record_wall_time = a.wall_time;
  auto record = play_match(setup, seats, options);
  Leaderboard board;
  rate_match(board, record);

  if (a.out.empty()) {
    std::cout << to_json(record).dump() << "\n";
    return kOk;
  }
  const fs::path out(a.out);
  write_file(out / "matches.jsonl", jsonl({record}));
  write_reports(out, board, builtin_skill_table());
  for (int s = 0; s < n; ++s) std::cout << names[s] << " " << record.rewards[s] << "\n";
  return kOk;
}

// tournament ----------------------------------------------------------------

struct TournamentArgs {
  std::vector<std::string> envs;
  std::vector<std::string> agents;
  int games = 10;
  std::uint64_t seed = 1;
  int jobs = 1;
  std::string out = "tournament-out";
  std::string skills;
};

int run_tournament_cmd(const TournamentArgs& a) {
  TournamentPlan plan{a.envs, parse_roster(a.agents), a.games, a.seed, a.jobs};
  SkillTable storage;
  const auto& table = skill_table(a.skills, storage);
  try {
    plan.validate();
    for (const auto& spec : plan.roster) make_agent(spec, 0);
  } catch (const ArenaError& e) {
    throw ConfigError(e.what());
  }
  const auto result = run_tournament(plan, [](const AgentSpec& spec, std::uint64_t seed) { return make_agent(spec, seed); });
  const fs::path out(a.out);
  write_file(out / "matches.jsonl", jsonl(result.records));
  write_file(out / "cross_table.csv", cross_table_csv(result.table));
  write_file(out / "head_to_head.csv", head_to_head_csv(result.table));
  write_reports(out, result.board, table);
  std::cout << result.records.size() << " games written to " << out.string() << "\n";
  if (result.error) {
    std::cerr << "tournament aborted: " << *result.error << "\n";
    return kRuntimeError;
  }
  return kOk;
}

// simulate-ratings ----------------------------------------------------------

struct SimulateArgs {
  ConvergenceConfig config;
  std::string out;
};

int run_simulate(SimulateArgs a) {
  try {
    a.config.rating.validate();
  } catch (const ArenaError& e) {
    throw ConfigError(e.what());
  }
  if (a.config.agents < 2) throw ConfigError("need at least 2 synthetic agents");
  if (a.config.seeds < 1 || a.config.max_matches < 1) throw ConfigError("seeds and max-matches must be positive");
  const auto report = simulate_convergence(a.config);
  const auto csv = convergence_csv(report);
  if (a.out.empty()) {
    std::cout << csv;
  } else {
    write_file(fs::path(a.out) / "convergence.csv", csv);
    std::printf("trueskill mean %.2f (%d/%d reached), elo mean %.2f (%d/%d reached)%s\n", report.mean_trueskill(),
                report.reached_trueskill(), a.config.seeds, report.mean_elo(), report.reached_elo(), a.config.seeds,
                report.signal ? "" : ", no signal");
  }
  return kOk;
}

// export --------------------------------------------------------------------

struct ExportArgs {
  std::string data_dir = "arena-data";
  std::string out = "export-out";
  std::string env;
  std::string skills;
};

int run_export(const ExportArgs& a) {
  SkillTable storage;
  const auto& table = skill_table(a.skills, storage);
  const fs::path dir(a.data_dir);
  if (!fs::is_directory(dir)) throw ConfigError("no data directory at " + dir.string());
  const fs::path out(a.out);
  Leaderboard board;
  if (fs::exists(dir / "matches.jsonl")) {
    const server::MatchStore store(dir);
    auto records = store.load_records();
    std::vector<MatchRecord> kept;
    for (auto& r : records) {
      rate_match(board, r);
      if (a.env.empty() || r.env_id == a.env) kept.push_back(std::move(r));
    }
    write_file(out / "matches.jsonl", jsonl(kept));
  } else if (fs::exists(dir / "leaderboard.json")) {
    board = Leaderboard::from_json(nlohmann::json::parse(read_file(dir / "leaderboard.json")));
  }
  write_reports(out, board, table);
  std::cout << board.entries().size() << " participants exported to " << out.string() << "\n";
  return kOk;
}

// serve ---------------------------------------------------------------------

struct ServeArgs {
  std::string config;
  std::string data_dir;
  std::string host;
  int port = -1;
  int http_port = -1;
  bool no_http = false;
  std::vector<std::string> house;
};

int run_serve(const ServeArgs& a) {
  server::ServerConfig cfg;
  try {
    cfg = server::load_server_config(a.config);
  } catch (const ArenaError& e) {
    throw ConfigError(e.what());
  }
  if (!a.data_dir.empty()) cfg.data_dir = a.data_dir;
  if (!a.host.empty()) cfg.host = a.host;
  if (a.port >= 0) cfg.port = static_cast<unsigned short>(a.port);
  if (a.http_port >= 0) cfg.http_port = static_cast<unsigned short>(a.http_port);
  if (a.no_http) cfg.enable_http = false;
  for (const auto& h : a.house) cfg.house_agents.push_back(h);
  try {
    for (const auto& h : cfg.house_agents) make_agent(parse_agent_spec(h), 0);
  } catch (const ArenaError& e) {
    throw ConfigError(e.what());
  }

  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  server::ArenaServer srv(cfg);
  srv.start();
  std::cout << "listening tcp=" << srv.tcp_port() << " http=" << srv.http_port() << std::endl;
  int sig = 0;
  sigwait(&signals, &sig);
  spdlog::info("signal {} received, shutting down", sig);
  srv.stop();
  return kOk;
}

// connect -------------------------------------------------------------------

struct ConnectArgs {
  std::string host = "127.0.0.1";
  int port = 7070;
  std::string agent = "listed";
  std::string name;
  std::string description;
  std::string email;
  bool human = false;
  std::vector<std::string> envs;
  std::uint64_t seed = 1;
  int timeout_ms = 300000;
};

int run_connect(const ConnectArgs& a) {
  std::unique_ptr<Agent> agent;
  try {
    agent = make_agent(parse_agent_spec(a.agent), a.seed);
  } catch (const ArenaError& e) {
    throw ConfigError(e.what());
  }
  server::Registration reg{a.name.empty() ? agent->name() : a.name,
                           a.description.empty() ? agent->description() : a.description, a.email, a.human};
  server::ArenaClient client(a.host, static_cast<unsigned short>(a.port));
  const auto result = server::play_online(client, *agent, reg, a.envs, std::chrono::milliseconds(a.timeout_ms));
  std::cout << result.match_end.dump() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Text game arena: offline matches, tournaments, rating simulations and the online server"};
  app.require_subcommand(1);

  PlayArgs play;
  auto* p = app.add_subcommand("play", "Play one offline match and print or save its record");
  p->add_option("--env", play.env, "Environment id, e.g. TicTacToe-v0")->required();
  p->add_option("--agents", play.agents, "Agent specs, one per seat (kind:key=value,...)")->required();
  p->add_option("--seed", play.seed, "Match seed");
  p->add_option("--out", play.out, "Output directory (default: record JSON on stdout)");
  p->add_flag("--wall-time", play.wall_time, "Record per-turn agent think time");

  TournamentArgs tour;
  auto* t = app.add_subcommand("tournament", "Round-robin tournament with cross tables and ratings");
  t->add_option("--env", tour.envs, "Environment ids")->required();
  t->add_option("--agents", tour.agents, "Roster of agent specs")->required();
  t->add_option("--games", tour.games, "Games per pairing and env");
  t->add_option("--seed", tour.seed, "Base seed");
  t->add_option("--jobs", tour.jobs, "Parallel games");
  t->add_option("--out", tour.out, "Output directory");
  t->add_option("--skill-table", tour.skills, "Tab-separated env/skill/weight table");

  SimulateArgs sim;
  auto* s = app.add_subcommand("simulate-ratings", "TrueSkill vs Elo convergence on synthetic agents");
  s->add_option("--num-agents", sim.config.agents, "Synthetic agents");
  s->add_option("--spread", sim.config.spread_betas, "Latent skill spread in multiples of beta");
  s->add_option("--max-matches", sim.config.max_matches, "Schedule length per seed");
  s->add_option("--seeds", sim.config.seeds, "Number of seeds");
  s->add_option("--seed", sim.config.base_seed, "Base seed");
  s->add_option("--threshold", sim.config.threshold, "Kendall tau target");
  s->add_option("--elo-k", sim.config.elo_k, "Elo K factor");
  s->add_option("--out", sim.out, "Output directory (default: CSV on stdout)");

  ExportArgs exp;
  auto* e = app.add_subcommand("export", "Leaderboard and skill-profile CSVs from a data directory");
  e->add_option("--data-dir", exp.data_dir, "Directory holding matches.jsonl or leaderboard.json");
  e->add_option("--out", exp.out, "Output directory");
  e->add_option("--env", exp.env, "Only export trajectories of this environment");
  e->add_option("--skill-table", exp.skills, "Tab-separated env/skill/weight table");

  ServeArgs serve;
  auto* v = app.add_subcommand("serve", "Run the online arena server until SIGINT/SIGTERM");
  v->add_option("--config", serve.config, "INI config file");
  v->add_option("--data-dir", serve.data_dir, "Data directory");
  v->add_option("--host", serve.host, "Listen address");
  v->add_option("--port", serve.port, "NDJSON TCP port (0: any)");
  v->add_option("--http-port", serve.http_port, "WebSocket/HTTP port (0: any)");
  v->add_flag("--no-http", serve.no_http, "Disable the WebSocket/HTTP listener");
  v->add_option("--house", serve.house, "House agent specs seated by the server");

  ConnectArgs conn;
  auto* c = app.add_subcommand("connect", "Play one online match with a local agent");
  c->add_option("--host", conn.host, "Server address");
  c->add_option("--port", conn.port, "Server NDJSON port");
  c->add_option("--agent", conn.agent, "Agent spec");
  c->add_option("--name", conn.name, "Model name to register");
  c->add_option("--description", conn.description, "Model description");
  c->add_option("--email", conn.email, "Contact email");
  c->add_flag("--human", conn.human, "Register as a human seat (rated as Humanity)");
  c->add_option("--env", conn.envs, "Environment ids to queue for")->required();
  c->add_option("--seed", conn.seed, "Agent seed");
  c->add_option("--timeout-ms", conn.timeout_ms, "Give up after this long without a message");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*p) return run_play(play);
    if (*t) return run_tournament_cmd(tour);
    if (*s) return run_simulate(sim);
    if (*e) return run_export(exp);
    if (*v) return run_serve(serve);
    if (*c) return run_connect(conn);
  } catch (const ConfigError& err) {
    std::cerr << "configuration error: " << err.what() << "\n";
    return kConfigError;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kRuntimeError;
  }
  return kConfigError;
}
