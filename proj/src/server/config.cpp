#include "arena/server/config.hpp"

#include <cstdlib>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "arena/core/errors.hpp"
#include "arena/games/text_util.hpp"

namespace arena::server {
namespace {

long long to_int(const std::string& key, const std::string& value) {
  const auto v = text::parse_int(text::trim(value));
  if (!v) throw ArenaError("config " + key + ": '" + value + "' is not an integer");
  return *v;
}

unsigned short to_port(const std::string& key, const std::string& value) {
  const auto v = to_int(key, value);
  if (v < 0 || v > 65535) throw ArenaError("config " + key + ": port out of range");
  return static_cast<unsigned short>(v);
}

std::chrono::milliseconds to_ms(const std::string& key, const std::string& value) {
  const auto v = to_int(key, value);
  if (v <= 0) throw ArenaError("config " + key + ": must be positive");
  return std::chrono::milliseconds(v);
}

std::vector<std::string> split_specs(const std::string& value) {
  std::vector<std::string> out;
  std::string_view rest = value;
  while (!rest.empty()) {
    const auto semi = rest.find(';');
    const auto item = text::trim(rest.substr(0, semi));
    if (!item.empty()) out.emplace_back(item);
    if (semi == std::string_view::npos) break;
    rest = rest.substr(semi + 1);
  }
  return out;
}

double to_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double d = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return d;
  } catch (const std::exception&) {
    throw ArenaError("config " + key + ": '" + value + "' is not a number");
  }
}

void set(ServerConfig& c, const std::string& key, const std::string& value) {
  if (key == "server.host") c.host = value;
  else if (key == "server.port") c.port = to_port(key, value);
  else if (key == "server.http_port") c.http_port = to_port(key, value);
  else if (key == "server.enable_http") c.enable_http = value == "1" || value == "true" || value == "yes";
  else if (key == "server.data_dir") c.data_dir = value;
  else if (key == "server.sweep_interval_ms") c.sweep_interval = to_ms(key, value);
  else if (key == "server.starvation_age_ms") c.starvation_age = to_ms(key, value);
  else if (key == "clocks.human_ms") c.human_clock = to_ms(key, value);
  else if (key == "clocks.model_ms") c.model_clock = to_ms(key, value);
  else if (key == "clocks.disconnect_grace_ms") c.disconnect_grace = to_ms(key, value);
  else if (key == "house.agents") c.house_agents = split_specs(value);
  else if (key == "rating.beta") c.rating.beta = to_double(key, value);
  else if (key == "rating.tau") c.rating.tau = to_double(key, value);
  else if (key == "rating.draw_probability") c.rating.draw_probability = to_double(key, value);
  else throw ArenaError("config: unknown key " + key);
}

}  // namespace

void apply_env_overrides(ServerConfig& config) {
  static const std::pair<const char*, const char*> kVars[] = {
      {"ARENA_HOST", "server.host"},
      {"ARENA_PORT", "server.port"},
      {"ARENA_HTTP_PORT", "server.http_port"},
      {"ARENA_DATA_DIR", "server.data_dir"},
      {"ARENA_SWEEP_INTERVAL_MS", "server.sweep_interval_ms"},
      {"ARENA_HUMAN_CLOCK_MS", "clocks.human_ms"},
      {"ARENA_MODEL_CLOCK_MS", "clocks.model_ms"},
      {"ARENA_DISCONNECT_GRACE_MS", "clocks.disconnect_grace_ms"},
      {"ARENA_HOUSE_AGENTS", "house.agents"},
  };
  for (const auto& [var, key] : kVars) {
    if (const char* v = std::getenv(var)) set(config, key, v);
  }
}

ServerConfig load_server_config(const std::filesystem::path& path) {
  ServerConfig config;
  if (!path.empty()) {
    boost::property_tree::ptree tree;
    try {
      boost::property_tree::read_ini(path.string(), tree);
    } catch (const boost::property_tree::ini_parser_error& e) {
      throw ArenaError("config " + path.string() + ": " + e.what());
    }
    for (const auto& [section, body] : tree) {
      for (const auto& [key, value] : body) set(config, section + "." + key, value.get_value<std::string>());
    }
  }
  apply_env_overrides(config);
  config.rating.validate();
  return config;
}

}  // namespace arena::server
