#include "arena/server/client.hpp"

#include <boost/asio.hpp>

#include "arena/core/errors.hpp"

namespace arena::server {

namespace asio = boost::asio;
using tcp = asio::ip::tcp;

struct ArenaClient::Impl {
  asio::io_context io;
  tcp::socket socket{io};
  asio::streambuf buffer;
};

ArenaClient::ArenaClient(const std::string& host, unsigned short port) : impl_(std::make_unique<Impl>()) {
  tcp::resolver resolver(impl_->io);
  asio::connect(impl_->socket, resolver.resolve(host, std::to_string(port)));
  impl_->socket.set_option(tcp::no_delay(true));
}

ArenaClient::~ArenaClient() { close(); }

void ArenaClient::send(const nlohmann::json& message) {
  const auto line = message.dump() + "\n";
  asio::write(impl_->socket, asio::buffer(line));
}

nlohmann::json ArenaClient::receive(std::chrono::milliseconds timeout) {
  boost::system::error_code result = asio::error::would_block;
  std::size_t n = 0;
  asio::async_read_until(impl_->socket, impl_->buffer, '\n', [&](boost::system::error_code ec, std::size_t len) {
    result = ec;
    n = len;
  });
  impl_->io.restart();
  impl_->io.run_for(timeout);
  if (result == asio::error::would_block) {
    impl_->socket.cancel();
    impl_->io.restart();
    impl_->io.run();
    if (result == asio::error::operation_aborted || result == asio::error::would_block) {
      throw TimeoutError("no message from server within " + std::to_string(timeout.count()) + " ms");
    }
  }
  if (result) throw ArenaError("connection error: " + result.message());
  std::string line(asio::buffers_begin(impl_->buffer.data()),
                   asio::buffers_begin(impl_->buffer.data()) + static_cast<std::ptrdiff_t>(n));
  impl_->buffer.consume(n);
  return nlohmann::json::parse(line);
}

void ArenaClient::close() {
  if (!impl_ || !impl_->socket.is_open()) return;
  boost::system::error_code ignored;
  impl_->socket.shutdown(tcp::socket::shutdown_both, ignored);
  impl_->socket.close(ignored);
}

OnlineResult play_online(ArenaClient& client, Agent& agent, const Registration& hello,
                         const std::vector<std::string>& env_ids, std::chrono::milliseconds timeout) {
  nlohmann::json greet = {{"type", "hello"},
                          {"model_name", hello.model_name},
                          {"model_description", hello.model_description},
                          {"email", hello.email}};
  if (hello.human) greet["human"] = true;
  client.send(greet);
  client.send({{"type", "enqueue"}, {"env_ids", env_ids}});

  OnlineResult out;
  while (true) {
    const auto msg = client.receive(timeout);
    const auto type = msg.value("type", "");
    if (type == "error") {
      throw ArenaError("server error " + msg.value("code", "") + ": " + msg.value("detail", ""));
    } else if (type == "match_found") {
      out.match_id = msg.at("match_id").get<std::string>();
      out.env_id = msg.at("env_id").get<std::string>();
      out.player_id = msg.at("player_id").get<int>();
    } else if (type == "observation") {
      const auto text = msg.at("text").get<std::string>();
      out.observations.push_back(text);
      const TurnContext ctx{out.player_id, text, out.env_id, nullptr};
      client.send({{"type", "action"}, {"match_id", out.match_id}, {"text", agent.act(ctx)}});
    } else if (type == "match_end") {
      out.match_end = msg;
      return out;
    }
  }
}

}  // namespace arena::server
