#include "arena/server/transport.hpp"

#include <deque>

#include <boost/asio.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/http.hpp>
#include <boost/beast/websocket.hpp>
#include <spdlog/spdlog.h>

#include "arena/tools/reports.hpp"

namespace arena::server {

namespace asio = boost::asio;
namespace beast = boost::beast;
namespace http = beast::http;
namespace websocket = beast::websocket;
using tcp = asio::ip::tcp;

namespace {

constexpr std::size_t kMaxLine = 1 << 20;

class LineConnection final : public Peer, public std::enable_shared_from_this<LineConnection> {
 public:
  LineConnection(tcp::socket socket, ArenaService& service)
      : socket_(std::move(socket)), service_(service) {}

  void start() { read(); }

  void send(const nlohmann::json& message) override {
    auto line = message.dump() + "\n";
    asio::post(socket_.get_executor(), [self = shared_from_this(), line = std::move(line)]() mutable {
      if (self->closed_) return;
      self->outbox_.push_back(std::move(line));
      if (self->outbox_.size() == 1) self->write();
    });
  }

  void close() {
    asio::post(socket_.get_executor(), [self = shared_from_this()] { self->shutdown(); });
  }

 private:
  void read() {
    asio::async_read_until(socket_, buffer_, '\n',
                           [self = shared_from_this()](beast::error_code ec, std::size_t n) {
                             self->on_read(ec, n);
                           });
  }

  void on_read(beast::error_code ec, std::size_t n) {
    if (ec) {
      shutdown();
      return;
    }
    std::string line(asio::buffers_begin(buffer_.data()), asio::buffers_begin(buffer_.data()) + static_cast<std::ptrdiff_t>(n));
    buffer_.consume(n);
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    if (!line.empty()) service_.handle(shared_from_this(), line);
    if (buffer_.size() > kMaxLine) {
      shutdown();
      return;
    }
    read();
  }

  void write() {
    asio::async_write(socket_, asio::buffer(outbox_.front()),
                      [self = shared_from_this()](beast::error_code ec, std::size_t) {
                        if (ec) {
                          self->shutdown();
                          return;
                        }
                        self->outbox_.pop_front();
                        if (!self->outbox_.empty()) self->write();
                      });
  }

  void shutdown() {
    if (closed_) return;
    closed_ = true;
    outbox_.clear();
    beast::error_code ignored;
    socket_.shutdown(tcp::socket::shutdown_both, ignored);
    socket_.close(ignored);
    service_.disconnect(shared_from_this());
  }

  tcp::socket socket_;
  ArenaService& service_;
  asio::streambuf buffer_{kMaxLine + 4096};
  std::deque<std::string> outbox_;
  bool closed_ = false;
};

class WebSocketConnection final : public Peer, public std::enable_shared_from_this<WebSocketConnection> {
 public:
  WebSocketConnection(tcp::socket socket, ArenaService& service)
      : ws_(std::move(socket)), service_(service) {}

  void start(http::request<http::string_body> request) {
    ws_.set_option(websocket::stream_base::timeout::suggested(beast::role_type::server));
    ws_.async_accept(request, [self = shared_from_this()](beast::error_code ec) {
                       if (ec) return self->shutdown();
                       self->read();
                     });
  }

  void send(const nlohmann::json& message) override {
    asio::post(ws_.get_executor(), [self = shared_from_this(), text = message.dump()]() mutable {
      if (self->closed_) return;
      self->outbox_.push_back(std::move(text));
      if (self->outbox_.size() == 1) self->write();
    });
  }

  void close() {
    asio::post(ws_.get_executor(), [self = shared_from_this()] { self->shutdown(); });
  }

 private:
  void read() {
    ws_.async_read(buffer_, [self = shared_from_this()](beast::error_code ec, std::size_t) {
                     if (ec) return self->shutdown();
                     const auto text = beast::buffers_to_string(self->buffer_.data());
                     self->buffer_.consume(self->buffer_.size());
                     std::size_t start = 0;
                     while (start < text.size()) {
                       auto end = text.find('\n', start);
                       if (end == std::string::npos) end = text.size();
                       const auto part = std::string_view(text).substr(start, end - start);
                       if (!part.empty() && part != "\r") self->service_.handle(self, part);
                       start = end + 1;
                     }
                     self->read();
                   });
  }

  void write() {
    ws_.text(true);
    ws_.async_write(asio::buffer(outbox_.front()),
                    [self = shared_from_this()](beast::error_code ec, std::size_t) {
                      if (ec) return self->shutdown();
                      self->outbox_.pop_front();
                      if (!self->outbox_.empty()) self->write();
                    });
  }

  void shutdown() {
    if (closed_) return;
    closed_ = true;
    outbox_.clear();
    beast::error_code ignored;
    beast::get_lowest_layer(ws_).socket().shutdown(tcp::socket::shutdown_both, ignored);
    beast::get_lowest_layer(ws_).socket().close(ignored);
    service_.disconnect(shared_from_this());
  }

  websocket::stream<beast::tcp_stream> ws_;
  ArenaService& service_;
  beast::flat_buffer buffer_;
  std::deque<std::string> outbox_;
  bool closed_ = false;
};

/// Reads one HTTP request; upgrades to WebSocket or answers a GET.
class HttpSession final : public std::enable_shared_from_this<HttpSession> {
 public:
  HttpSession(tcp::socket socket, ArenaService& service) : stream_(std::move(socket)), service_(service) {}

  void start() {
    stream_.expires_after(std::chrono::seconds(30));
    http::async_read(stream_, buffer_, request_, [self = shared_from_this()](beast::error_code ec, std::size_t) {
      if (ec) return;
      self->route();
    });
  }

 private:
  void route() {
    if (websocket::is_upgrade(request_)) {
      stream_.expires_never();
      auto ws = std::make_shared<WebSocketConnection>(stream_.release_socket(), service_);
      ws->start(std::move(request_));
      return;
    }
    auto res = std::make_shared<http::response<http::string_body>>();
    res->version(request_.version());
    res->set(http::field::access_control_allow_origin, "*");
    res->keep_alive(false);
    const auto target = std::string(request_.target());
    if (request_.method() != http::verb::get) {
      res->result(http::status::method_not_allowed);
    } else if (target == "/leaderboard.json") {
      res->result(http::status::ok);
      res->set(http::field::content_type, "application/json");
      res->body() = service_.leaderboard().to_json().dump(2) + "\n";
    } else if (target == "/leaderboard.csv") {
      res->result(http::status::ok);
      res->set(http::field::content_type, "text/csv");
      res->body() = leaderboard_csv(service_.leaderboard());
    } else if (target == "/skill-profiles") {
      res->result(http::status::ok);
      res->set(http::field::content_type, "application/json");
      res->body() = service_.skill_profiles_json().dump(2) + "\n";
    } else if (target == "/skill-profiles.csv") {
      res->result(http::status::ok);
      res->set(http::field::content_type, "text/csv");
      res->body() = skill_profile_csv(service_.skill_profiles());
    } else {
      res->result(http::status::not_found);
      res->body() = "not found\n";
    }
    res->prepare_payload();
    http::async_write(stream_, *res, [self = shared_from_this(), res](beast::error_code, std::size_t) {
      beast::error_code ignored;
      self->stream_.socket().shutdown(tcp::socket::shutdown_send, ignored);
    });
  }

  beast::tcp_stream stream_;
  ArenaService& service_;
  beast::flat_buffer buffer_;
  http::request<http::string_body> request_;
};

template <typename OnAccept>
void accept_loop(asio::io_context& io, tcp::acceptor& acceptor, OnAccept on_accept) {
  acceptor.async_accept(asio::make_strand(io), [&io, &acceptor, on_accept](beast::error_code ec, tcp::socket socket) {
    if (ec == asio::error::operation_aborted) return;
    if (!ec) on_accept(std::move(socket));
    accept_loop(io, acceptor, on_accept);
  });
}

}  // namespace

struct ArenaServer::Impl {
  asio::io_context io{1};
  tcp::acceptor line_acceptor{io};
  tcp::acceptor http_acceptor{io};
  std::thread thread;
  bool running = false;
};

ArenaServer::ArenaServer(ServerConfig config) : service_(std::move(config)), impl_(std::make_unique<Impl>()) {}

ArenaServer::~ArenaServer() { stop(); }

void ArenaServer::start() {
  const auto& cfg = service_.config();
  const auto address = asio::ip::make_address(cfg.host);
  auto open = [&](tcp::acceptor& acceptor, unsigned short port) {
    const tcp::endpoint endpoint(address, port);
    acceptor.open(endpoint.protocol());
    acceptor.set_option(asio::socket_base::reuse_address(true));
    acceptor.bind(endpoint);
    acceptor.listen();
  };
  open(impl_->line_acceptor, cfg.port);
  accept_loop(impl_->io, impl_->line_acceptor, [this](tcp::socket socket) {
    std::make_shared<LineConnection>(std::move(socket), service_)->start();
  });
  if (cfg.enable_http) {
    open(impl_->http_acceptor, cfg.http_port);
    accept_loop(impl_->io, impl_->http_acceptor, [this](tcp::socket socket) {
      std::make_shared<HttpSession>(std::move(socket), service_)->start();
    });
  }
  service_.start();
  impl_->running = true;
  impl_->thread = std::thread([this] { impl_->io.run(); });
  spdlog::info("arena server listening on {}:{} (ndjson){}", cfg.host, tcp_port(),
               cfg.enable_http ? fmt::format(" and {}:{} (websocket/http)", cfg.host, http_port()) : "");
}

void ArenaServer::stop() {
  if (!impl_ || !impl_->running) return;
  impl_->running = false;
  asio::post(impl_->io, [this] {
    beast::error_code ignored;
    impl_->line_acceptor.close(ignored);
    impl_->http_acceptor.close(ignored);
  });
  service_.stop();
  impl_->io.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

unsigned short ArenaServer::tcp_port() const { return impl_->line_acceptor.local_endpoint().port(); }

unsigned short ArenaServer::http_port() const {
  return impl_->http_acceptor.is_open() ? impl_->http_acceptor.local_endpoint().port() : 0;
}

}  // namespace arena::server
