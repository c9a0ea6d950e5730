#pragma once

// The HTTP-facing request handler. `Service::handle` is transport-free so it
// can be driven directly by tests; `HttpServer` binds it to cpp-httplib.

#include <atomic>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_map>

#include "tossup/config.hpp"
#include "tossup/error.hpp"
#include "tossup/engines.hpp"
#include "tossup/session.hpp"

namespace tossup {

struct Response {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

int http_status(ErrorCode code);

class Service {
 public:
  using Now = std::function<TimePoint()>;

  explicit Service(Config cfg, Now now = [] { return Clock::now(); });
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  // Builds engines on a background thread; requests needing them get 503
  // until it finishes.
  void load_engines_async(std::function<std::shared_ptr<const Engines>()> loader);
  void set_engines(std::shared_ptr<const Engines> engines);
  std::shared_ptr<const Engines> engines() const;
  // Blocks until a pending load finishes. Returns false if it failed.
  bool wait_for_engines();

  Response handle(std::string_view method, std::string_view path, std::string_view body);

  const Config& config() const noexcept { return cfg_; }

 private:
  struct Entry {
    std::mutex mutex;
    Session session;
    explicit Entry(Session s) : session(std::move(s)) {}
  };

  Response create_session(std::string_view body);
  Response put_draft(const std::string& id, std::string_view body);
  Response submit(const std::string& id);
  Response dump(const std::string& id);
  Response distribution();
  Response health();

  std::shared_ptr<Entry> find(const std::string& id);
  std::shared_ptr<const Engines> require_engines() const;
  std::string new_session_id();
  void write_dump_file(const Session& s);

  Config cfg_;
  Now now_;
  SubmissionStore store_;

  mutable std::mutex engines_mutex_;
  std::shared_ptr<const Engines> engines_;
  std::string engines_error_;
  std::atomic<bool> loading_{false};
  std::thread loader_;

  std::mutex sessions_mutex_;
  std::unordered_map<std::string, std::shared_ptr<Entry>> sessions_;
  std::uint64_t id_counter_ = 0;
  std::uint64_t id_salt_;
};

class HttpServer {
 public:
  explicit HttpServer(Service& service);
  ~HttpServer();
  // Blocks until stop(). Returns false if the address could not be bound.
  bool listen(const std::string& host, int port);
  // Binds an ephemeral port on host; returns it, or -1.
  int bind_any_port(const std::string& host);
  bool listen_after_bind();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace tossup
