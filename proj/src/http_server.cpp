#include "tossup/service.hpp"

#include <httplib.h>

namespace tossup {

struct HttpServer::Impl {
  Service& service;
  httplib::Server server;

  explicit Impl(Service& s) : service(s) {
    auto dispatch = [this](const httplib::Request& req, httplib::Response& res) {
      const Response r = service.handle(req.method, req.path, req.body);
      res.status = r.status;
      res.set_content(r.body, r.content_type);
    };
    server.Get(".*", dispatch);
    server.Post(".*", dispatch);
    server.Put(".*", dispatch);
    server.Delete(".*", dispatch);
  }
};

HttpServer::HttpServer(Service& service) : impl_(std::make_unique<Impl>(service)) {}

HttpServer::~HttpServer() { stop(); }

bool HttpServer::listen(const std::string& host, int port) { return impl_->server.listen(host, port); }

int HttpServer::bind_any_port(const std::string& host) { return impl_->server.bind_to_any_port(host); }

bool HttpServer::listen_after_bind() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_->server.is_running()) impl_->server.stop();
}

}  // namespace tossup
