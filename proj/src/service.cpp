#include "tossup/service.hpp"

#include <cstdio>
#include <fstream>
#include <random>

#include <json.hpp>

#include "tossup/error.hpp"
#include "tossup/wire.hpp"

#ifndef TOSSUP_VERSION
#define TOSSUP_VERSION "dev"
#endif

namespace tossup {

namespace {

Response json_response(int status, const Json& body) { return Response{status, "application/json", body.dump()}; }

Response error_response(int status, std::string_view code, std::string_view message) {
  return json_response(status, Json{{"code", code}, {"message", message}});
}

Response error_response(const Error& e) { return error_response(http_status(e.code()), to_string(e.code()), e.what()); }

std::vector<std::string_view> split_path(std::string_view path) {
  if (auto q = path.find('?'); q != std::string_view::npos) path = path.substr(0, q);
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (pos <= path.size()) {
    const auto slash = path.find('/', pos);
    const auto end = slash == std::string_view::npos ? path.size() : slash;
    if (end > pos) parts.push_back(path.substr(pos, end - pos));
    if (slash == std::string_view::npos) break;
    pos = slash + 1;
  }
  return parts;
}

Json parse_body(std::string_view body) {
  if (body.find_first_not_of(" \t\r\n") == std::string_view::npos) return Json::object();
  Json j = Json::parse(body, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw Error(ErrorCode::MalformedFile, "request body must be a JSON object");
  }
  return j;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownSession:
      return 404;
    case ErrorCode::SessionFinalized:
      return 409;
    case ErrorCode::EditAfterDeadline:
      return 410;
    case ErrorCode::EmptyDraft:
    case ErrorCode::StaleReport:
      return 422;
    case ErrorCode::EnginesNotReady:
      return 503;
    case ErrorCode::MalformedFile:
    case ErrorCode::InvalidConfig:
      return 400;
    default:
      return 500;
  }
}

Service::Service(Config cfg, Now now)
    : cfg_(std::move(cfg)), now_(std::move(now)), store_(cfg_.submissions), id_salt_(std::random_device{}()) {
  id_salt_ = (id_salt_ << 32) ^ std::random_device{}();
}

Service::~Service() {
  if (loader_.joinable()) loader_.join();
}

void Service::load_engines_async(std::function<std::shared_ptr<const Engines>()> loader) {
  if (loader_.joinable()) loader_.join();
  loading_ = true;
  loader_ = std::thread([this, loader = std::move(loader)] {
    std::shared_ptr<const Engines> built;
    std::string error;
    try {
      built = loader();
    } catch (const std::exception& e) {
      error = e.what();
    }
    {
      std::lock_guard lock(engines_mutex_);
      engines_ = std::move(built);
      engines_error_ = std::move(error);
    }
    loading_ = false;
  });
}

void Service::set_engines(std::shared_ptr<const Engines> engines) {
  std::lock_guard lock(engines_mutex_);
  engines_ = std::move(engines);
  engines_error_.clear();
}

std::shared_ptr<const Engines> Service::engines() const {
  std::lock_guard lock(engines_mutex_);
  return engines_;
}

bool Service::wait_for_engines() {
  if (loader_.joinable()) loader_.join();
  return engines() != nullptr;
}

std::shared_ptr<const Engines> Service::require_engines() const {
  auto e = engines();
  if (!e) {
    std::lock_guard lock(engines_mutex_);
    throw Error(ErrorCode::EnginesNotReady,
                engines_error_.empty() ? "engines are still loading" : "engines failed to load: " + engines_error_);
  }
  return e;
}

std::string Service::new_session_id() {
  char buf[20];
  std::snprintf(buf, sizeof buf, "s%016llx", static_cast<unsigned long long>(splitmix64(id_salt_ + ++id_counter_)));
  return buf;
}

std::shared_ptr<Service::Entry> Service::find(const std::string& id) {
  std::lock_guard lock(sessions_mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw Error(ErrorCode::UnknownSession, "no session '" + id + "'");
  return it->second;
}

Response Service::handle(std::string_view method, std::string_view path, std::string_view body) {
  const auto parts = split_path(path);
  auto route = [&](std::initializer_list<std::string_view> pattern) {
    if (parts.size() != pattern.size()) return false;
    std::size_t i = 0;
    for (auto p : pattern) {
      if (p != "*" && p != parts[i]) return false;
      ++i;
    }
    return true;
  };
  try {
    if (route({"api", "health"})) {
      if (method != "GET") return error_response(405, "MethodNotAllowed", "use GET");
      return health();
    }
    if (route({"api", "corpus", "distribution"})) {
      if (method != "GET") return error_response(405, "MethodNotAllowed", "use GET");
      return distribution();
    }
    if (route({"api", "sessions"})) {
      if (method != "POST") return error_response(405, "MethodNotAllowed", "use POST");
      return create_session(body);
    }
    if (route({"api", "sessions", "*", "draft"})) {
      if (method != "PUT") return error_response(405, "MethodNotAllowed", "use PUT");
      return put_draft(std::string(parts[2]), body);
    }
    if (route({"api", "sessions", "*", "submit"})) {
      if (method != "POST") return error_response(405, "MethodNotAllowed", "use POST");
      return submit(std::string(parts[2]));
    }
    if (route({"api", "sessions", "*", "dump"})) {
      if (method != "GET") return error_response(405, "MethodNotAllowed", "use GET");
      return dump(std::string(parts[2]));
    }
    return error_response(404, "NotFound", "no route for " + std::string(path));
  } catch (const Error& e) {
    return error_response(e);
  } catch (const Json::exception& e) {
    return error_response(400, "MalformedFile", e.what());
  } catch (const std::exception& e) {
    return error_response(500, "Internal", e.what());
  }
}

Response Service::create_session(std::string_view body) {
  const Json req = parse_body(body);
  require_engines();
  std::optional<GameClock> game;
  const TimePoint now = now_();
  if (auto it = req.find("game"); it != req.end() && !it->is_null()) {
    const auto duration = it->at("duration_s").get<long long>();
    if (duration <= 0) throw Error(ErrorCode::MalformedFile, "game duration_s must be positive");
    game = GameClock{std::chrono::seconds(duration), now};
  }
  const std::string category = req.value("category", std::string());
  std::string id;
  {
    std::lock_guard lock(sessions_mutex_);
    id = new_session_id();
    sessions_.emplace(id, std::make_shared<Entry>(Session(id, now, game, category)));
  }
  Json out{{"session_id", id}};
  if (game) out["game"] = {{"duration_s", game->duration.count()}, {"started_at", to_iso8601(game->started_at)}};
  return json_response(201, out);
}

Response Service::put_draft(const std::string& id, std::string_view body) {
  const Json req = parse_body(body);
  auto entry = find(id);
  const auto engines = require_engines();
  const auto text = req.value("text", std::string());
  const auto answer = req.value("answer", std::string());

  std::lock_guard lock(entry->mutex);
  Session& s = entry->session;
  const TimePoint now = now_();
  s.apply_edit(*engines, text, answer, now);
  if (s.maybe_snapshot(now, cfg_.snapshot_interval)) write_dump_file(s);
  return json_response(200, report_to_json(analyze(s, *engines, cfg_.widgets)));
}

Response Service::submit(const std::string& id) {
  auto entry = find(id);
  const auto engines = require_engines();
  std::lock_guard lock(entry->mutex);
  Session& s = entry->session;
  const auto report = analyze(s, *engines, cfg_.widgets);
  const auto record = finalize_submission(s, report, cfg_.weights, now_());
  store_.append(record);
  return Response{200, "application/json", submission_to_json(record)};
}

Response Service::dump(const std::string& id) {
  auto entry = find(id);
  std::lock_guard lock(entry->mutex);
  return Response{200, "application/x-ndjson", snapshots_to_jsonl(entry->session.snapshots())};
}

Response Service::distribution() {
  const auto engines = require_engines();
  Json cats = Json::object();
  for (const auto& [c, n] : engines->category_distribution) cats[c] = n;
  Json subs = Json::object();
  for (const auto& [c, n] : engines->subcategory_distribution) subs[c] = n;
  return json_response(200, Json{{"categories", cats}, {"subcategories", subs}});
}

Response Service::health() {
  Json out{{"status", "ok"}, {"version", TOSSUP_VERSION}};
  std::shared_ptr<const Engines> e;
  std::string error;
  {
    std::lock_guard lock(engines_mutex_);
    e = engines_;
    error = engines_error_;
  }
  if (e) {
    out["engines"] = "ready";
    out["corpus_hash"] = e->corpus_hash;
    out["answers"] = e->guesser.n_docs();
    out["questions"] = e->similarity.n_docs();
    out["difficulty_model"] = e->difficulty.has_value();
  } else if (!error.empty()) {
    out["engines"] = "failed";
    out["error"] = error;
  } else {
    out["engines"] = "loading";
  }
  return json_response(200, out);
}

void Service::write_dump_file(const Session& s) {
  if (cfg_.dump_dir.empty()) return;
  std::filesystem::create_directories(cfg_.dump_dir);
  const auto path = cfg_.dump_dir / (s.id() + ".jsonl");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out << snapshots_to_jsonl(s.snapshots());
}

}  // namespace tossup
