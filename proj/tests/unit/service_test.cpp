#include <atomic>
#include <fstream>
#include <future>
#include <thread>

#include <gtest/gtest.h>
#include <httplib.h>

#include "fixtures.hpp"
#include "tossup/service.hpp"
#include "tossup/wire.hpp"

using namespace tossup;
using namespace std::chrono_literals;

namespace {

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("tossup_service_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir / name;
}

struct FakeClock {
  std::atomic<long long> ms{1'700'000'000'000};
  Service::Now fn() {
    return [this] { return TimePoint{} + std::chrono::milliseconds(ms.load()); };
  }
  void advance(std::chrono::milliseconds d) { ms += d.count(); }
};

Config test_config(const std::string& tag) {
  Config cfg;
  cfg.corpus = fixtures::data_path("fixture_corpus.json");
  cfg.submissions = scratch(tag + "_submissions.jsonl");
  std::filesystem::remove(cfg.submissions);
  return cfg;
}

struct Fixture {
  FakeClock clock;
  Service service;
  explicit Fixture(const std::string& tag) : service(test_config(tag), clock.fn()) {
    service.set_engines(fixtures::fixture_engines());
  }

  std::string create(const Json& body = Json::object()) {
    const auto r = service.handle("POST", "/api/sessions", body.dump());
    EXPECT_EQ(r.status, 201) << r.body;
    return Json::parse(r.body).at("session_id").get<std::string>();
  }
  Response put(const std::string& id, const std::string& text, const std::string& answer) {
    return service.handle("PUT", "/api/sessions/" + id + "/draft", Json{{"text", text}, {"answer", answer}}.dump());
  }
};

void expect_error(const Response& r, int status, const std::string& code) {
  EXPECT_EQ(r.status, status) << r.body;
  const auto j = Json::parse(r.body);
  EXPECT_EQ(j.at("code"), code);
  EXPECT_TRUE(j.at("message").is_string());
  EXPECT_FALSE(j.at("message").get<std::string>().empty());
}

const Question& q3() { return fixtures::table1_question(3); }

}  // namespace

TEST(Service, LoadingThenReady) {
  FakeClock clock;
  Service service(test_config("loading"), clock.fn());
  std::promise<void> release;
  auto gate = release.get_future().share();
  service.load_engines_async([gate] {
    gate.wait();
    return fixtures::fixture_engines();
  });
  const auto h = service.handle("GET", "/api/health", "");
  EXPECT_EQ(h.status, 200);
  EXPECT_EQ(Json::parse(h.body).at("engines"), "loading");
  expect_error(service.handle("POST", "/api/sessions", "{}"), 503, "EnginesNotReady");
  expect_error(service.handle("GET", "/api/corpus/distribution", ""), 503, "EnginesNotReady");
  release.set_value();
  EXPECT_TRUE(service.wait_for_engines());
  const auto ready = Json::parse(service.handle("GET", "/api/health", "").body);
  EXPECT_EQ(ready.at("engines"), "ready");
  EXPECT_EQ(ready.at("corpus_hash"), fixtures::fixture_engines()->corpus_hash);
  EXPECT_EQ(service.handle("POST", "/api/sessions", "{}").status, 201);
}

TEST(Service, FailedLoadIsReported) {
  FakeClock clock;
  Service service(test_config("failed"), clock.fn());
  service.load_engines_async([]() -> std::shared_ptr<const Engines> { throw Error(ErrorCode::Io, "disk gone"); });
  EXPECT_FALSE(service.wait_for_engines());
  const auto h = Json::parse(service.handle("GET", "/api/health", "").body);
  EXPECT_EQ(h.at("engines"), "failed");
  expect_error(service.handle("POST", "/api/sessions", "{}"), 503, "EnginesNotReady");
}

TEST(Service, CreateSessions) {
  Fixture f("create");
  const auto a = f.create();
  const auto b = f.create();
  EXPECT_NE(a, b);
  const auto r = f.service.handle("POST", "/api/sessions", R"({"game":{"duration_s":300}})");
  EXPECT_EQ(r.status, 201);
  const auto j = Json::parse(r.body);
  EXPECT_EQ(j.at("game").at("duration_s"), 300);
  EXPECT_EQ(f.service.handle("POST", "/api/sessions", "").status, 201);
  expect_error(f.service.handle("POST", "/api/sessions", "{oops"), 400, "MalformedFile");
  expect_error(f.service.handle("POST", "/api/sessions", R"({"game":{"duration_s":0}})"), 400, "MalformedFile");
}

TEST(Service, PutDraft) {
  Fixture f("put");
  const auto id = f.create();
  const auto empty = f.put(id, "", "");
  ASSERT_EQ(empty.status, 200);
  const auto ej = Json::parse(empty.body);
  EXPECT_TRUE(ej.at("spans").empty());
  EXPECT_TRUE(ej.at("guesses").empty());
  EXPECT_TRUE(ej.at("similar").empty());

  const auto full = f.put(id, q3().text, q3().answer);
  ASSERT_EQ(full.status, 200);
  const auto report = report_from_json(Json::parse(full.body));
  EXPECT_EQ(report.hash, draft_hash(q3().text, q3().answer));
  ASSERT_FALSE(report.guesses.value.empty());
  EXPECT_EQ(report.guesses.value[0].answer, "Candide");
  EXPECT_FALSE(report.evidence.value.empty());
  EXPECT_FALSE(report.countries.value.mentions.empty());
  EXPECT_TRUE(report.difficulty.value);

  Session direct("d", TimePoint{});
  direct.apply_edit(*fixtures::fixture_engines(), q3().text, q3().answer, TimePoint{});
  EXPECT_EQ(full.body, report_to_json(analyze(direct, *fixtures::fixture_engines())).dump());
}

TEST(Service, ErrorStatuses) {
  Fixture f("errors");
  expect_error(f.put("missing", "x", "y"), 404, "UnknownSession");
  expect_error(f.service.handle("POST", "/api/sessions/missing/submit", ""), 404, "UnknownSession");
  expect_error(f.service.handle("GET", "/api/sessions/missing/dump", ""), 404, "UnknownSession");
  expect_error(f.service.handle("GET", "/api/nothing", ""), 404, "NotFound");
  expect_error(f.service.handle("DELETE", "/api/sessions", ""), 405, "MethodNotAllowed");
  expect_error(f.service.handle("GET", "/api/sessions/x/draft", ""), 405, "MethodNotAllowed");

  const auto id = f.create();
  expect_error(f.service.handle("POST", "/api/sessions/" + id + "/submit", ""), 422, "EmptyDraft");
  EXPECT_EQ(f.put(id, q3().text, q3().answer).status, 200);
  const auto sub = f.service.handle("POST", "/api/sessions/" + id + "/submit", "");
  EXPECT_EQ(sub.status, 200) << sub.body;
  expect_error(f.put(id, "more", "x"), 409, "SessionFinalized");
  expect_error(f.service.handle("POST", "/api/sessions/" + id + "/submit", ""), 409, "SessionFinalized");

  const auto game = Json::parse(f.service.handle("POST", "/api/sessions", R"({"game":{"duration_s":60}})").body)
                        .at("session_id")
                        .get<std::string>();
  EXPECT_EQ(f.put(game, "draft", "x").status, 200);
  f.clock.advance(61s);
  expect_error(f.put(game, "draft two", "x"), 410, "EditAfterDeadline");
  EXPECT_EQ(f.service.handle("POST", "/api/sessions/" + game + "/submit", "").status, 200);
}

TEST(Service, SubmitAppendsToStore) {
  Fixture f("submit");
  const auto id = f.create(Json{{"game", {{"duration_s", 300}}}, {"category", "Literature"}});
  f.put(id, q3().text, q3().answer);
  const auto r = f.service.handle("POST", "/api/sessions/" + id + "/submit", "");
  ASSERT_EQ(r.status, 200);
  const auto j = Json::parse(r.body);
  EXPECT_EQ(j.at("category"), "Literature");
  EXPECT_TRUE(j.at("game_score").contains("total"));
  std::ifstream in(f.service.config().submissions);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    EXPECT_EQ(Json::parse(line).at("session_id"), id);
  }
  EXPECT_EQ(lines, 1u);
}

TEST(Service, DumpAfterTwoSnapshots) {
  auto cfg = test_config("dump");
  cfg.dump_dir = scratch("dumps");
  FakeClock clock;
  Service service(cfg, clock.fn());
  service.set_engines(fixtures::fixture_engines());
  const auto id =
      Json::parse(service.handle("POST", "/api/sessions", "{}").body).at("session_id").get<std::string>();
  auto put = [&](const std::string& text) {
    return service.handle("PUT", "/api/sessions/" + id + "/draft", Json{{"text", text}, {"answer", "Candide"}}.dump());
  };
  put("Pangloss");
  clock.advance(5s);
  put("Pangloss teaches");
  clock.advance(11s);
  put("Pangloss teaches optimism.");
  clock.advance(3s);
  put("Pangloss teaches optimism. More");
  const auto d = service.handle("GET", "/api/sessions/" + id + "/dump", "");
  EXPECT_EQ(d.status, 200);
  EXPECT_EQ(d.content_type, "application/x-ndjson");
  std::istringstream in(d.body);
  std::string line;
  std::vector<Json> lines;
  while (std::getline(in, line)) lines.push_back(Json::parse(line));
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0].at("text"), "Pangloss");
  EXPECT_EQ(lines[1].at("text"), "Pangloss teaches optimism.");
  for (const auto& l : lines) {
    for (const char* k : {"at", "text", "answer", "buzz"}) EXPECT_TRUE(l.contains(k)) << k;
  }
  std::ifstream file(cfg.dump_dir / (id + ".jsonl"));
  std::stringstream ss;
  ss << file.rdbuf();
  EXPECT_EQ(ss.str(), d.body);
}

TEST(Service, ConcurrentPutsSerialize) {
  Fixture f("concurrent");
  const auto& e = *fixtures::fixture_engines();
  const auto& qa = fixtures::table1_question(4);
  const auto& qb = fixtures::table1_question(7);
  for (int round = 0; round < 10; ++round) {
    const auto id = f.create();
    std::promise<void> go;
    auto start = go.get_future().share();
    Response ra, rb;
    std::thread ta([&] { start.wait(); ra = f.put(id, qa.text, qa.answer); });
    std::thread tb([&] { start.wait(); rb = f.put(id, qb.text, qb.answer); });
    go.set_value();
    ta.join();
    tb.join();
    ASSERT_EQ(ra.status, 200);
    ASSERT_EQ(rb.status, 200);
    EXPECT_EQ(Json::parse(ra.body).at("hash"), draft_hash(qa.text, qa.answer));
    EXPECT_EQ(Json::parse(rb.body).at("hash"), draft_hash(qb.text, qb.answer));

    const auto rec = Json::parse(f.service.handle("POST", "/api/sessions/" + id + "/submit", "").body);
    auto sequential = [&](const Question& first, const Question& second) {
      Session s("x", TimePoint{});
      s.apply_edit(e, first.text, first.answer, TimePoint{});
      s.apply_edit(e, second.text, second.answer, TimePoint{});
      Json h = Json::array();
      for (const auto& ev : s.buzz_state().history) h.push_back(evaluation_to_json(ev));
      return std::make_pair(second.text, h);
    };
    const auto got = std::make_pair(rec.at("text").get<std::string>(), rec.at("buzz_history"));
    EXPECT_TRUE(got == sequential(qa, qb) || got == sequential(qb, qa)) << "round " << round;
  }
}

TEST(Service, Distribution) {
  Fixture f("distribution");
  const auto r = f.service.handle("GET", "/api/corpus/distribution", "");
  ASSERT_EQ(r.status, 200);
  const auto j = Json::parse(r.body);
  std::size_t total = 0;
  for (const auto& [c, n] : j.at("categories").items()) total += n.get<std::size_t>();
  EXPECT_EQ(total, fixtures::corpus().size());
  EXPECT_TRUE(j.at("subcategories").is_object());
}

TEST(Service, HttpStatusMapping) {
  EXPECT_EQ(http_status(ErrorCode::UnknownSession), 404);
  EXPECT_EQ(http_status(ErrorCode::SessionFinalized), 409);
  EXPECT_EQ(http_status(ErrorCode::EditAfterDeadline), 410);
  EXPECT_EQ(http_status(ErrorCode::EmptyDraft), 422);
  EXPECT_EQ(http_status(ErrorCode::EnginesNotReady), 503);
}

TEST(HttpServer, EndToEndOverLoopback) {
  FakeClock clock;
  Service service(test_config("http"), clock.fn());
  service.set_engines(fixtures::fixture_engines());
  HttpServer server(service);
  const int port = server.bind_any_port("127.0.0.1");
  ASSERT_GT(port, 0);
  std::thread t([&] { server.listen_after_bind(); });

  httplib::Client cli("127.0.0.1", port);
  cli.set_read_timeout(30, 0);
  auto health = cli.Get("/api/health");
  for (int i = 0; !health && i < 50; ++i) {
    std::this_thread::sleep_for(20ms);
    health = cli.Get("/api/health");
  }
  ASSERT_TRUE(health);
  EXPECT_EQ(health->status, 200);

  auto created = cli.Post("/api/sessions", "{}", "application/json");
  ASSERT_TRUE(created);
  EXPECT_EQ(created->status, 201);
  const auto id = Json::parse(created->body).at("session_id").get<std::string>();
  auto put = cli.Put("/api/sessions/" + id + "/draft", Json{{"text", q3().text}, {"answer", "Candide"}}.dump(),
                     "application/json");
  ASSERT_TRUE(put);
  EXPECT_EQ(put->status, 200);
  EXPECT_EQ(put->get_header_value("Content-Type"), "application/json");
  EXPECT_EQ(report_from_json(Json::parse(put->body)).guesses.value.at(0).answer, "Candide");
  auto missing = cli.Get("/api/sessions/nope/dump");
  ASSERT_TRUE(missing);
  EXPECT_EQ(missing->status, 404);
  EXPECT_EQ(Json::parse(missing->body).at("code"), "UnknownSession");

  server.stop();
  t.join();
}
