// Copyright 2026 The Tempaxis Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tempaxis/annotation_service.h"

#include <filesystem>
#include <thread>

#include "doctest.h"
#include "httplib.h"
#include "json.hpp"
#include "tempaxis/error.h"

namespace tempaxis {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

constexpr const char *kAdmin = "secret-admin";

class Server {
 public:
  explicit Server(const fs::path &dir)
      : service_(ServiceOptions{dir.string(), kAdmin, "127.0.0.1", 0}) {
    port_ = service_.Bind();
    REQUIRE(port_ > 0);
    thread_ = std::thread([this] { service_.Run(); });
  }
  ~Server() {
    service_.Stop();
    thread_.join();
  }
  httplib::Client Client() const { return httplib::Client("127.0.0.1", port_); }
  AnnotationService &service() { return service_; }

 private:
  AnnotationService service_;
  int port_ = -1;
  std::thread thread_;
};

fs::path TempDir(const std::string &name) {
  const fs::path dir = fs::temp_directory_path() / ("tempaxis_service_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

httplib::Headers Bearer(const std::string &token) {
  return {{"Authorization", "Bearer " + token}};
}

// Relation project over `n_gold` gold pairs (answer YES) and `n_work` work
// pairs. Pair k relates ei<k> to ei<k+1> in document "d".
json ProjectBody(const std::string &id, const std::string &step, int n_gold, int n_work,
                 json config = json::object()) {
  json body = {{"project_id", id}, {"step", step}, {"config", config}};
  body["questions"] = json::array();
  body["gold"] = json::object();
  for (int k = 0; k < n_gold + n_work; ++k) {
    const std::string a = "ei" + std::to_string(k), b = "ei" + std::to_string(k + 1);
    const std::string qid = "d|" + a + "|" + b;
    body["questions"].push_back({{"question_id", qid},
                                 {"doc_id", "d"},
                                 {"first", a},
                                 {"second", b},
                                 {"context", {"w" + std::to_string(k), "w" + std::to_string(k + 1)}},
                                 {"highlights", {0, 1}}});
    if (k < n_gold) body["gold"][qid] = step == "RELATION_Q2" ? "NO" : "YES";
  }
  return body;
}

int Create(httplib::Client &c, const json &body) {
  auto r = c.Post("/projects", Bearer(kAdmin), body.dump(), "application/json");
  REQUIRE(r);
  return r->status;
}

std::string Session(httplib::Client &c, const std::string &project, const std::string &worker) {
  auto r = c.Post("/projects/" + project + "/sessions", json{{"worker_id", worker}}.dump(),
                  "application/json");
  REQUIRE(r);
  REQUIRE(r->status == 201);
  const json j = json::parse(r->body);
  CHECK(j.at("token").get<std::string>().size() == 64);
  return j.at("token");
}

// Answers the qualifying test with `correct` right answers.
bool Qualify(httplib::Client &c, const std::string &token, const json &gold, int correct) {
  auto q = c.Get("/qualification", Bearer(token));
  REQUIRE(q);
  REQUIRE(q->status == 200);
  json answers = json::array();
  const json listing = json::parse(q->body);
  for (const json &question : listing.at("questions")) {
    const std::string id = question.at("question_id");
    std::string truth = gold.at(id);
    if (correct-- <= 0) truth = truth == "YES" ? "NO" : "YES";
    answers.push_back({{"question_id", id}, {"answer", truth}});
  }
  auto r = c.Post("/qualification", Bearer(token), json{{"answers", answers}}.dump(),
                  "application/json");
  REQUIRE(r);
  INFO(r->body);
  REQUIRE(r->status == 200);
  return json::parse(r->body).at("qualified");
}

json Submit(httplib::Client &c, const std::string &token, const std::string &qid,
            const std::string &answer, int expect = 200) {
  auto r = c.Post("/judgements", Bearer(token),
                  json{{"question_id", qid}, {"answer", answer}, {"response_time", 3.5}}.dump(),
                  "application/json");
  REQUIRE(r);
  CHECK(r->status == expect);
  return json::parse(r->body);
}

TEST_CASE("service requires configuration") {
  CHECK_THROWS_AS(AnnotationService(ServiceOptions{TempDir("cfg").string(), "", "127.0.0.1", 0}),
                  Error);
  CHECK_THROWS_AS(AnnotationService(ServiceOptions{"", kAdmin, "127.0.0.1", 0}), Error);
}

TEST_CASE("project creation") {
  Server server(TempDir("create"));
  auto c = server.Client();
  auto health = c.Get("/healthz");
  REQUIRE(health);
  CHECK(health->status == 200);

  const json body = ProjectBody("p1", "RELATION_Q1", 10, 2);
  auto unauth = c.Post("/projects", body.dump(), "application/json");
  REQUIRE(unauth);
  CHECK(unauth->status == 401);

  httplib::Headers h = Bearer(kAdmin);
  h.emplace("Idempotency-Key", "k1");
  auto first = c.Post("/projects", h, body.dump(), "application/json");
  REQUIRE(first);
  CHECK(first->status == 201);
  CHECK(json::parse(first->body).at("project_id") == "p1");
  auto again = c.Post("/projects", h, body.dump(), "application/json");
  REQUIRE(again);
  CHECK(again->status == 200);
  CHECK(json::parse(again->body).at("project_id") == "p1");
  CHECK(Create(c, body) == 409);
  CHECK(server.service().project_count() == 1);

  CHECK(Create(c, ProjectBody("p2", "RELATION_Q1", 9, 2)) == 422);
  CHECK(Create(c, ProjectBody("p3", "RELATION_Q1", 10, 2, {{"qualify_threshold", 1.5}})) == 422);
  CHECK(Create(c, ProjectBody("bad/id", "RELATION_Q1", 10, 2)) == 422);
  CHECK(Create(c, ProjectBody("p4", "RELATION_Q9", 10, 2)) == 422);
  auto garbage = c.Post("/projects", Bearer(kAdmin), "{nope", "application/json");
  REQUIRE(garbage);
  CHECK(garbage->status == 400);
  const json err = json::parse(garbage->body);
  CHECK(err.at("error").contains("code"));
  CHECK(err.at("error").contains("message"));
}

TEST_CASE("worker flow") {
  Server server(TempDir("flow"));
  auto c = server.Client();
  const json body = ProjectBody("p", "RELATION_Q1", 10, 3, {{"gold_injection_rate", 0.0}});
  REQUIRE(Create(c, body) == 201);

  auto missing = c.Post("/projects/nope/sessions", json{{"worker_id", "w"}}.dump(),
                        "application/json");
  REQUIRE(missing);
  CHECK(missing->status == 404);
  auto no_token = c.Get("/tasks/next");
  REQUIRE(no_token);
  CHECK(no_token->status == 401);

  const std::string token = Session(c, "p", "alice");
  auto early = c.Get("/tasks/next", Bearer(token));
  REQUIRE(early);
  CHECK(early->status == 409);

  REQUIRE(Qualify(c, token, body["gold"], 10));
  std::set<std::string> seen;
  while (true) {
    auto next = c.Get("/tasks/next", Bearer(token));
    REQUIRE(next);
    if (next->status == 204) break;
    REQUIRE(next->status == 200);
    const json task = json::parse(next->body);
    CHECK(task.at("question_kind") == "Q1");
    CHECK_FALSE(task.contains("gold"));
    CHECK_FALSE(task.contains("is_gold"));
    CHECK(task.at("prompt").get<std::string>().find("start") != std::string::npos);
    const std::string qid = task.at("question_id");
    CHECK(seen.insert(qid).second);
    CHECK(Submit(c, token, qid, "YES").at("status") == "ACCEPTED");
    Submit(c, token, qid, "YES", 409);
  }
  CHECK(seen.size() == 3);
  Submit(c, token, "d|nope|nope", "YES", 404);
  Submit(c, token, "d|ei0|ei1", "MAYBE", 422);

  auto metrics_unauth = c.Get("/projects/p/metrics", Bearer(token));
  REQUIRE(metrics_unauth);
  CHECK(metrics_unauth->status == 401);
  auto metrics = c.Get("/projects/p/metrics", Bearer(kAdmin));
  REQUIRE(metrics);
  REQUIRE(metrics->status == 200);
  const json m = json::parse(metrics->body);
  CHECK(m.at("counts").at("judgements") == 3);
  CHECK(m.at("qualification_pass_rate") == 1.0);
  auto log = c.Get("/projects/p/judgements", Bearer(kAdmin));
  REQUIRE(log);
  CHECK(std::count(log->body.begin(), log->body.end(), '\n') == 3);
}

TEST_CASE("fresh project metrics are zero") {
  Server server(TempDir("zero"));
  auto c = server.Client();
  REQUIRE(Create(c, ProjectBody("p", "RELATION_Q1", 10, 2)) == 201);
  auto metrics = c.Get("/projects/p/metrics", Bearer(kAdmin));
  REQUIRE(metrics);
  const json m = json::parse(metrics->body);
  CHECK(m.at("wawa") == 0.0);
  CHECK(m.at("counts").at("judgements") == 0);
  auto unknown = c.Get("/projects/none/metrics", Bearer(kAdmin));
  REQUIRE(unknown);
  CHECK(unknown->status == 404);
}

TEST_CASE("failing workers are refused and bad workers are banned") {
  Server server(TempDir("ban"));
  auto c = server.Client();
  const json body = ProjectBody("p", "RELATION_Q1", 20, 2, {{"gold_injection_rate", 1.0}});
  REQUIRE(Create(c, body) == 201);

  const std::string weak = Session(c, "p", "weak");
  CHECK_FALSE(Qualify(c, weak, body["gold"], 6));
  auto refused = c.Get("/tasks/next", Bearer(weak));
  REQUIRE(refused);
  CHECK(refused->status == 409);

  const std::string token = Session(c, "p", "bob");
  REQUIRE(Qualify(c, token, body["gold"], 10));
  std::string last;
  for (int i = 0; i < 10; ++i) {
    auto next = c.Get("/tasks/next", Bearer(token));
    REQUIRE(next);
    REQUIRE(next->status == 200);
    // Every hidden gold answer is YES; answering NO misses it.
    last = Submit(c, token, json::parse(next->body).at("question_id"), i < 6 ? "YES" : "NO")
               .at("status");
    if (i < 9) CHECK(last == "ACCEPTED");
  }
  CHECK(last == "BANNED");
  auto after = c.Get("/tasks/next", Bearer(token));
  REQUIRE(after);
  CHECK(after->status == 403);
  const json m = json::parse(c.Get("/projects/p/metrics", Bearer(kAdmin))->body);
  CHECK(m.at("counts").at("workers_banned") == 1);
  CHECK(m.at("counts").at("discarded_judgements") == 10);
}

TEST_CASE("state survives a restart") {
  const fs::path dir = TempDir("restart");
  const json body = ProjectBody("p", "RELATION_Q1", 10, 3, {{"gold_injection_rate", 0.0}});
  std::string token, log;
  {
    Server server(dir);
    auto c = server.Client();
    REQUIRE(Create(c, body) == 201);
    token = Session(c, "p", "carol");
    REQUIRE(Qualify(c, token, body["gold"], 9));
    for (int i = 0; i < 2; ++i) {
      auto next = c.Get("/tasks/next", Bearer(token));
      REQUIRE(next);
      Submit(c, token, json::parse(next->body).at("question_id"), "NO");
    }
    log = c.Get("/projects/p/judgements", Bearer(kAdmin))->body;
  }
  Server server(dir);
  auto c = server.Client();
  CHECK(server.service().project_count() == 1);
  CHECK(c.Get("/projects/p/judgements", Bearer(kAdmin))->body == log);
  // The session and qualification persist; one work question is left.
  auto next = c.Get("/tasks/next", Bearer(token));
  REQUIRE(next);
  REQUIRE(next->status == 200);
  Submit(c, token, json::parse(next->body).at("question_id"), "NO");
  auto done = c.Get("/tasks/next", Bearer(token));
  REQUIRE(done);
  CHECK(done->status == 204);
}

TEST_CASE("relation export") {
  Server server(TempDir("export"));
  auto c = server.Client();
  json cfg = {{"gold_injection_rate", 0.0}, {"judgements_per_question", 1}};
  const json q1 = ProjectBody("q1", "RELATION_Q1", 10, 2, cfg);
  const json q2 = ProjectBody("q2", "RELATION_Q2", 10, 2, cfg);
  REQUIRE(Create(c, q1) == 201);
  REQUIRE(Create(c, q2) == 201);
  REQUIRE(Create(c, ProjectBody("other", "RELATION_Q2", 10, 3, cfg)) == 201);

  auto incomplete = c.Get("/exports/matres?q1=q1&q2=q2", Bearer(kAdmin));
  REQUIRE(incomplete);
  CHECK(incomplete->status == 409);
  auto swapped = c.Get("/exports/matres?q1=q2&q2=q1", Bearer(kAdmin));
  REQUIRE(swapped);
  CHECK(swapped->status == 422);
  auto mismatch = c.Get("/exports/matres?q1=q1&q2=other", Bearer(kAdmin));
  REQUIRE(mismatch);
  CHECK(mismatch->status == 422);
  auto unknown = c.Get("/exports/matres?q1=q1&q2=zzz", Bearer(kAdmin));
  REQUIRE(unknown);
  CHECK(unknown->status == 404);

  // Work pair 10: Q1 YES, Q2 NO -> BEFORE. Work pair 11: YES, YES -> VAGUE.
  const std::map<std::string, std::pair<std::string, std::string>> answers = {
      {"d|ei10|ei11", {"YES", "NO"}}, {"d|ei11|ei12", {"YES", "YES"}}};
  for (const auto &[project, gold, pick] :
       {std::tuple{"q1", q1["gold"], 0}, std::tuple{"q2", q2["gold"], 1}}) {
    const std::string token = Session(c, project, "dora");
    REQUIRE(Qualify(c, token, gold, 10));
    for (int i = 0; i < 2; ++i) {
      auto next = c.Get("/tasks/next", Bearer(token));
      REQUIRE(next);
      const std::string qid = json::parse(next->body).at("question_id");
      const auto &a = answers.at(qid);
      Submit(c, token, qid, pick == 0 ? a.first : a.second);
    }
  }
  auto exported = c.Get("/exports/matres?q1=q1&q2=q2", Bearer(kAdmin));
  REQUIRE(exported);
  REQUIRE(exported->status == 200);
  const std::string &tsv = exported->body;
  CHECK(std::count(tsv.begin(), tsv.end(), '\n') == 12);
  CHECK(tsv.find("d\tw10\tw11\tei10\tei11\tBEFORE\n") != std::string::npos);
  CHECK(tsv.find("d\tw11\tw12\tei11\tei12\tVAGUE\n") != std::string::npos);
  // Gold pairs export their gold answers: Q1 YES, Q2 NO.
  CHECK(tsv.find("d\tw0\tw1\tei0\tei1\tBEFORE\n") != std::string::npos);
}

}  // namespace
}  // namespace tempaxis
