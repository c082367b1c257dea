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

#include <fcntl.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <random>
#include <set>

#include "httplib.h"
#include "json.hpp"
#include "tempaxis/error.h"
#include "tempaxis/file_util.h"
#include "tempaxis/judgement_log.h"
#include "tempaxis/metrics.h"
#include "tempaxis/pipeline.h"
#include "tempaxis/relation_files.h"

namespace tempaxis {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

constexpr char kJson[] = "application/json";
constexpr char kTsv[] = "text/tab-separated-values";

int StatusFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBanned: return 403;
    case ErrorCode::kUnknownQuestion: return 404;
    case ErrorCode::kNotQualified:
    case ErrorCode::kDuplicate:
    case ErrorCode::kNotAssigned:
    case ErrorCode::kAlreadyQualified: return 409;
    case ErrorCode::kIo: return 500;
    default: return 422;
  }
}

void SendError(httplib::Response &res, int status, std::string_view code,
               const std::string &message) {
  res.status = status;
  json body;
  body["error"] = {{"code", code}, {"message", message}};
  res.set_content(body.dump(), kJson);
}

void SendError(httplib::Response &res, const Error &e) {
  SendError(res, StatusFor(e.code()), ErrorCodeName(e.code()), e.what());
}

void SendJson(httplib::Response &res, int status, const json &body) {
  res.status = status;
  res.set_content(body.dump(), kJson);
}

std::string BearerToken(const httplib::Request &req) {
  const std::string header = req.get_header_value("Authorization");
  constexpr std::string_view kPrefix = "Bearer ";
  if (header.compare(0, kPrefix.size(), kPrefix) != 0) return "";
  return header.substr(kPrefix.size());
}

// Token comparison independent of where the first mismatch sits.
bool SameToken(const std::string &a, const std::string &b) {
  if (a.size() != b.size()) return false;
  unsigned char diff = 0;
  for (std::size_t i = 0; i < a.size(); ++i) diff |= static_cast<unsigned char>(a[i] ^ b[i]);
  return diff == 0;
}

std::string NewToken() {
  std::random_device device;
  static constexpr char kHex[] = "0123456789abcdef";
  std::string token;
  for (int i = 0; i < 8; ++i) {  // 256 bits
    std::uint32_t word = device();
    for (int n = 0; n < 8; ++n, word >>= 4) token += kHex[word & 0xf];
  }
  return token;
}

bool ValidId(const std::string &id) {
  if (id.empty() || id.size() > 128 || id == "." || id == "..") return false;
  for (unsigned char c : id) {
    if (!std::isalnum(c) && c != '-' && c != '_' && c != '.') return false;
  }
  return true;
}

bool ValidWorkerId(const std::string &id) {
  if (id.empty() || id.size() > 256) return false;
  for (unsigned char c : id) {
    if (c < 0x20 || c == 0x7f) return false;
  }
  return true;
}

// Appends one line and fsyncs it.
void AppendDurably(const std::string &path, const std::string &line) {
  const int fd = ::open(path.c_str(), O_WRONLY | O_APPEND | O_CREAT | O_CLOEXEC, 0644);
  if (fd < 0) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::size_t done = 0;
  while (done < line.size()) {
    const ssize_t n = ::write(fd, line.data() + done, line.size() - done);
    if (n < 0) {
      if (errno == EINTR) continue;
      ::close(fd);
      throw Error(ErrorCode::kIo, "cannot write " + path);
    }
    done += static_cast<std::size_t>(n);
  }
  const bool synced = ::fsync(fd) == 0;
  ::close(fd);
  if (!synced) throw Error(ErrorCode::kIo, "cannot sync " + path);
}

// Reads a log, dropping (and truncating away) an unterminated final line
// left by a crash mid-append; such a line was never acknowledged.
std::string ReadLog(const std::string &path) {
  if (!fs::exists(path)) return "";
  std::string text = ReadFile(path);
  const std::size_t end = text.rfind('\n');
  const std::size_t keep = end == std::string::npos ? 0 : end + 1;
  if (keep != text.size()) {
    text.resize(keep);
    fs::resize_file(path, keep);
  }
  return text;
}

QcConfig ConfigFromJson(const json &j) {
  QcConfig c;
  c.qualify_size = j.value("qualify_size", c.qualify_size);
  c.qualify_threshold = j.value("qualify_threshold", c.qualify_threshold);
  c.survive_threshold = j.value("survive_threshold", c.survive_threshold);
  c.judgements_per_question = j.value("judgements_per_question", c.judgements_per_question);
  c.gold_injection_rate = j.value("gold_injection_rate", c.gold_injection_rate);
  c.rng_seed = j.value("rng_seed", c.rng_seed);
  return c;
}

json ConfigToJson(const QcConfig &c) {
  return {{"qualify_size", c.qualify_size},
          {"qualify_threshold", c.qualify_threshold},
          {"survive_threshold", c.survive_threshold},
          {"judgements_per_question", c.judgements_per_question},
          {"gold_injection_rate", c.gold_injection_rate},
          {"rng_seed", c.rng_seed}};
}

Question QuestionFromJson(const json &j) {
  Question q;
  q.question_id = j.at("question_id").get<std::string>();
  q.doc_id = j.value("doc_id", "");
  q.first = j.value("first", "");
  q.second = j.value("second", "");
  q.context = j.value("context", std::vector<std::string>{});
  q.highlights = j.value("highlights", std::vector<std::size_t>{});
  for (std::size_t h : q.highlights) {
    if (h >= q.context.size()) {
      throw Error(ErrorCode::kInvalidConfig,
                  "highlight outside the context of " + q.question_id);
    }
  }
  return q;
}

json QuestionToJson(const Question &q) {
  return {{"question_id", q.question_id}, {"doc_id", q.doc_id}, {"first", q.first},
          {"second", q.second},           {"context", q.context}, {"highlights", q.highlights}};
}

std::unique_ptr<AnnotationProject> ProjectFromDefinition(const json &def) {
  const auto step = ParseAnnotationStep(def.at("step").get<std::string>());
  if (!step) throw Error(ErrorCode::kInvalidConfig, "unknown step");
  std::vector<Question> questions;
  for (const json &q : def.at("questions")) questions.push_back(QuestionFromJson(q));
  std::map<std::string, Answer> gold;
  for (const auto &[id, value] : def.at("gold").items()) {
    const auto answer = ParseAnswer(value.get<std::string>());
    if (!answer) throw Error(ErrorCode::kInvalidConfig, "bad gold answer for " + id);
    gold[id] = *answer;
  }
  return std::make_unique<AnnotationProject>(def.at("project_id").get<std::string>(), *step,
                                             std::move(questions), std::move(gold),
                                             ConfigFromJson(def.value("config", json::object())));
}

std::string_view QuestionKind(AnnotationStep step) {
  switch (step) {
    case AnnotationStep::kAnchorability: return "ANCHORABILITY";
    case AnnotationStep::kRelationQ1: return "Q1";
    case AnnotationStep::kRelationQ2: return "Q2";
  }
  return "ANCHORABILITY";
}

std::string Highlighted(const Question &q, std::size_t i, const std::string &fallback) {
  if (i < q.highlights.size() && q.highlights[i] < q.context.size()) {
    return q.context[q.highlights[i]];
  }
  return fallback;
}

// What a worker sees. Gold membership is deliberately absent.
json TaskPayload(const AnnotationProject &project, const Question &q) {
  const std::string e1 = Highlighted(q, 0, q.first);
  const std::string e2 = Highlighted(q, 1, q.second);
  std::string prompt;
  switch (project.step()) {
    case AnnotationStep::kAnchorability:
      prompt = "Can \"" + e1 + "\" be anchored on the main timeline of the text?";
      break;
    case AnnotationStep::kRelationQ1:
      prompt = "Is it possible that the start of \"" + e1 + "\" is before the start of \"" + e2 +
               "\"?";
      break;
    case AnnotationStep::kRelationQ2:
      prompt = "Is it possible that the start of \"" + e2 + "\" is before the start of \"" + e1 +
               "\"?";
      break;
  }
  json events = json::array({q.first});
  if (!q.second.empty()) events.push_back(q.second);
  return {{"project_id", project.project_id()},
          {"question_id", q.question_id},
          {"question_kind", QuestionKind(project.step())},
          {"context", q.context},
          {"highlights", q.highlights},
          {"events", events},
          {"prompt", prompt},
          {"choices", json::array({"YES", "NO"})}};
}

long long NowSeconds() {
  return std::chrono::duration_cast<std::chrono::seconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

}  // namespace

ServiceOptions ServiceOptionsFromEnvironment() {
  ServiceOptions options;
  if (const char *bind = std::getenv("TEMPAXIS_BIND")) {
    const std::string value(bind);
    const std::size_t colon = value.rfind(':');
    long long port = 0;
    if (colon == std::string::npos || !ParseInt(value.substr(colon + 1), &port) || port < 0 ||
        port > 65535) {
      throw Error(ErrorCode::kInvalidConfig, "TEMPAXIS_BIND must be host:port");
    }
    options.host = value.substr(0, colon);
    options.port = static_cast<int>(port);
  }
  if (const char *dir = std::getenv("TEMPAXIS_DATA_DIR")) options.data_dir = dir;
  if (const char *token = std::getenv("TEMPAXIS_ADMIN_TOKEN")) options.admin_token = token;
  return options;
}

AnnotationService::AnnotationService(ServiceOptions options)
    : options_(std::move(options)), server_(std::make_unique<httplib::Server>()) {
  if (options_.admin_token.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "an admin token is required");
  }
  if (options_.data_dir.empty()) throw Error(ErrorCode::kInvalidConfig, "a data directory is required");
  fs::create_directories(fs::path(options_.data_dir) / "projects");
  Replay();
  Routes();
}

AnnotationService::~AnnotationService() { Stop(); }

int AnnotationService::Bind() {
  if (options_.port == 0) return server_->bind_to_any_port(options_.host);
  return server_->bind_to_port(options_.host, options_.port) ? options_.port : -1;
}

void AnnotationService::Run() { server_->listen_after_bind(); }

void AnnotationService::Stop() {
  if (server_) server_->stop();
}

std::size_t AnnotationService::project_count() const {
  std::shared_lock lock(mu_);
  return projects_.size();
}

std::shared_ptr<AnnotationService::ProjectEntry> AnnotationService::FindProject(
    const std::string &id) const {
  std::shared_lock lock(mu_);
  auto it = projects_.find(id);
  return it == projects_.end() ? nullptr : it->second;
}

void AnnotationService::Replay() {
  const fs::path root = fs::path(options_.data_dir) / "projects";
  std::vector<fs::path> dirs;
  for (const auto &entry : fs::directory_iterator(root)) {
    if (entry.is_directory() && fs::exists(entry.path() / "project.json")) {
      dirs.push_back(entry.path());
    }
  }
  std::sort(dirs.begin(), dirs.end());
  for (const fs::path &dir : dirs) {
    const std::string definition_path = (dir / "project.json").string();
    auto entry = std::make_shared<ProjectEntry>();
    try {
      const json def = json::parse(ReadFile(definition_path));
      entry->project = ProjectFromDefinition(def);
      entry->idempotency_key = def.value("idempotency_key", "");
    } catch (const json::exception &e) {
      throw Error(ErrorCode::kParseError, definition_path + ": " + e.what());
    }
    entry->dir = dir.string();
    AnnotationProject &project = *entry->project;

    const std::string quals = (dir / "qualifications.tsv").string();
    int line_no = 0;
    const std::string text = ReadLog(quals);
    for (std::string_view line : SplitLines(text)) {
      ++line_no;
      if (line.empty()) continue;
      const auto fields = SplitTabs(line);
      if (fields.size() != 2 || (fields[1] != "0" && fields[1] != "1")) {
        throw Error(ErrorCode::kParseError, quals + ":" + std::to_string(line_no) + ": bad line");
      }
      project.RestoreQualification(UnescapeField(fields[0]), fields[1] == "1");
    }
    const std::string log = (dir / "judgements.tsv").string();
    for (const LoggedJudgement &l : ParseJudgementLog(ReadLog(log), log)) {
      const Judgement &j = l.judgement;
      project.RestoreJudgement(j.worker_id, j.question_id, j.answer, j.response_time);
    }
    if (!entry->idempotency_key.empty()) {
      idempotency_[entry->idempotency_key] = project.project_id();
    }
    projects_[project.project_id()] = entry;
  }

  const std::string sessions = (fs::path(options_.data_dir) / "sessions.tsv").string();
  int line_no = 0;
  const std::string text = ReadLog(sessions);
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = SplitTabs(line);
    long long issued = 0;
    if (fields.size() != 4 || !ParseInt(fields[3], &issued)) {
      throw Error(ErrorCode::kParseError, sessions + ":" + std::to_string(line_no) + ": bad line");
    }
    sessions_[std::string(fields[0])] = {UnescapeField(fields[1]), UnescapeField(fields[2]), issued};
  }
}

void AnnotationService::Routes() {
  httplib::Server &s = *server_;

  auto admin = [this](const httplib::Request &req, httplib::Response &res) {
    if (SameToken(BearerToken(req), options_.admin_token)) return true;
    SendError(res, 401, "UNAUTHENTICATED", "admin credential required");
    return false;
  };

  // Resolves the session token; sends 401 and returns nullopt otherwise.
  auto session = [this](const httplib::Request &req,
                        httplib::Response &res) -> std::optional<Session> {
    const std::string token = BearerToken(req);
    {
      std::shared_lock lock(mu_);
      auto it = sessions_.find(token);
      if (!token.empty() && it != sessions_.end()) return it->second;
    }
    SendError(res, 401, "UNAUTHENTICATED", "valid session token required");
    return std::nullopt;
  };

  auto parse_body = [](const httplib::Request &req, httplib::Response &res) -> std::optional<json> {
    try {
      json body = json::parse(req.body);
      if (body.is_object()) return body;
    } catch (const json::exception &) {
    }
    SendError(res, 400, "BAD_REQUEST", "body must be a JSON object");
    return std::nullopt;
  };

  s.Get("/healthz", [](const httplib::Request &, httplib::Response &res) {
    SendJson(res, 200, {{"status", "ok"}});
  });

  s.Post("/projects", [=, this](const httplib::Request &req, httplib::Response &res) {
    if (!admin(req, res)) return;
    auto body = parse_body(req, res);
    if (!body) return;
    std::string key = req.get_header_value("Idempotency-Key");
    if (key.empty()) key = body->value("idempotency_key", "");

    std::unique_lock lock(mu_);
    if (!key.empty()) {
      if (auto it = idempotency_.find(key); it != idempotency_.end()) {
        SendJson(res, 200, {{"project_id", it->second}});
        return;
      }
    }
    json def;
    try {
      std::string id = body->value("project_id", "");
      if (id.empty()) {
        for (std::size_t n = projects_.size() + 1;; ++n) {
          id = "project-" + std::to_string(n);
          if (!projects_.count(id)) break;
        }
      }
      if (!ValidId(id)) throw Error(ErrorCode::kInvalidConfig, "invalid project id '" + id + "'");
      if (projects_.count(id)) {
        SendError(res, 409, "DUPLICATE", "project " + id + " already exists");
        return;
      }
      def["project_id"] = id;
      def["step"] = body->value("step", "");
      def["idempotency_key"] = key;
      def["config"] = ConfigToJson(ConfigFromJson(body->value("config", json::object())));
      def["questions"] = json::array();
      for (const json &q : body->value("questions", json::array())) {
        def["questions"].push_back(QuestionToJson(QuestionFromJson(q)));
      }
      def["gold"] = body->value("gold", json::object());
      auto entry = std::make_shared<ProjectEntry>();
      entry->project = ProjectFromDefinition(def);
      entry->idempotency_key = key;
      const fs::path dir = fs::path(options_.data_dir) / "projects" / id;
      fs::create_directories(dir);
      WriteFileAtomic((dir / "project.json").string(), def.dump(1) + "\n");
      entry->dir = dir.string();
      projects_[id] = entry;
      if (!key.empty()) idempotency_[key] = id;
      SendJson(res, 201, {{"project_id", id}});
    } catch (const json::exception &e) {
      SendError(res, 422, "INVALID_CONFIG", e.what());
    } catch (const Error &e) {
      SendError(res, e.code() == ErrorCode::kIo ? 500 : 422, ErrorCodeName(e.code()), e.what());
    }
  });

  s.Post(R"(/projects/([^/]+)/sessions)", [=, this](const httplib::Request &req,
                                                   httplib::Response &res) {
    const std::string project_id = req.matches[1];
    if (!FindProject(project_id)) {
      SendError(res, 404, "NOT_FOUND", "unknown project " + project_id);
      return;
    }
    auto body = parse_body(req, res);
    if (!body) return;
    const std::string worker = body->value("worker_id", "");
    if (!ValidWorkerId(worker)) {
      SendError(res, 422, "INVALID_ARGUMENT", "worker_id must be a non-empty printable string");
      return;
    }
    const std::string token = NewToken();
    const Session session{worker, project_id, NowSeconds()};
    try {
      std::lock_guard log_lock(sessions_log_mu_);
      AppendDurably((fs::path(options_.data_dir) / "sessions.tsv").string(),
                    token + '\t' + EscapeField(worker) + '\t' + EscapeField(project_id) + '\t' +
                        std::to_string(session.issued_at) + '\n');
      std::unique_lock lock(mu_);
      sessions_[token] = session;
    } catch (const Error &e) {
      SendError(res, e);
      return;
    }
    SendJson(res, 201, {{"token", token},
                        {"worker_id", worker},
                        {"project_id", project_id},
                        {"issued_at", session.issued_at}});
  });

  s.Get("/qualification", [=, this](const httplib::Request &req, httplib::Response &res) {
    auto who = session(req, res);
    if (!who) return;
    auto entry = FindProject(who->project_id);
    json questions = json::array();
    for (const Question &q : entry->project->QualificationQuestions(who->worker_id)) {
      questions.push_back(TaskPayload(*entry->project, q));
    }
    SendJson(res, 200, {{"questions", questions}});
  });

  s.Post("/qualification", [=, this](const httplib::Request &req, httplib::Response &res) {
    auto who = session(req, res);
    if (!who) return;
    auto body = parse_body(req, res);
    if (!body) return;
    auto entry = FindProject(who->project_id);
    std::vector<std::pair<std::string, Answer>> answers;
    try {
      for (const json &a : body->at("answers")) {
        const auto answer = ParseAnswer(a.at("answer").get<std::string>());
        if (!answer) throw Error(ErrorCode::kInvalidArgument, "answer must be YES or NO");
        answers.emplace_back(a.at("question_id").get<std::string>(), *answer);
      }
    } catch (const json::exception &e) {
      SendError(res, 422, "INVALID_ARGUMENT", e.what());
      return;
    } catch (const Error &e) {
      SendError(res, e);
      return;
    }
    try {
      std::lock_guard write(entry->write_mu);
      const bool passed = entry->project->QualifyWorker(who->worker_id, answers);
      AppendDurably((fs::path(entry->dir) / "qualifications.tsv").string(),
                    EscapeField(who->worker_id) + '\t' + (passed ? "1" : "0") + '\n');
      SendJson(res, 200, {{"qualified", passed}});
    } catch (const Error &e) {
      SendError(res, e);
    }
  });

  s.Get("/tasks/next", [=, this](const httplib::Request &req, httplib::Response &res) {
    auto who = session(req, res);
    if (!who) return;
    auto entry = FindProject(who->project_id);
    try {
      const Question q = entry->project->NextTask(who->worker_id);
      SendJson(res, 200, TaskPayload(*entry->project, q));
    } catch (const Error &e) {
      if (e.code() == ErrorCode::kExhausted) {
        res.status = 204;
        return;
      }
      SendError(res, e);
    }
  });

  s.Post("/judgements", [=, this](const httplib::Request &req, httplib::Response &res) {
    auto who = session(req, res);
    if (!who) return;
    auto body = parse_body(req, res);
    if (!body) return;
    auto entry = FindProject(who->project_id);
    Judgement j;
    j.worker_id = who->worker_id;
    try {
      j.question_id = body->at("question_id").get<std::string>();
      const auto answer = ParseAnswer(body->at("answer").get<std::string>());
      if (!answer) throw Error(ErrorCode::kInvalidArgument, "answer must be YES or NO");
      j.answer = *answer;
      j.response_time = body->value("response_time", 0.0);
      if (!(j.response_time >= 0.0)) {
        throw Error(ErrorCode::kInvalidArgument, "response_time must be non-negative");
      }
    } catch (const json::exception &e) {
      SendError(res, 422, "INVALID_ARGUMENT", e.what());
      return;
    } catch (const Error &e) {
      SendError(res, e);
      return;
    }
    try {
      std::lock_guard write(entry->write_mu);
      const SubmitStatus status =
          entry->project->SubmitJudgement(j.worker_id, j.question_id, j.answer, j.response_time);
      AppendDurably((fs::path(entry->dir) / "judgements.tsv").string(),
                    FormatJudgementLine(entry->project->project_id(), j));
      SendJson(res, 200, {{"status", status == SubmitStatus::kBanned ? "BANNED" : "ACCEPTED"}});
    } catch (const Error &e) {
      SendError(res, e);
    }
  });

  s.Get(R"(/projects/([^/]+)/metrics)", [=, this](const httplib::Request &req,
                                                  httplib::Response &res) {
    if (!admin(req, res)) return;
    auto entry = FindProject(req.matches[1]);
    if (!entry) {
      SendError(res, 404, "NOT_FOUND", "unknown project " + std::string(req.matches[1]));
      return;
    }
    res.status = 200;
    res.set_content(ToJson(entry->project->Report()), kJson);
  });

  s.Get(R"(/projects/([^/]+)/judgements)", [=, this](const httplib::Request &req,
                                                     httplib::Response &res) {
    if (!admin(req, res)) return;
    auto entry = FindProject(req.matches[1]);
    if (!entry) {
      SendError(res, 404, "NOT_FOUND", "unknown project " + std::string(req.matches[1]));
      return;
    }
    res.status = 200;
    res.set_content(ExportJudgementLog(entry->project->project_id(),
                                       entry->project->Judgements()),
                    kTsv);
  });

  s.Get("/exports/matres", [=, this](const httplib::Request &req, httplib::Response &res) {
    if (!admin(req, res)) return;
    auto q1 = FindProject(req.get_param_value("q1"));
    auto q2 = FindProject(req.get_param_value("q2"));
    if (!q1 || !q2) {
      SendError(res, 404, "NOT_FOUND", "q1 and q2 must name existing projects");
      return;
    }
    if (q1->project->step() != AnnotationStep::kRelationQ1 ||
        q2->project->step() != AnnotationStep::kRelationQ2) {
      SendError(res, 422, "INVALID_ARGUMENT", "q1/q2 must be RELATION_Q1/RELATION_Q2 projects");
      return;
    }
    const auto &questions = q1->project->questions();
    std::set<std::string> ids1, ids2;
    for (const Question &q : questions) ids1.insert(q.question_id);
    for (const Question &q : q2->project->questions()) ids2.insert(q.question_id);
    if (ids1 != ids2) {
      SendError(res, 422, "INVALID_ARGUMENT", "q1 and q2 projects cover different pairs");
      return;
    }
    try {
      const auto a1 = AggregateWithGold(*q1->project);
      const auto a2 = AggregateWithGold(*q2->project);
      const std::size_t missing = (ids1.size() - a1.size()) + (ids2.size() - a2.size());
      if (missing > 0) {
        SendError(res, 409, "INCOMPLETE",
                  std::to_string(missing) + " questions lack enough judgements");
        return;
      }
      res.status = 200;
      res.set_content(ExportMatres(CombineRelationAnswers(questions, a1, a2).relations), kTsv);
    } catch (const Error &e) {
      SendError(res, e);
    }
  });
}

}  // namespace tempaxis
