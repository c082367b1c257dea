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

#ifndef TEMPAXIS_ANNOTATION_SERVICE_H_
#define TEMPAXIS_ANNOTATION_SERVICE_H_

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "tempaxis/annotation.h"

namespace httplib {
class Server;
}

// HTTP front end for annotation projects. See docs/API.md for the routes and
// payloads.
//
// State lives under the data directory:
//   projects/<id>/project.json       definition, written once
//   projects/<id>/qualifications.tsv worker TAB 0|1
//   projects/<id>/judgements.tsv     judgement log, one line per submission
//   sessions.tsv                     token TAB worker TAB project TAB issued_at
// Each line is fsync'ed before the request is acknowledged, and the whole
// directory is replayed on start-up.

namespace tempaxis {

struct ServiceOptions {
  std::string data_dir;
  std::string admin_token;
  std::string host = "127.0.0.1";
  int port = 8080;
};

// TEMPAXIS_BIND (host:port), TEMPAXIS_DATA_DIR, TEMPAXIS_ADMIN_TOKEN.
ServiceOptions ServiceOptionsFromEnvironment();

class AnnotationService {
 public:
  // Replays the data directory. Throws kInvalidConfig without an admin token
  // and kParseError for corrupt state files.
  explicit AnnotationService(ServiceOptions options);
  ~AnnotationService();

  AnnotationService(const AnnotationService &) = delete;
  AnnotationService &operator=(const AnnotationService &) = delete;

  // Binds to options.host; port 0 picks a free port. Returns the bound port
  // or -1.
  int Bind();
  // Serves until Stop(). Call after Bind().
  void Run();
  void Stop();

  std::size_t project_count() const;

 private:
  struct ProjectEntry {
    std::unique_ptr<AnnotationProject> project;
    std::string idempotency_key;
    std::string dir;
    // Serializes a state change with its log append.
    std::mutex write_mu;
  };
  struct Session {
    std::string worker_id;
    std::string project_id;
    long long issued_at = 0;
  };

  void Routes();
  void Replay();
  std::shared_ptr<ProjectEntry> FindProject(const std::string &id) const;

  ServiceOptions options_;
  std::unique_ptr<httplib::Server> server_;

  mutable std::shared_mutex mu_;
  std::map<std::string, std::shared_ptr<ProjectEntry>> projects_;
  std::map<std::string, std::string> idempotency_;  // key -> project id
  std::map<std::string, Session> sessions_;         // token -> session
  std::mutex sessions_log_mu_;
};

}  // namespace tempaxis

#endif  // TEMPAXIS_ANNOTATION_SERVICE_H_
