// Copyright 2026 The SciPress Authors.
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

// HTTP front end for a BWS campaign.
//
//   GET  /api/tasks?annotator=ID   task list with that annotator's progress
//   GET  /api/tasks/{task_id}      one task, system ids removed
//   POST /api/judgments            201 stored, 400 bad JSON, 404 unknown task,
//                                  422 selection breaks the tie rules
//   GET  /api/results              scores and agreement
//
// Anything else is looked up in the static directory, if one is set.

#ifndef SCIPRESS_SERVICE_HPP_
#define SCIPRESS_SERVICE_HPP_

#include <chrono>
#include <cstdlib>
#include <memory>
#include <string>

#include "httplib.h"
#include "json.hpp"
#include "scipress/bws.hpp"
#include "scipress/error.hpp"
#include "scipress/manifest.hpp"

namespace scipress {

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string store_path = "judgments.jsonl";
  std::string static_dir;  // empty: no static assets
};

// SCIPRESS_PORT and SCIPRESS_STORE override the given defaults.
inline ServiceConfig ApplyServiceEnv(ServiceConfig cfg) {
  if (const char* p = std::getenv("SCIPRESS_PORT"); p && *p) {
    cfg.port = std::atoi(p);
    if (cfg.port <= 0 || cfg.port > 65535) {
      throw Error(ErrorCode::kInvalidConfig, std::string("SCIPRESS_PORT=") + p);
    }
  }
  if (const char* s = std::getenv("SCIPRESS_STORE"); s && *s) cfg.store_path = s;
  return cfg;
}

class BwsService {
 public:
  BwsService(TaskSet tasks, ServiceConfig cfg)
      : tasks_(std::move(tasks)), cfg_(std::move(cfg)), store_(cfg_.store_path) {
    Routes();
  }

  JudgmentStore& store() { return store_; }
  httplib::Server& server() { return server_; }

  // Blocks until Stop().
  bool Listen() { return server_.listen(cfg_.host, cfg_.port); }

  // Binds an ephemeral port and serves on a background thread. Returns the
  // port, or -1.
  int StartOnAnyPort() {
    const int port = server_.bind_to_any_port(cfg_.host);
    if (port <= 0) return -1;
    thread_ = std::make_unique<std::thread>([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
    return port;
  }

  void Stop() {
    server_.stop();
    if (thread_ && thread_->joinable()) thread_->join();
    thread_.reset();
  }

  ~BwsService() { Stop(); }

 private:
  static void Reply(httplib::Response& res, int status, const nlohmann::json& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
  }

  static void ReplyError(httplib::Response& res, int status, const std::string& code,
                         const std::string& detail) {
    Reply(res, status, {{"error", code}, {"detail", detail}});
  }

  void Routes() {
    server_.Get("/api/tasks", [this](const httplib::Request& req,
                                     httplib::Response& res) {
      const std::string annotator = req.get_param_value("annotator");
      if (annotator.empty()) {
        ReplyError(res, 400, "MissingAnnotator", "annotator query parameter required");
        return;
      }
      const auto done = store_.CompletedTasks(annotator);
      nlohmann::json list = nlohmann::json::array();
      std::size_t completed = 0;
      for (const auto& t : tasks_.tasks()) {
        const bool d = done.count(t.task_id) > 0;
        completed += d ? 1 : 0;
        list.push_back({{"task_id", t.task_id}, {"done", d}});
      }
      Reply(res, 200, {{"annotator", annotator},
                       {"completed", completed},
                       {"total", tasks_.tasks().size()},
                       {"tasks", std::move(list)}});
    });

    server_.Get(R"(/api/tasks/([^/]+))", [this](const httplib::Request& req,
                                                httplib::Response& res) {
      const BwsTask* t = tasks_.Find(req.matches[1].str());
      if (!t) {
        ReplyError(res, 404, "UnknownTask", req.matches[1].str());
        return;
      }
      Reply(res, 200, t->ToPublicJson());
    });

    server_.Post("/api/judgments", [this](const httplib::Request& req,
                                          httplib::Response& res) {
      nlohmann::json body;
      try {
        body = nlohmann::json::parse(req.body);
      } catch (const std::exception& e) {
        ReplyError(res, 400, "BadRequest", e.what());
        return;
      }
      try {
        BwsJudgment j = BwsJudgment::FromJson(body);
        if (j.timestamp.empty()) j.timestamp = UtcTimestamp();
        const auto ack = store_.Record(j, tasks_);
        Reply(res, 201, {{"status", "stored"}, {"replaced", ack.replaced}});
      } catch (const Error& e) {
        const int status = e.code() == ErrorCode::kUnknownTask       ? 404
                           : e.code() == ErrorCode::kInvalidSelection ? 422
                                                                      : 500;
        ReplyError(res, status, std::string(ErrorCodeName(e.code())), e.detail());
      }
    });

    server_.Get("/api/results", [this](const httplib::Request&,
                                       httplib::Response& res) {
      try {
        Reply(res, 200, ResultsToJson(ComputeResults(store_.Snapshot(), tasks_)));
      } catch (const Error& e) {
        ReplyError(res, 500, std::string(ErrorCodeName(e.code())), e.detail());
      }
    });

    if (!cfg_.static_dir.empty()) server_.set_mount_point("/", cfg_.static_dir);
  }

  TaskSet tasks_;
  ServiceConfig cfg_;
  JudgmentStore store_;
  httplib::Server server_;
  std::unique_ptr<std::thread> thread_;
};

}  // namespace scipress

#endif  // SCIPRESS_SERVICE_HPP_
