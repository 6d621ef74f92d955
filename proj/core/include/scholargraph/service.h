// Copyright 2026 The Scholargraph Authors.
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
#ifndef SCHOLARGRAPH_SERVICE_H_
#define SCHOLARGRAPH_SERVICE_H_

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>

#include "scholargraph/citetext.h"
#include "scholargraph/error.h"
#include "scholargraph/graph.h"
#include "scholargraph/nlq.h"

namespace httplib {
class Server;
}  // namespace httplib

namespace scholargraph {

struct HttpResponse {
  int status = 200;
  std::string content_type;
  std::string body;
};

using QueryParams = std::multimap<std::string, std::string>;

// unsupported-query -> 422, not found -> 404, malformed -> 400, else 500.
int HttpStatusFor(ErrorCode code);

// Transport-free request handling. Bodies are
//   {"status": "ok", "payload": ...} or
//   {"status": "error", "error": {"code": ..., "message": ...}}
// except /api/dump, which answers with the plain-text dump.
//
// Thread-safe: requests run against a snapshot of the current graph, and
// SwapGraph() replaces it atomically for later requests.
class ApiHandler {
 public:
  ApiHandler(std::shared_ptr<const KnowledgeGraph> graph, const TemplateCatalog &catalog,
             const SentimentScorer &scorer, const StopwordList &stopwords);

  HttpResponse Handle(std::string_view path, const QueryParams &params) const;

  std::shared_ptr<const KnowledgeGraph> graph() const;
  void SwapGraph(std::shared_ptr<const KnowledgeGraph> graph);

  static constexpr size_t kDefaultSearchLimit = 20;

 private:
  const TemplateCatalog &catalog_;
  const SentimentScorer &scorer_;
  const StopwordList &stopwords_;
  mutable std::mutex mu_;
  std::shared_ptr<const KnowledgeGraph> graph_;
};

// HTTP front end for an ApiHandler.
class Server {
 public:
  explicit Server(ApiHandler &handler);
  ~Server();
  Server(const Server &) = delete;
  Server &operator=(const Server &) = delete;

  // Binds host:port (port 0 picks a free one) and returns the bound port.
  // Throws Error(kIo) when the address is unavailable.
  int Bind(const std::string &host, int port);
  // Serves until Stop(). Call after Bind().
  void Run();
  void Stop();
  // Serves until SIGINT or SIGTERM arrives, then shuts down cleanly.
  void RunUntilSignal();

 private:
  ApiHandler &handler_;
  std::unique_ptr<httplib::Server> server_;
};

// Splits "host:port"; a bare port binds 127.0.0.1. Throws
// Error(kInvalidArgument).
std::pair<std::string, int> ParseBindAddress(std::string_view address);

}  // namespace scholargraph

#endif  // SCHOLARGRAPH_SERVICE_H_
