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
#include "scholargraph/service.h"

#include <csignal>
#include <pthread.h>
#include <sys/socket.h>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "scholargraph/graph_io.h"
#include "scholargraph/profiles.h"
#include "scholargraph/render.h"
#include "scholargraph/text.h"

namespace scholargraph {
namespace {

using json = nlohmann::json;

constexpr const char *kJsonType = "application/json";

HttpResponse Ok(json payload) {
  json body = {{"status", "ok"}, {"payload", std::move(payload)}};
  return {200, kJsonType, body.dump()};
}

HttpResponse Failure(ErrorCode code, std::string_view message) {
  json body = {{"status", "error"},
               {"error", {{"code", ErrorCodeName(code)}, {"message", message}}}};
  return {HttpStatusFor(code), kJsonType, body.dump()};
}

std::optional<std::string> Param(const QueryParams &params, const std::string &name) {
  auto it = params.find(name);
  if (it == params.end()) return std::nullopt;
  return it->second;
}

size_t NumberParam(const QueryParams &params, const std::string &name, size_t fallback) {
  std::optional<std::string> text = Param(params, name);
  if (!text) return fallback;
  size_t value = 0;
  if (text->empty() || text->size() > 9 ||
      text->find_first_not_of("0123456789") != std::string::npos) {
    throw Error(ErrorCode::kInvalidArgument, "'" + name + "' must be a non-negative integer");
  }
  value = std::stoul(*text);
  return value;
}

NodeIndex RequireKind(const KnowledgeGraph &g, EntityKind kind, const std::string &id) {
  std::optional<NodeIndex> node = g.Find(kind, id);
  if (!node) {
    throw Error(ErrorCode::kNotFound, "no " + std::string(KindName(kind)) + " '" + id + "'");
  }
  return *node;
}

}  // namespace

int HttpStatusFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnsupportedQuery:
      return 422;
    case ErrorCode::kNotFound:
    case ErrorCode::kEntityNotFound:
      return 404;
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kKindMismatch:
    case ErrorCode::kInvalidMetapath:
    case ErrorCode::kParse:
      return 400;
    default:
      return 500;
  }
}

ApiHandler::ApiHandler(std::shared_ptr<const KnowledgeGraph> graph,
                       const TemplateCatalog &catalog, const SentimentScorer &scorer,
                       const StopwordList &stopwords)
    : catalog_(catalog), scorer_(scorer), stopwords_(stopwords), graph_(std::move(graph)) {
  if (!graph_) throw Error(ErrorCode::kInvalidArgument, "service needs a graph");
}

std::shared_ptr<const KnowledgeGraph> ApiHandler::graph() const {
  std::lock_guard<std::mutex> lock(mu_);
  return graph_;
}

void ApiHandler::SwapGraph(std::shared_ptr<const KnowledgeGraph> graph) {
  if (!graph) throw Error(ErrorCode::kInvalidArgument, "service needs a graph");
  std::lock_guard<std::mutex> lock(mu_);
  graph_ = std::move(graph);
}

HttpResponse ApiHandler::Handle(std::string_view path, const QueryParams &params) const {
  // The snapshot keeps the graph alive for the whole request.
  std::shared_ptr<const KnowledgeGraph> snapshot = graph();
  const KnowledgeGraph &g = *snapshot;
  try {
    if (path == "/api/nlq") {
      std::optional<std::string> q = Param(params, "q");
      if (!q || Trim(*q).empty()) {
        throw Error(ErrorCode::kInvalidArgument, "missing query parameter 'q'");
      }
      return Ok(AnswerJson(AnswerQuery(*q, g, catalog_, scorer_), g));
    }
    if (path == "/api/search") {
      std::optional<std::string> q = Param(params, "q");
      if (!q || Trim(*q).empty()) {
        throw Error(ErrorCode::kInvalidArgument, "missing query parameter 'q'");
      }
      std::optional<EntityKind> kind;
      if (std::optional<std::string> k = Param(params, "kind")) {
        kind = ParseKind(*k);
        if (!kind || *kind == EntityKind::kField) {
          throw Error(ErrorCode::kInvalidArgument,
                      "'kind' must be author, paper or venue, not '" + *k + "'");
        }
      }
      size_t limit = NumberParam(params, "limit", kDefaultSearchLimit);
      size_t offset = NumberParam(params, "offset", 0);
      std::vector<SearchHit> hits = KeywordSearch(g, *q, kind, stopwords_);
      size_t begin = std::min(offset, hits.size());
      size_t end = std::min(hits.size(), begin + limit);
      json payload = {
          {"total", hits.size()},
          {"offset", begin},
          {"hits", SearchJson(std::span(hits).subspan(begin, end - begin), g)}};
      return Ok(std::move(payload));
    }
    if (path == "/api/dump") {
      return {200, "text/plain; charset=utf-8", DumpToString(g)};
    }
    struct Route {
      std::string_view prefix;
      EntityKind kind;
    };
    static constexpr Route kProfiles[] = {{"/api/paper/", EntityKind::kPaper},
                                          {"/api/author/", EntityKind::kAuthor},
                                          {"/api/venue/", EntityKind::kVenue}};
    for (const Route &route : kProfiles) {
      if (!path.starts_with(route.prefix)) continue;
      std::string id(path.substr(route.prefix.size()));
      if (id.empty() || id.find('/') != std::string::npos) break;
      NodeIndex node = RequireKind(g, route.kind, id);
      switch (route.kind) {
        case EntityKind::kPaper:
          return Ok(ProfileJson(BuildPaperProfile(g, node, scorer_, stopwords_), g));
        case EntityKind::kAuthor:
          return Ok(ProfileJson(BuildAuthorProfile(g, node), g));
        default:
          return Ok(ProfileJson(BuildVenueProfile(g, node), g));
      }
    }
    return Failure(ErrorCode::kNotFound, "no endpoint " + std::string(path));
  } catch (const Error &e) {
    return Failure(e.code(), e.what());
  } catch (const std::exception &e) {
    return Failure(ErrorCode::kInternal, e.what());
  }
}

Server::Server(ApiHandler &handler)
    : handler_(handler), server_(std::make_unique<httplib::Server>()) {
  // The library default sets SO_REUSEPORT, which would let a second server
  // silently share a busy port. Keep plain SO_REUSEADDR.
  server_->set_socket_options([](int sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  });
  server_->Get(R"(/.*)", [this](const httplib::Request &req, httplib::Response &res) {
    QueryParams params(req.params.begin(), req.params.end());
    HttpResponse response = handler_.Handle(req.path, params);
    res.status = response.status;
    res.set_content(response.body, response.content_type.c_str());
  });
}

Server::~Server() { Stop(); }

int Server::Bind(const std::string &host, int port) {
  if (port == 0) {
    int bound = server_->bind_to_any_port(host.c_str());
    if (bound < 0) throw Error(ErrorCode::kIo, "cannot bind " + host);
    return bound;
  }
  if (!server_->bind_to_port(host.c_str(), port)) {
    throw Error(ErrorCode::kIo,
                "cannot bind " + host + ":" + std::to_string(port) + " (address in use?)");
  }
  return port;
}

void Server::Run() { server_->listen_after_bind(); }

void Server::Stop() {
  if (server_ && server_->is_running()) server_->stop();
}

void Server::RunUntilSignal() {
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  // Block in this thread before spawning so worker threads inherit it and
  // the waiter below is the only receiver.
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);
  std::thread serving([this] { Run(); });
  int received = 0;
  sigwait(&signals, &received);
  Stop();
  serving.join();
  pthread_sigmask(SIG_UNBLOCK, &signals, nullptr);
}

std::pair<std::string, int> ParseBindAddress(std::string_view address) {
  std::string host = "127.0.0.1";
  std::string_view port_text = address;
  size_t colon = address.rfind(':');
  if (colon != std::string_view::npos) {
    if (colon > 0) host = std::string(address.substr(0, colon));
    port_text = address.substr(colon + 1);
  }
  if (port_text.empty() || port_text.size() > 5 ||
      port_text.find_first_not_of("0123456789") != std::string_view::npos) {
    throw Error(ErrorCode::kInvalidArgument, "bad bind address '" + std::string(address) + "'");
  }
  int port = std::stoi(std::string(port_text));
  if (port > 65535) {
    throw Error(ErrorCode::kInvalidArgument, "port out of range in '" + std::string(address) + "'");
  }
  return {host, port};
}

}  // namespace scholargraph
