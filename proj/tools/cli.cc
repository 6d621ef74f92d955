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
#include "cli.h"

#include <filesystem>
#include <fstream>
#include <memory>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "scholargraph/citetext.h"
#include "scholargraph/error.h"
#include "scholargraph/graph.h"
#include "scholargraph/graph_io.h"
#include "scholargraph/ingest.h"
#include "scholargraph/nlq.h"
#include "scholargraph/profiles.h"
#include "scholargraph/render.h"
#include "scholargraph/service.h"

namespace scholargraph::cli {
namespace {

using json = nlohmann::json;

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo:
    case ErrorCode::kParse:
    case ErrorCode::kConfig:
      return kExitIo;
    case ErrorCode::kUnsupportedQuery:
      return kExitUnsupportedQuery;
    case ErrorCode::kNotFound:
    case ErrorCode::kEntityNotFound:
      return kExitNotFound;
    default:
      return kExitUsage;
  }
}

void RequireReadable(const std::string &path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw Error(ErrorCode::kIo, "cannot read '" + path + "'");
  }
}

void RequireWritableParent(const std::string &path) {
  std::filesystem::path parent = std::filesystem::path(path).parent_path();
  std::error_code ec;
  if (!parent.empty() && !std::filesystem::is_directory(parent, ec)) {
    throw Error(ErrorCode::kIo, "no directory for '" + path + "'");
  }
}

void PrintJson(std::ostream &out, const json &value) { out << value.dump(2) << '\n'; }

struct Options {
  std::string format = "text";
  // build
  std::string corpus, venues, fields, out_path;
  // query / profile / dump / serve
  std::string graph, text, kind, id, address = "127.0.0.1:8080";

  bool structured() const { return format == "structured"; }
};

int DoBuild(const Options &o, std::ostream &out, std::ostream &err) {
  RequireReadable(o.corpus);
  if (!o.venues.empty()) RequireReadable(o.venues);
  if (!o.fields.empty()) RequireReadable(o.fields);
  RequireWritableParent(o.out_path);

  LoadReport report = LoadCorpus(o.corpus);
  for (const std::string &d : report.diagnostics) err << "skipped " << d << '\n';
  VenueTable venues = o.venues.empty() ? VenueTable() : VenueTable::Load(o.venues);
  FieldVocabulary fields = o.fields.empty() ? FieldVocabulary() : FieldVocabulary::Load(o.fields);
  IngestResult ingested = Ingest(report.records, std::move(venues), fields);
  for (const std::string &w : ingested.warnings) err << "warning: " << w << '\n';
  KnowledgeGraph g = BuildGraph(ingested.papers);
  SaveGraph(g, o.out_path);

  size_t nodes = 0, edges = 0;
  json by_kind = json::object(), by_type = json::object();
  for (EntityKind k : kAllKinds) {
    nodes += g.node_count(k);
    by_kind[std::string(KindName(k))] = g.node_count(k);
  }
  for (EdgeType t : kAllEdgeTypes) {
    edges += g.edge_count(t);
    by_type[std::string(EdgeTypeName(t))] = g.edge_count(t);
  }
  if (o.structured()) {
    PrintJson(out, {{"nodes", nodes},
                    {"edges", edges},
                    {"nodes_by_kind", by_kind},
                    {"edges_by_type", by_type},
                    {"skipped_records", report.skipped},
                    {"output", o.out_path}});
  } else {
    out << "nodes: " << nodes << '\n' << "edges: " << edges << '\n';
    for (auto &[k, n] : by_kind.items()) out << "  " << k << ": " << n << '\n';
    for (auto &[t, n] : by_type.items()) out << "  " << t << ": " << n << '\n';
  }
  return kExitOk;
}

KnowledgeGraph LoadGraphArg(const std::string &path) {
  RequireReadable(path);
  return LoadGraph(path);
}

int DoQuery(const Options &o, std::ostream &out) {
  KnowledgeGraph g = LoadGraphArg(o.graph);
  Answer answer =
      AnswerQuery(o.text, g, TemplateCatalog::Default(), SentimentLexicon::Default());
  if (o.structured()) {
    PrintJson(out, AnswerJson(answer, g));
  } else {
    out << AnswerText(answer, g);
  }
  return kExitOk;
}

int DoProfile(const Options &o, std::ostream &out) {
  std::optional<EntityKind> kind = ParseKind(o.kind);
  if (!kind || *kind == EntityKind::kField) {
    throw Error(ErrorCode::kInvalidArgument,
                "profile kind must be paper, author or venue, not '" + o.kind + "'");
  }
  KnowledgeGraph g = LoadGraphArg(o.graph);
  const StopwordList &stopwords = StopwordList::Default();
  std::optional<NodeIndex> node = ResolveEntity(g, *kind, o.id, stopwords);
  if (!node) {
    throw Error(ErrorCode::kNotFound, "no " + std::string(KindName(*kind)) + " '" + o.id + "'");
  }
  switch (*kind) {
    case EntityKind::kPaper: {
      PaperProfile p = BuildPaperProfile(g, *node, SentimentLexicon::Default(), stopwords);
      if (o.structured()) PrintJson(out, ProfileJson(p, g));
      else out << ProfileText(p, g);
      break;
    }
    case EntityKind::kAuthor: {
      AuthorProfile p = BuildAuthorProfile(g, *node);
      if (o.structured()) PrintJson(out, ProfileJson(p, g));
      else out << ProfileText(p, g);
      break;
    }
    default: {
      VenueProfile p = BuildVenueProfile(g, *node);
      if (o.structured()) PrintJson(out, ProfileJson(p, g));
      else out << ProfileText(p, g);
      break;
    }
  }
  return kExitOk;
}

int DoDump(const Options &o, std::ostream &out) {
  KnowledgeGraph g = LoadGraphArg(o.graph);
  RequireWritableParent(o.out_path);
  DumpToFile(g, o.out_path);
  if (o.structured()) {
    PrintJson(out, {{"output", o.out_path}});
  } else {
    out << "wrote " << o.out_path << '\n';
  }
  return kExitOk;
}

int DoServe(const Options &o, std::ostream &out) {
  auto [host, port] = ParseBindAddress(o.address);
  auto graph = std::make_shared<const KnowledgeGraph>(LoadGraphArg(o.graph));
  ApiHandler handler(graph, TemplateCatalog::Default(), SentimentLexicon::Default(),
                     StopwordList::Default());
  Server server(handler);
  int bound = server.Bind(host, port);
  out << "serving on http://" << host << ':' << bound << std::endl;
  server.RunUntilSignal();
  out << "stopped" << std::endl;
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  Options o;
  CLI::App app("Scholarly knowledge-graph builder and query tool", "scholargraph");
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output style")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();

  CLI::App *build = app.add_subcommand("build", "Build a graph file from a corpus");
  build->add_option("--corpus", o.corpus, "Line-delimited JSON records")->required();
  build->add_option("--venues", o.venues, "Venue alias table (JSON)");
  build->add_option("--fields", o.fields, "Field keyword vocabulary (JSON)");
  build->add_option("--out", o.out_path, "Graph file to write")->required();

  CLI::App *query = app.add_subcommand("query", "Answer a natural-language query");
  query->add_option("graph", o.graph, "Graph file")->required();
  query->add_option("text", o.text, "Query text")->required();

  CLI::App *profile = app.add_subcommand("profile", "Show an entity profile");
  profile->add_option("graph", o.graph, "Graph file")->required();
  profile->add_option("kind", o.kind, "paper, author or venue")->required();
  profile->add_option("id", o.id, "Entity id or name")->required();

  CLI::App *dump = app.add_subcommand("dump", "Write the plain-text graph dump");
  dump->add_option("graph", o.graph, "Graph file")->required();
  dump->add_option("out", o.out_path, "Dump file to write")->required();

  CLI::App *serve = app.add_subcommand("serve", "Serve the REST API");
  serve->add_option("graph", o.graph, "Graph file")->required();
  serve->add_option("--address", o.address, "host:port to bind")->capture_default_str();

  // --format is accepted after the subcommand too.
  for (CLI::App *sub : {build, query, profile, dump, serve}) {
    sub->fallthrough();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*build) return DoBuild(o, out, err);
    if (*query) return DoQuery(o, out);
    if (*profile) return DoProfile(o, out);
    if (*dump) return DoDump(o, out);
    return DoServe(o, out);
  } catch (const Error &e) {
    err << "error: " << ErrorCodeName(e.code()) << ": " << e.what() << '\n';
    return ExitCodeFor(e.code());
  } catch (const std::exception &e) {
    err << "error: internal: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace scholargraph::cli
