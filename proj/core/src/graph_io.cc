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
#include "scholargraph/graph_io.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "scholargraph/error.h"

namespace scholargraph {
namespace {

constexpr std::string_view kNodesHeader = "#NODES";
constexpr std::string_view kEdgesHeader = "#EDGES";
constexpr std::string_view kPropertiesHeader = "#PROPERTIES";

std::string Sanitize(std::string_view text) {
  std::string out(text);
  for (char &c : out) {
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  }
  return out;
}

std::vector<std::string> SplitTabs(const std::string &line) {
  std::vector<std::string> fields;
  size_t begin = 0;
  while (true) {
    size_t tab = line.find('\t', begin);
    fields.push_back(line.substr(begin, tab - begin));
    if (tab == std::string::npos) break;
    begin = tab + 1;
  }
  return fields;
}

std::string Quote(const std::string &value) {
  return nlohmann::json(value).dump();
}

[[noreturn]] void Malformed(size_t line_number, const std::string &message) {
  throw Error(ErrorCode::kParse,
              "graph line " + std::to_string(line_number) + ": " + message);
}

std::vector<std::string> NodeLines(const KnowledgeGraph &g) {
  std::vector<std::string> lines;
  lines.reserve(g.node_count());
  for (EntityKind kind : kAllKinds) {
    for (NodeIndex n : g.nodes(kind)) {
      const NodeInfo &info = g.node(n);
      std::string line(KindName(kind));
      line += '\t';
      line += Sanitize(info.id);
      line += '\t';
      line += Sanitize(info.display);
      line += '\t';
      if (info.year) line += std::to_string(*info.year);
      lines.push_back(std::move(line));
    }
  }
  std::sort(lines.begin(), lines.end());
  return lines;
}

std::vector<std::string> EdgeLines(const KnowledgeGraph &g) {
  std::vector<std::string> lines;
  lines.reserve(g.edge_count());
  for (EdgeType type : kAllEdgeTypes) {
    for (NodeIndex src : g.nodes(EdgeSource(type))) {
      for (NodeIndex dst : g.Neighbors(src, type, Direction::kForward)) {
        std::string line(EdgeTypeName(type));
        line += '\t';
        line += Sanitize(g.id(src));
        line += '\t';
        line += Sanitize(g.id(dst));
        lines.push_back(std::move(line));
      }
    }
  }
  std::sort(lines.begin(), lines.end());
  return lines;
}

}  // namespace

void WriteDump(const KnowledgeGraph &g, std::ostream &out) {
  out << kNodesHeader << '\n';
  for (const std::string &line : NodeLines(g)) out << line << '\n';
  out << kEdgesHeader << '\n';
  for (const std::string &line : EdgeLines(g)) out << line << '\n';
}

std::string DumpToString(const KnowledgeGraph &g) {
  std::ostringstream out;
  WriteDump(g, out);
  return out.str();
}

void DumpToFile(const KnowledgeGraph &g, const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  WriteDump(g, out);
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "failed writing " + path.string());
}

void WriteGraphFile(const KnowledgeGraph &g, std::ostream &out) {
  WriteDump(g, out);
  out << kPropertiesHeader << '\n';
  for (NodeIndex paper : g.nodes(EntityKind::kPaper)) {
    const std::string id = Sanitize(g.id(paper));
    const PaperProperties &props = g.paper_properties(paper);
    if (!props.abstract.empty()) {
      out << "abstract\t" << id << '\t' << Quote(props.abstract) << '\n';
    }
    for (const std::string &url : props.urls) {
      out << "url\t" << id << '\t' << Quote(url) << '\n';
    }
    for (const std::string &affiliation : props.affiliations) {
      out << "affiliation\t" << id << '\t' << Quote(affiliation) << '\n';
    }
    // Author order matters for display; edges only keep the set.
    out << "authors\t" << id;
    for (NodeIndex author : props.byline) {
      out << '\t' << Sanitize(g.id(author));
    }
    out << '\n';
    for (const auto &[cited, sentence] : g.outgoing_contexts(paper)) {
      out << "context\t" << id << '\t' << Sanitize(g.id(cited)) << '\t'
          << Quote(sentence) << '\n';
    }
  }
}

void SaveGraph(const KnowledgeGraph &g, const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  WriteGraphFile(g, out);
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "failed writing " + path.string());
}

KnowledgeGraph ReadGraph(std::istream &in) {
  enum class Section { kNone, kNodes, kEdges, kProperties } section = Section::kNone;
  std::map<std::string, PaperRecord> papers;
  std::map<std::string, std::string> author_names;
  std::map<std::string, std::vector<std::string>> author_order;

  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line == kNodesHeader) { section = Section::kNodes; continue; }
    if (line == kEdgesHeader) { section = Section::kEdges; continue; }
    if (line == kPropertiesHeader) { section = Section::kProperties; continue; }

    std::vector<std::string> f = SplitTabs(line);
    switch (section) {
      case Section::kNone:
        Malformed(line_number, "content before #NODES");
      case Section::kNodes: {
        if (f.size() != 4) Malformed(line_number, "node line needs 4 fields");
        auto kind = ParseKind(f[0]);
        if (!kind) Malformed(line_number, "unknown kind '" + f[0] + "'");
        if (*kind == EntityKind::kPaper) {
          PaperRecord &paper = papers[f[1]];
          paper.paper_id = f[1];
          paper.title = f[2];
          try {
            paper.year = std::stoi(f[3]);
          } catch (const std::exception &) {
            Malformed(line_number, "paper without a year");
          }
        } else if (*kind == EntityKind::kAuthor) {
          author_names[f[1]] = f[2];
        }
        // Venue and field display names equal their ids.
        break;
      }
      case Section::kEdges: {
        if (f.size() != 3) Malformed(line_number, "edge line needs 3 fields");
        auto type = ParseEdgeType(f[0]);
        if (!type) Malformed(line_number, "unknown edge type '" + f[0] + "'");
        const std::string &paper_id = *type == EdgeType::kAuthored ? f[2] : f[1];
        auto it = papers.find(paper_id);
        if (it == papers.end()) {
          Malformed(line_number, "edge refers to unknown paper '" + paper_id + "'");
        }
        PaperRecord &paper = it->second;
        switch (*type) {
          case EdgeType::kAuthored:
            if (author_names.count(f[1]) == 0) {
              Malformed(line_number, "unknown author '" + f[1] + "'");
            }
            paper.author_ids.push_back(f[1]);
            break;
          case EdgeType::kPublishedAt: paper.venue_id = f[2]; break;
          case EdgeType::kInField: paper.field_ids.push_back(f[2]); break;
          case EdgeType::kCites: paper.cited_paper_ids.push_back(f[2]); break;
        }
        break;
      }
      case Section::kProperties: {
        if (f.size() < 2) Malformed(line_number, "property line too short");
        auto it = papers.find(f[1]);
        if (it == papers.end()) {
          Malformed(line_number, "property of unknown paper '" + f[1] + "'");
        }
        PaperRecord &paper = it->second;
        auto value = [&](size_t i) {
          if (f.size() <= i) Malformed(line_number, "missing property value");
          try {
            return nlohmann::json::parse(f[i]).get<std::string>();
          } catch (const nlohmann::json::exception &) {
            Malformed(line_number, "bad quoted value");
          }
        };
        if (f[0] == "abstract") {
          paper.abstract = value(2);
        } else if (f[0] == "url") {
          paper.urls.push_back(value(2));
        } else if (f[0] == "affiliation") {
          paper.affiliations.push_back(value(2));
        } else if (f[0] == "authors") {
          author_order[f[1]].assign(f.begin() + 2, f.end());
        } else if (f[0] == "context") {
          paper.contexts.push_back({f[2], value(3)});
        } else {
          Malformed(line_number, "unknown property '" + f[0] + "'");
        }
        break;
      }
    }
  }

  std::vector<PaperRecord> records;
  records.reserve(papers.size());
  for (auto &[id, paper] : papers) {
    auto order = author_order.find(id);
    if (order != author_order.end()) {
      std::vector<std::string> sorted_edges = paper.author_ids;
      std::vector<std::string> sorted_order = order->second;
      std::sort(sorted_edges.begin(), sorted_edges.end());
      std::sort(sorted_order.begin(), sorted_order.end());
      if (sorted_edges != sorted_order) {
        throw Error(ErrorCode::kParse, "author order of '" + id +
                                           "' disagrees with authored edges");
      }
      paper.author_ids = order->second;
    }
    for (const std::string &author : paper.author_ids) {
      paper.author_names.push_back(author_names.at(author));
    }
    records.push_back(std::move(paper));
  }
  try {
    return BuildGraph(records);
  } catch (const Error &e) {
    throw Error(ErrorCode::kParse, std::string("inconsistent graph: ") + e.what());
  }
}

KnowledgeGraph LoadGraph(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read graph " + path.string());
  return ReadGraph(in);
}

std::vector<PaperRecord> ToRecords(const KnowledgeGraph &g) {
  std::vector<PaperRecord> records;
  records.reserve(g.node_count(EntityKind::kPaper));
  for (NodeIndex paper : g.nodes(EntityKind::kPaper)) {
    const PaperProperties &props = g.paper_properties(paper);
    PaperRecord r;
    r.paper_id = g.id(paper);
    r.title = g.node(paper).display;
    r.year = g.year(paper);
    for (NodeIndex a : props.byline) {
      r.author_ids.push_back(g.id(a));
      r.author_names.push_back(g.node(a).display);
    }
    r.venue_id = g.id(g.venue_of(paper));
    for (NodeIndex f : g.Neighbors(paper, EdgeType::kInField, Direction::kForward)) {
      r.field_ids.push_back(g.id(f));
    }
    for (NodeIndex c : g.Neighbors(paper, EdgeType::kCites, Direction::kForward)) {
      r.cited_paper_ids.push_back(g.id(c));
    }
    for (const auto &[cited, sentence] : g.outgoing_contexts(paper)) {
      r.contexts.push_back({g.id(cited), sentence});
    }
    r.abstract = props.abstract;
    r.urls = props.urls;
    r.affiliations = props.affiliations;
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace scholargraph
