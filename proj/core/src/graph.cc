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
#include "scholargraph/graph.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <utility>

#include "scholargraph/error.h"

namespace scholargraph {
namespace {

size_t KindSlot(EntityKind kind) { return static_cast<size_t>(kind); }

[[noreturn]] void InvalidInput(const std::string &message) {
  throw Error(ErrorCode::kInvalidArgument, message);
}

}  // namespace

std::string_view KindName(EntityKind kind) {
  switch (kind) {
    case EntityKind::kAuthor: return "author";
    case EntityKind::kPaper: return "paper";
    case EntityKind::kVenue: return "venue";
    case EntityKind::kField: return "field";
  }
  return "unknown";
}

char KindLetter(EntityKind kind) {
  switch (kind) {
    case EntityKind::kAuthor: return 'A';
    case EntityKind::kPaper: return 'P';
    case EntityKind::kVenue: return 'V';
    case EntityKind::kField: return 'F';
  }
  return '?';
}

std::optional<EntityKind> ParseKind(std::string_view text) {
  std::string lower;
  for (char c : text) {
    lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  for (EntityKind kind : kAllKinds) {
    if (lower == KindName(kind) ||
        (lower.size() == 1 &&
         lower[0] == std::tolower(static_cast<unsigned char>(KindLetter(kind))))) {
      return kind;
    }
  }
  return std::nullopt;
}

std::string_view EdgeTypeName(EdgeType type) {
  switch (type) {
    case EdgeType::kAuthored: return "authored";
    case EdgeType::kPublishedAt: return "published_at";
    case EdgeType::kInField: return "in_field";
    case EdgeType::kCites: return "cites";
  }
  return "unknown";
}

std::optional<EdgeType> ParseEdgeType(std::string_view text) {
  for (EdgeType type : kAllEdgeTypes) {
    if (text == EdgeTypeName(type)) return type;
  }
  return std::nullopt;
}

EntityKind EdgeSource(EdgeType type) {
  return type == EdgeType::kAuthored ? EntityKind::kAuthor : EntityKind::kPaper;
}

EntityKind EdgeTarget(EdgeType type) {
  switch (type) {
    case EdgeType::kAuthored: return EntityKind::kPaper;
    case EdgeType::kPublishedAt: return EntityKind::kVenue;
    case EdgeType::kInField: return EntityKind::kField;
    case EdgeType::kCites: return EntityKind::kPaper;
  }
  return EntityKind::kPaper;
}

size_t KnowledgeGraph::edge_count(EdgeType type) const {
  return adjacency(type, Direction::kForward).targets.size();
}

size_t KnowledgeGraph::edge_count() const {
  size_t total = 0;
  for (EdgeType type : kAllEdgeTypes) total += edge_count(type);
  return total;
}

std::optional<NodeIndex> KnowledgeGraph::Find(EntityKind kind,
                                              std::string_view id) const {
  std::span<const NodeIndex> range = by_kind(kind);
  auto it = std::lower_bound(
      range.begin(), range.end(), id,
      [this](NodeIndex n, std::string_view key) { return nodes_[n.value].id < key; });
  if (it == range.end() || nodes_[it->value].id != id) return std::nullopt;
  return *it;
}

NodeIndex KnowledgeGraph::Require(EntityKind kind, std::string_view id) const {
  if (auto found = Find(kind, id)) return *found;
  throw Error(ErrorCode::kNotFound, "no " + std::string(KindName(kind)) +
                                        " with id '" + std::string(id) + "'");
}

const NodeInfo &KnowledgeGraph::node(NodeIndex node) const {
  if (!Contains(node)) {
    throw Error(ErrorCode::kNotFound,
                "node index " + std::to_string(node.value) + " out of range");
  }
  return nodes_[node.value];
}

std::span<const NodeIndex> KnowledgeGraph::Neighbors(NodeIndex node,
                                                     EdgeType type,
                                                     Direction direction) const {
  EntityKind expected = direction == Direction::kForward ? EdgeSource(type)
                                                         : EdgeTarget(type);
  if (kind(node) != expected) {
    throw Error(ErrorCode::kKindMismatch,
                "node '" + id(node) + "' is a " + std::string(KindName(kind(node))) +
                    ", " + std::string(EdgeTypeName(type)) + " needs a " +
                    std::string(KindName(expected)));
  }
  const Adjacency &adj = adjacency(type, direction);
  return std::span<const NodeIndex>(adj.targets)
      .subspan(adj.offsets[node.value],
               adj.offsets[node.value + 1] - adj.offsets[node.value]);
}

size_t KnowledgeGraph::paper_slot(NodeIndex paper) const {
  if (kind(paper) != EntityKind::kPaper) {
    throw Error(ErrorCode::kKindMismatch, "'" + id(paper) + "' is not a paper");
  }
  return paper.value - kind_nodes_[KindSlot(EntityKind::kPaper)].front().value;
}

int KnowledgeGraph::year(NodeIndex paper) const {
  paper_slot(paper);
  return *nodes_[paper.value].year;
}

const PaperProperties &KnowledgeGraph::paper_properties(NodeIndex paper) const {
  return paper_properties_[paper_slot(paper)];
}

std::span<const IncomingContext> KnowledgeGraph::incoming_contexts(
    NodeIndex paper) const {
  return incoming_contexts_[paper_slot(paper)];
}

std::vector<std::pair<NodeIndex, std::string>>
KnowledgeGraph::outgoing_contexts(NodeIndex paper) const {
  std::vector<std::tuple<uint32_t, NodeIndex, std::string>> found;
  for (NodeIndex cited : Neighbors(paper, EdgeType::kCites, Direction::kForward)) {
    for (const IncomingContext &c : incoming_contexts(cited)) {
      if (c.citing == paper) found.emplace_back(c.position, cited, c.sentence);
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<std::pair<NodeIndex, std::string>> out;
  out.reserve(found.size());
  for (auto &[position, cited, sentence] : found) {
    out.emplace_back(cited, std::move(sentence));
  }
  return out;
}

NodeIndex KnowledgeGraph::venue_of(NodeIndex paper) const {
  auto venues = Neighbors(paper, EdgeType::kPublishedAt, Direction::kForward);
  if (venues.empty()) {
    throw Error(ErrorCode::kInternal, "paper '" + id(paper) + "' has no venue");
  }
  return venues.front();
}

int64_t KnowledgeGraph::citation_count(NodeIndex paper) const {
  return static_cast<int64_t>(
      Neighbors(paper, EdgeType::kCites, Direction::kReverse).size());
}

KnowledgeGraph BuildGraph(std::span<const PaperRecord> records) {
  // Collect ids per kind; std::map gives the id order directly.
  std::array<std::map<std::string, std::string>, 4> displays;
  for (const PaperRecord &r : records) {
    if (r.paper_id.empty()) InvalidInput("paper with empty id");
    if (!displays[KindSlot(EntityKind::kPaper)].emplace(r.paper_id, r.title).second) {
      InvalidInput("duplicate paper id '" + r.paper_id + "'");
    }
    if (r.author_ids.empty()) InvalidInput("paper '" + r.paper_id + "' has no authors");
    if (r.venue_id.empty()) InvalidInput("paper '" + r.paper_id + "' has no venue");
    for (size_t i = 0; i < r.author_ids.size(); ++i) {
      const std::string &name =
          i < r.author_names.size() ? r.author_names[i] : r.author_ids[i];
      displays[KindSlot(EntityKind::kAuthor)].emplace(r.author_ids[i], name);
    }
    displays[KindSlot(EntityKind::kVenue)].emplace(r.venue_id, r.venue_id);
    for (const std::string &field : r.field_ids) {
      displays[KindSlot(EntityKind::kField)].emplace(field, field);
    }
  }

  KnowledgeGraph g;
  for (EntityKind kind : kAllKinds) {
    for (const auto &[id, display] : displays[KindSlot(kind)]) {
      NodeIndex index{static_cast<uint32_t>(g.nodes_.size())};
      g.nodes_.push_back({kind, id, display, std::nullopt});
      g.kind_nodes_[KindSlot(kind)].push_back(index);
    }
  }
  const size_t paper_count = records.size();
  g.paper_properties_.resize(paper_count);
  g.incoming_contexts_.resize(paper_count);

  std::array<std::vector<std::pair<NodeIndex, NodeIndex>>, 4> edges;
  auto add_edge = [&](EdgeType type, NodeIndex src, NodeIndex dst) {
    edges[static_cast<size_t>(type)].emplace_back(src, dst);
  };

  for (const PaperRecord &r : records) {
    NodeIndex paper = *g.Find(EntityKind::kPaper, r.paper_id);
    NodeInfo &info = g.nodes_[paper.value];
    info.year = r.year;
    g.min_year_ = std::min(g.min_year_.value_or(r.year), r.year);
    g.max_year_ = std::max(g.max_year_.value_or(r.year), r.year);
    PaperProperties &props = g.paper_properties_[g.paper_slot(paper)];
    props = {{}, r.abstract, r.urls, r.affiliations};

    for (const std::string &author : r.author_ids) {
      NodeIndex a = *g.Find(EntityKind::kAuthor, author);
      if (std::find(props.byline.begin(), props.byline.end(), a) == props.byline.end()) {
        props.byline.push_back(a);
      }
      add_edge(EdgeType::kAuthored, a, paper);
    }
    add_edge(EdgeType::kPublishedAt, paper, *g.Find(EntityKind::kVenue, r.venue_id));
    for (const std::string &field : r.field_ids) {
      add_edge(EdgeType::kInField, paper, *g.Find(EntityKind::kField, field));
    }
    std::set<std::string> cited_ids(r.cited_paper_ids.begin(), r.cited_paper_ids.end());
    for (const std::string &cited_id : r.cited_paper_ids) {
      if (cited_id == r.paper_id) {
        InvalidInput("paper '" + r.paper_id + "' cites itself");
      }
      auto cited = g.Find(EntityKind::kPaper, cited_id);
      if (!cited) {
        InvalidInput("paper '" + r.paper_id + "' cites unknown paper '" +
                     cited_id + "'");
      }
      add_edge(EdgeType::kCites, paper, *cited);
    }
    for (uint32_t pos = 0; pos < r.contexts.size(); ++pos) {
      const PaperContext &context = r.contexts[pos];
      if (cited_ids.count(context.cited_paper_id) == 0) {
        InvalidInput("context of '" + r.paper_id + "' refers to '" +
                     context.cited_paper_id + "', which it does not cite");
      }
      NodeIndex cited = *g.Find(EntityKind::kPaper, context.cited_paper_id);
      g.incoming_contexts_[g.paper_slot(cited)].push_back(
          {paper, context.sentence, pos});
    }
  }

  for (auto &contexts : g.incoming_contexts_) {
    std::sort(contexts.begin(), contexts.end(),
              [](const IncomingContext &a, const IncomingContext &b) {
                return std::tie(a.citing, a.position) < std::tie(b.citing, b.position);
              });
  }

  const size_t n = g.nodes_.size();
  for (EdgeType type : kAllEdgeTypes) {
    auto &list = edges[static_cast<size_t>(type)];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    for (Direction direction : {Direction::kForward, Direction::kReverse}) {
      KnowledgeGraph::Adjacency &adj =
          g.adjacency_[static_cast<size_t>(type) * 2 + static_cast<size_t>(direction)];
      adj.offsets.assign(n + 1, 0);
      std::vector<std::pair<NodeIndex, NodeIndex>> oriented = list;
      if (direction == Direction::kReverse) {
        for (auto &[a, b] : oriented) std::swap(a, b);
        std::sort(oriented.begin(), oriented.end());
      }
      for (const auto &[src, dst] : oriented) ++adj.offsets[src.value + 1];
      for (size_t i = 0; i < n; ++i) adj.offsets[i + 1] += adj.offsets[i];
      adj.targets.reserve(oriented.size());
      for (const auto &[src, dst] : oriented) adj.targets.push_back(dst);
    }
  }
  return g;
}

std::vector<NodeIndex> Neighbors(const KnowledgeGraph &g, EntityKind kind,
                                 std::string_view id, EdgeType type,
                                 Direction direction) {
  auto span = g.Neighbors(g.Require(kind, id), type, direction);
  return {span.begin(), span.end()};
}

MetapathSpec::MetapathSpec(std::vector<EntityKind> kinds,
                           Direction cites_direction)
    : kinds_(std::move(kinds)), cites_direction_(cites_direction) {
  if (kinds_.size() < 2) {
    throw Error(ErrorCode::kInvalidMetapath, "a metapath needs at least two kinds");
  }
  for (size_t i = 0; i + 1 < kinds_.size(); ++i) {
    if (!IsValidStep(kinds_[i], kinds_[i + 1])) {
      throw Error(ErrorCode::kInvalidMetapath,
                  std::string("no edge joins ") + KindLetter(kinds_[i]) +
                      " and " + KindLetter(kinds_[i + 1]));
    }
  }
}

bool MetapathSpec::IsValidStep(EntityKind from, EntityKind to) {
  return from == EntityKind::kPaper || to == EntityKind::kPaper;
}

namespace {

std::vector<EntityKind> ParseKinds(std::string_view text) {
  std::vector<EntityKind> kinds;
  for (char c : text) {
    if (c == '-' || c == '>' || c == '<' || c == ' ') continue;
    auto kind = ParseKind(std::string_view(&c, 1));
    if (!kind) {
      throw Error(ErrorCode::kInvalidMetapath,
                  "unknown kind '" + std::string(1, c) + "' in metapath");
    }
    kinds.push_back(*kind);
  }
  return kinds;
}

}  // namespace

MetapathSpec MetapathSpec::Parse(std::string_view text, Direction cites_direction) {
  return MetapathSpec(ParseKinds(text), cites_direction);
}

MetapathSpec MetapathSpec::Expand(std::vector<EntityKind> compact,
                                  Direction cites_direction) {
  std::vector<EntityKind> kinds;
  for (size_t i = 0; i < compact.size(); ++i) {
    if (i > 0 && !IsValidStep(compact[i - 1], compact[i])) {
      kinds.push_back(EntityKind::kPaper);
    }
    kinds.push_back(compact[i]);
  }
  return MetapathSpec(std::move(kinds), cites_direction);
}

MetapathSpec MetapathSpec::ParseCompact(std::string_view text,
                                        Direction cites_direction) {
  return Expand(ParseKinds(text), cites_direction);
}

std::pair<EdgeType, Direction> MetapathSpec::Step(size_t i) const {
  EntityKind from = kinds_.at(i);
  EntityKind to = kinds_.at(i + 1);
  if (from == EntityKind::kPaper && to == EntityKind::kPaper) {
    return {EdgeType::kCites, cites_direction_};
  }
  EntityKind other = from == EntityKind::kPaper ? to : from;
  EdgeType type = other == EntityKind::kAuthor  ? EdgeType::kAuthored
                  : other == EntityKind::kVenue ? EdgeType::kPublishedAt
                                                : EdgeType::kInField;
  return {type, from == EdgeSource(type) ? Direction::kForward : Direction::kReverse};
}

std::string MetapathSpec::ToString() const {
  std::string out;
  for (size_t i = 0; i < kinds_.size(); ++i) {
    if (i > 0) {
      bool cites = kinds_[i - 1] == EntityKind::kPaper && kinds_[i] == EntityKind::kPaper;
      out += !cites ? '-' : cites_direction_ == Direction::kForward ? '>' : '<';
    }
    out += KindLetter(kinds_[i]);
  }
  return out;
}

std::vector<EntityCount> MetapathTraverse(const KnowledgeGraph &g,
                                          NodeIndex start,
                                          const MetapathSpec &spec) {
  if (g.kind(start) != spec.kinds().front()) {
    throw Error(ErrorCode::kKindMismatch,
                "metapath " + spec.ToString() + " cannot start at " +
                    std::string(KindName(g.kind(start))) + " '" + g.id(start) + "'");
  }
  // Path counts per node, advanced one step at a time.
  std::vector<EntityCount> frontier = {{start, 1}};
  std::vector<int64_t> counts(g.node_count(), 0);
  std::vector<NodeIndex> touched;
  for (size_t step = 0; step + 1 < spec.length(); ++step) {
    auto [type, direction] = spec.Step(step);
    touched.clear();
    for (const EntityCount &entry : frontier) {
      for (NodeIndex next : g.Neighbors(entry.node, type, direction)) {
        if (counts[next.value] == 0) touched.push_back(next);
        counts[next.value] += entry.count;
      }
    }
    std::sort(touched.begin(), touched.end());
    frontier.clear();
    for (NodeIndex node : touched) {
      frontier.push_back({node, counts[node.value]});
      counts[node.value] = 0;
    }
  }
  return frontier;
}

std::vector<NodeIndex> MetapathTargets(const KnowledgeGraph &g, NodeIndex start,
                                       const MetapathSpec &spec) {
  std::vector<NodeIndex> out;
  for (const EntityCount &entry : MetapathTraverse(g, start, spec)) {
    out.push_back(entry.node);
  }
  return out;
}

std::vector<EntityCount> CoCitedWith(const KnowledgeGraph &g, NodeIndex paper) {
  if (g.kind(paper) != EntityKind::kPaper) {
    throw Error(ErrorCode::kKindMismatch, "'" + g.id(paper) + "' is not a paper");
  }
  std::map<NodeIndex, int64_t> counts;
  for (NodeIndex citer : g.Neighbors(paper, EdgeType::kCites, Direction::kReverse)) {
    for (NodeIndex other : g.Neighbors(citer, EdgeType::kCites, Direction::kForward)) {
      if (other != paper) ++counts[other];
    }
  }
  std::vector<EntityCount> out;
  for (const auto &[node, count] : counts) out.push_back({node, count});
  std::stable_sort(out.begin(), out.end(),
                   [](const EntityCount &a, const EntityCount &b) {
                     return a.count > b.count;
                   });
  return out;
}

}  // namespace scholargraph
