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
#ifndef SCHOLARGRAPH_GRAPH_H_
#define SCHOLARGRAPH_GRAPH_H_

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scholargraph/ingest.h"

namespace scholargraph {

// The four entity kinds of the scholarly graph, in node-index order.
enum class EntityKind : uint8_t { kAuthor, kPaper, kVenue, kField };

inline constexpr std::array<EntityKind, 4> kAllKinds = {
    EntityKind::kAuthor, EntityKind::kPaper, EntityKind::kVenue,
    EntityKind::kField};

// "author", "paper", "venue", "field".
std::string_view KindName(EntityKind kind);
// 'A', 'P', 'V', 'F'.
char KindLetter(EntityKind kind);
// Accepts either the name or the letter, case-insensitively.
std::optional<EntityKind> ParseKind(std::string_view text);

// Edge types and their stored orientation:
//   authored      author -> paper
//   published_at  paper  -> venue
//   in_field      paper  -> field
//   cites         paper  -> paper (citing -> cited)
enum class EdgeType : uint8_t { kAuthored, kPublishedAt, kInField, kCites };

inline constexpr std::array<EdgeType, 4> kAllEdgeTypes = {
    EdgeType::kAuthored, EdgeType::kPublishedAt, EdgeType::kInField,
    EdgeType::kCites};

std::string_view EdgeTypeName(EdgeType type);
std::optional<EdgeType> ParseEdgeType(std::string_view text);
EntityKind EdgeSource(EdgeType type);
EntityKind EdgeTarget(EdgeType type);

enum class Direction : uint8_t { kForward, kReverse };

// Dense node handle. Indices are grouped by kind (authors first) and sorted
// by id within a kind, so index order is (kind, id) order.
struct NodeIndex {
  uint32_t value = 0;
  auto operator<=>(const NodeIndex &) const = default;
};

struct NodeInfo {
  EntityKind kind;
  std::string id;
  std::string display;
  std::optional<int> year;  // papers only
};

struct IncomingContext {
  NodeIndex citing;
  std::string sentence;
  uint32_t position = 0;  // index among the citing paper's contexts
};

struct PaperProperties {
  std::vector<NodeIndex> byline;  // authors in listed order
  std::string abstract;
  std::vector<std::string> urls;
  std::vector<std::string> affiliations;
};

// A node paired with an aggregate count (co-citations, joint papers, ...).
struct EntityCount {
  NodeIndex node;
  int64_t count = 0;
  bool operator==(const EntityCount &) const = default;
};

// Immutable heterogeneous graph over authors, papers, venues and fields.
// All accessors are const and safe to call concurrently.
class KnowledgeGraph {
 public:
  KnowledgeGraph() = default;

  size_t node_count() const { return nodes_.size(); }
  size_t node_count(EntityKind kind) const { return by_kind(kind).size(); }
  size_t edge_count(EdgeType type) const;
  size_t edge_count() const;

  std::optional<NodeIndex> Find(EntityKind kind, std::string_view id) const;
  // Throws Error(kNotFound).
  NodeIndex Require(EntityKind kind, std::string_view id) const;

  bool Contains(NodeIndex node) const { return node.value < nodes_.size(); }
  // Throws Error(kNotFound) for out-of-range handles.
  const NodeInfo &node(NodeIndex node) const;
  EntityKind kind(NodeIndex node) const { return this->node(node).kind; }
  const std::string &id(NodeIndex node) const { return this->node(node).id; }

  // Nodes of one kind in id order.
  std::span<const NodeIndex> nodes(EntityKind kind) const {
    return by_kind(kind);
  }

  // Adjacent nodes in index order. Forward follows the stored orientation
  // of the edge type. Throws Error(kNotFound) for unknown handles and
  // Error(kKindMismatch) when the node cannot be an endpoint on that side.
  std::span<const NodeIndex> Neighbors(NodeIndex node, EdgeType type,
                                       Direction direction) const;

  // Paper accessors; throw Error(kKindMismatch) for non-paper nodes.
  int year(NodeIndex paper) const;
  const PaperProperties &paper_properties(NodeIndex paper) const;
  // Sorted by (citing id, position).
  std::span<const IncomingContext> incoming_contexts(NodeIndex paper) const;
  // Contexts written by this paper, grouped by cited paper in position order.
  std::vector<std::pair<NodeIndex, std::string>> outgoing_contexts(
      NodeIndex paper) const;
  // Venue of a paper.
  NodeIndex venue_of(NodeIndex paper) const;

  // Convenience over Neighbors(paper, kCites, kReverse).size().
  int64_t citation_count(NodeIndex paper) const;

  std::optional<int> min_year() const { return min_year_; }
  std::optional<int> max_year() const { return max_year_; }

 private:
  friend KnowledgeGraph BuildGraph(std::span<const PaperRecord> records);

  // Compressed adjacency for one (edge type, direction) pair.
  struct Adjacency {
    std::vector<uint32_t> offsets;  // node_count + 1 entries
    std::vector<NodeIndex> targets;
  };

  std::span<const NodeIndex> by_kind(EntityKind kind) const {
    return kind_nodes_[static_cast<size_t>(kind)];
  }
  size_t paper_slot(NodeIndex paper) const;
  const Adjacency &adjacency(EdgeType type, Direction direction) const {
    return adjacency_[static_cast<size_t>(type) * 2 +
                      static_cast<size_t>(direction)];
  }

  std::vector<NodeInfo> nodes_;
  std::array<std::vector<NodeIndex>, 4> kind_nodes_;
  std::array<Adjacency, 8> adjacency_;
  // Indexed by paper_slot().
  std::vector<PaperProperties> paper_properties_;
  std::vector<std::vector<IncomingContext>> incoming_contexts_;
  std::optional<int> min_year_;
  std::optional<int> max_year_;
};

// Builds the graph. Throws Error(kInvalidArgument) for duplicate paper ids,
// papers without authors or venue, self-citations, and cited ids or
// contexts that do not refer to a paper in the same record set.
KnowledgeGraph BuildGraph(std::span<const PaperRecord> records);

// Id-based neighbor lookup; throws Error(kNotFound) for unknown ids.
std::vector<NodeIndex> Neighbors(const KnowledgeGraph &g, EntityKind kind,
                                 std::string_view id, EdgeType type,
                                 Direction direction);

// An ordered list of entity kinds where every adjacent pair is joined by an
// edge type: A-P, P-V, P-F (either order) or P-P over cites, whose
// direction is fixed for the whole path.
class MetapathSpec {
 public:
  // Throws Error(kInvalidMetapath).
  explicit MetapathSpec(std::vector<EntityKind> kinds,
                        Direction cites_direction = Direction::kForward);

  // Parses "V-A-P", "V->A->P" or "VAP". Strict: throws for pairs that have
  // no edge between them.
  static MetapathSpec Parse(std::string_view text,
                            Direction cites_direction = Direction::kForward);

  // Reads the compact notation, where a step between two non-paper kinds
  // passes through the papers linking them: V-A-P becomes V-P-A-P.
  static MetapathSpec Expand(std::vector<EntityKind> compact,
                             Direction cites_direction = Direction::kForward);
  static MetapathSpec ParseCompact(
      std::string_view text, Direction cites_direction = Direction::kForward);

  static bool IsValidStep(EntityKind from, EntityKind to);

  const std::vector<EntityKind> &kinds() const { return kinds_; }
  Direction cites_direction() const { return cites_direction_; }
  size_t length() const { return kinds_.size(); }

  // Edge and direction walked from kinds()[i] to kinds()[i + 1].
  std::pair<EdgeType, Direction> Step(size_t i) const;

  // "V-P-A-P"; P-P steps are written "P>P" (citing to cited) or "P<P".
  std::string ToString() const;

  bool operator==(const MetapathSpec &) const = default;

 private:
  std::vector<EntityKind> kinds_;
  Direction cites_direction_;
};

// Terminal nodes of all paths matching the spec, with the number of
// distinct paths reaching each, sorted by node. Throws Error(kKindMismatch)
// when the start node's kind differs from the first kind of the spec.
std::vector<EntityCount> MetapathTraverse(const KnowledgeGraph &g,
                                          NodeIndex start,
                                          const MetapathSpec &spec);

// Set projection of MetapathTraverse.
std::vector<NodeIndex> MetapathTargets(const KnowledgeGraph &g,
                                       NodeIndex start,
                                       const MetapathSpec &spec);

// Papers co-cited with the given paper: for each citer, every other paper
// in its reference list scores one. Sorted by count desc, then id.
// Throws Error(kKindMismatch) for non-paper nodes.
std::vector<EntityCount> CoCitedWith(const KnowledgeGraph &g, NodeIndex paper);

}  // namespace scholargraph

#endif  // SCHOLARGRAPH_GRAPH_H_
