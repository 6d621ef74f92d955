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
#ifndef SCHOLARGRAPH_NLQ_H_
#define SCHOLARGRAPH_NLQ_H_

#include <filesystem>
#include <map>
#include <optional>
#include <regex>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nlohmann/json_fwd.hpp"
#include "scholargraph/citetext.h"
#include "scholargraph/graph.h"
#include "scholargraph/metrics.h"

namespace scholargraph {

enum class QueryType { kBinary, kStatistical, kList };
enum class StatSubtype { kNone, kTemporal, kCumulative, kComparison };

// Statistical queries always carry a subtype; the others never do.
struct QueryClass {
  QueryType type = QueryType::kBinary;
  StatSubtype subtype = StatSubtype::kNone;

  // "binary", "statistical/temporal", "list", ...
  std::string ToString() const;
  bool operator==(const QueryClass &) const = default;
};

std::string_view QueryTypeName(QueryType type);
std::string_view StatSubtypeName(StatSubtype subtype);

// A typed slot such as $A, $A1 or $V. The kind is the first letter.
struct Slot {
  std::string name;  // "A1"
  EntityKind kind;
  bool operator==(const Slot &) const = default;
};

// Parses "$A1" or "A1". Throws Error(kConfig) for unknown kinds.
Slot ParseSlot(std::string_view text);

struct SlotPath {
  std::string slot;
  MetapathSpec metapath;
};

enum class Combine { kIntersect, kCompare };
enum class ResultFilter { kNone, kPositiveSentiment };

// How a template's bound entities become an answer: every slot walks its
// metapath; the terminal sets are intersected (or compared side by side)
// and optionally filtered.
struct PlanSkeleton {
  std::vector<SlotPath> paths;
  Combine combine = Combine::kIntersect;
  ResultFilter filter = ResultFilter::kNone;
};

// Phrasing grammar: words, "(a|b c)" alternatives, "[x]" optional parts
// and "$SLOT" placeholders, separated by single spaces.
struct QueryTemplate {
  std::string id;
  QueryClass query_class;
  std::vector<std::string> phrasings;
  PlanSkeleton plan;
  int table_row = 0;        // representative-query row, 0 if none
  std::string example;      // canonical phrasing with slots
  std::vector<Slot> slots;  // in plan order
};

// Every surface string a phrasing produces, in grammar order.
std::vector<std::string> ExpandPhrasing(std::string_view phrasing);

// Query class cue rules applied to normalized text.
std::optional<QueryType> LeadingQueryType(std::string_view normalized_text);
StatSubtype CueSubtype(std::string_view normalized_text,
                       std::span<const Slot> slots);

// Collapses whitespace and drops trailing "?", "." and "!".
std::string NormalizeQueryText(std::string_view text);

struct CatalogEntry {
  std::string template_id;
  std::string text;
};

struct SlotMention {
  Slot slot;
  std::string span;
};

struct ClassifiedQuery {
  QueryClass query_class;
  std::string template_id;
  std::vector<SlotMention> mentions;  // in phrasing order
  std::string normalized_text;
};

// Validated, compiled set of query templates.
class TemplateCatalog {
 public:
  // Throws Error(kConfig) when a template has no phrasings, a phrasing's
  // slots differ from its plan, a statistical phrasing's cues disagree
  // with its subtype, or two templates produce the same query text.
  explicit TemplateCatalog(std::vector<QueryTemplate> templates);

  static TemplateCatalog FromJson(const nlohmann::json &config);
  static TemplateCatalog Parse(std::string_view json_text);
  static TemplateCatalog Load(const std::filesystem::path &path);
  static const TemplateCatalog &Default();

  const std::vector<QueryTemplate> &templates() const { return templates_; }
  // Throws Error(kNotFound).
  const QueryTemplate &Get(std::string_view id) const;

  // All distinct supported queries: templates x phrasings x orderings of
  // same-kind slots.
  const std::vector<CatalogEntry> &entries() const { return entries_; }

  // Classifies by leading interrogative, then by the most specific
  // matching phrasing (most literal characters). Throws
  // Error(kUnsupportedQuery) when nothing matches.
  ClassifiedQuery Classify(std::string_view text) const;

 private:
  struct CompiledPhrasing {
    size_t template_index;
    std::regex pattern;
    std::vector<Slot> slot_order;
  };

  std::vector<QueryTemplate> templates_;
  std::vector<CatalogEntry> entries_;
  std::vector<CompiledPhrasing> compiled_;
};

// Template x phrasing x slot-order expansion, deduplicated.
std::vector<CatalogEntry> ExpandTemplates(std::span<const QueryTemplate> templates);

ClassifiedQuery ClassifyQuery(std::string_view text, const TemplateCatalog &catalog);

inline constexpr double kLinkThreshold = 0.8;

// LCS(span, name) / |name|, case- and accent-insensitive.
double LinkScore(std::string_view span, std::string_view name);

using Bindings = std::map<std::string, NodeIndex>;  // slot name -> entity

// Binds each mention to the best-scoring entity of its kind (score, then
// longer name, then id). Same-kind slots bind distinct entities. Throws
// Error(kEntityNotFound) naming the slot when no candidate reaches
// kLinkThreshold.
Bindings LinkEntities(std::span<const SlotMention> mentions, const KnowledgeGraph &g);

struct ParsedQuery {
  QueryClass query_class;
  std::string template_id;
  Bindings bindings;
  std::string raw_text;
};

ParsedQuery ParseQuery(std::string_view text, const KnowledgeGraph &g,
                       const TemplateCatalog &catalog);

struct PlannedTraversal {
  std::string slot;
  NodeIndex start;
  MetapathSpec metapath;
};

struct QueryPlan {
  std::string template_id;
  QueryClass query_class;
  std::vector<PlannedTraversal> traversals;
  Combine combine = Combine::kIntersect;
  ResultFilter filter = ResultFilter::kNone;
};

QueryPlan PlanQuery(const ParsedQuery &parsed, const TemplateCatalog &catalog);

struct YesNoAnswer {
  bool value = false;
  int64_t evidence = 0;
};

struct ComparisonRow {
  std::string slot;
  NodeIndex entity;
  int64_t count = 0;
};

struct StatisticAnswer {
  StatSubtype subtype = StatSubtype::kCumulative;
  int64_t total = 0;                  // size of the result set
  YearSeries series;                  // temporal only
  std::vector<ComparisonRow> rows;    // comparison only
};

struct ListAnswer {
  std::vector<NodeIndex> entities;  // ranked
};

struct Answer {
  QueryClass query_class;
  std::string template_id;
  Bindings bindings;
  std::vector<std::string> metapaths;
  std::variant<YesNoAnswer, StatisticAnswer, ListAnswer> result;
};

Answer Execute(const QueryPlan &plan, const KnowledgeGraph &g,
               const SentimentScorer &scorer);

// classify -> link -> plan -> execute. Errors keep their code and gain a
// stage prefix ("classify: ", "link: ").
Answer AnswerQuery(std::string_view text, const KnowledgeGraph &g,
                   const TemplateCatalog &catalog, const SentimentScorer &scorer);

// Replaces each slot placeholder with the given surface text.
std::string InstantiateExample(std::string_view pattern,
                               const std::map<std::string, std::string> &slot_text);

}  // namespace scholargraph

#endif  // SCHOLARGRAPH_NLQ_H_
