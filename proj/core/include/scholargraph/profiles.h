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
#ifndef SCHOLARGRAPH_PROFILES_H_
#define SCHOLARGRAPH_PROFILES_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scholargraph/citetext.h"
#include "scholargraph/graph.h"
#include "scholargraph/metrics.h"

namespace scholargraph {

// Popularity: citation count for papers, citations received by all of
// their papers for authors, venues and fields.
int64_t Popularity(const KnowledgeGraph &g, NodeIndex node);

// Orders papers by citation count desc, then year desc, then id asc.
// Throws Error(kKindMismatch) if any node is not a paper.
std::vector<NodeIndex> RankPapers(const KnowledgeGraph &g,
                                  std::span<const NodeIndex> papers);

// Papers as RankPapers; other kinds by popularity desc, then id asc.
// Mixed kinds are grouped in kind order.
std::vector<NodeIndex> RankEntities(const KnowledgeGraph &g,
                                    std::span<const NodeIndex> nodes);

struct PaperProfile {
  NodeIndex paper;
  std::string title;
  std::vector<NodeIndex> authors;  // byline order
  std::vector<std::string> affiliations;
  std::string abstract;
  int year = 0;
  NodeIndex venue;
  std::vector<NodeIndex> fields;
  YearSeries citations;
  int64_t cumulative_citations = 0;
  std::vector<NodeIndex> references;  // ranked
  std::vector<NodeIndex> citers;      // ranked
  std::vector<EntityCount> co_cited;
  std::vector<std::string> urls;
  SentimentAggregate sentiment;
  CitationSummary summary;
};

struct AuthorProfile {
  NodeIndex author;
  std::string name;
  std::vector<std::string> affiliations;
  YearSeries publications;
  YearSeries citations;
  Collaborators collaborators;
  int64_t h_index = 0;
  // h-index as of each year from the first publication to the newest
  // paper in the graph.
  std::vector<YearCount> h_index_by_year;
  TopicDistribution topics;
  std::vector<NodeIndex> papers;  // ranked
};

struct VenueProfile {
  NodeIndex venue;
  std::string name;
  YearSeries publications;
  YearSeries citations;
  // One entry per year from the first publication year + 1 to the newest
  // paper in the graph.
  std::vector<ImpactFactor> impact_factors;
  int recently_held_year = 0;
  std::vector<EntityCount> collaborating_venues;
  std::vector<NodeIndex> top_papers;  // ranked, at most kTopPapers
};

inline constexpr size_t kTopPapers = 10;

// Profile builders throw Error(kNotFound) / Error(kKindMismatch).
PaperProfile BuildPaperProfile(const KnowledgeGraph &g, NodeIndex paper,
                               const SentimentScorer &scorer,
                               const StopwordList &stopwords);
AuthorProfile BuildAuthorProfile(const KnowledgeGraph &g, NodeIndex author);
VenueProfile BuildVenueProfile(const KnowledgeGraph &g, NodeIndex venue);

struct SearchHit {
  NodeIndex node;
  int64_t popularity = 0;
};

// Entity keyword search over papers (title phrase or all title tokens),
// authors (full, first or last name) and venues (name). Hits are grouped
// venues, authors, papers, each group ranked with RankEntities. Fields
// are not searchable.
std::vector<SearchHit> KeywordSearch(const KnowledgeGraph &g, std::string_view text,
                                     std::optional<EntityKind> kind,
                                     const StopwordList &stopwords);

// Resolves an id, or failing that a name, of the given kind.
std::optional<NodeIndex> ResolveEntity(const KnowledgeGraph &g, EntityKind kind,
                                       std::string_view id_or_name,
                                       const StopwordList &stopwords);

}  // namespace scholargraph

#endif  // SCHOLARGRAPH_PROFILES_H_
