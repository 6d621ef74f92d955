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
#ifndef SCHOLARGRAPH_METRICS_H_
#define SCHOLARGRAPH_METRICS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scholargraph/graph.h"

namespace scholargraph {

struct YearCount {
  int year = 0;
  int64_t count = 0;
  bool operator==(const YearCount &) const = default;
};

// Counts per year; years strictly increasing, counts positive.
class YearSeries {
 public:
  YearSeries() = default;
  // Builds a series from one year per item.
  static YearSeries FromYears(std::span<const int> years);

  const std::vector<YearCount> &entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  int64_t cumulative() const;
  // Count for one year, 0 if absent.
  int64_t at(int year) const;
  // Running totals per year.
  std::vector<YearCount> Cumulative() const;

  bool operator==(const YearSeries &) const = default;

 private:
  std::vector<YearCount> entries_;
};

// Citations received per citing-paper year. Throws Error(kKindMismatch)
// for non-paper nodes.
YearSeries CitationSeries(const KnowledgeGraph &g, NodeIndex paper);

// Papers per year for an author or venue.
YearSeries PublicationSeries(const KnowledgeGraph &g, NodeIndex entity);

// Citations received per year by all papers of an author or venue.
YearSeries ReceivedCitationSeries(const KnowledgeGraph &g, NodeIndex entity);

// Papers of an author or venue in index order.
std::vector<NodeIndex> PapersOf(const KnowledgeGraph &g, NodeIndex entity);

// Largest h such that h counts are >= h.
int64_t HIndexOfCounts(std::vector<int64_t> counts);

// h-index restricted to papers published up to the given year and
// citations from papers published up to that year.
int64_t HIndex(const KnowledgeGraph &g, NodeIndex author,
               std::optional<int> up_to_year = std::nullopt);

// Two-year impact factor kept as an exact ratio.
struct ImpactFactor {
  int year = 0;
  int64_t citations = 0;  // received in year from window papers
  int64_t papers = 0;     // published in year-1 or year-2
  bool empty_window = false;

  double value() const {
    return papers == 0 ? 0.0 : static_cast<double>(citations) / papers;
  }
};

ImpactFactor ComputeImpactFactor(const KnowledgeGraph &g, NodeIndex venue,
                                 int year);

struct Collaborators {
  std::vector<EntityCount> authors;  // joint-paper count desc, then id
  double mean_joint_papers = 0.0;    // 0 when there are no collaborators
};

Collaborators CollaboratorsOf(const KnowledgeGraph &g, NodeIndex author);

inline constexpr const char *kUnlabeledField = "unlabeled";

// year -> field id -> paper count over the author's papers. Papers
// without fields count under kUnlabeledField.
using TopicDistribution = std::map<int, std::map<std::string, int64_t>>;

TopicDistribution TopicDistributionOf(const KnowledgeGraph &g, NodeIndex author);

struct VenueSummary {
  int recently_held_year = 0;
  // Venues sharing at least one author, by shared-author count desc.
  std::vector<EntityCount> collaborating_venues;
};

VenueSummary SummarizeVenue(const KnowledgeGraph &g, NodeIndex venue);

}  // namespace scholargraph

#endif  // SCHOLARGRAPH_METRICS_H_
