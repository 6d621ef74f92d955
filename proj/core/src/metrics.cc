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
#include "scholargraph/metrics.h"

#include <algorithm>
#include <set>

#include "scholargraph/error.h"

namespace scholargraph {
namespace {

void RequireKind(const KnowledgeGraph &g, NodeIndex node, EntityKind kind) {
  if (g.kind(node) != kind) {
    throw Error(ErrorCode::kKindMismatch, "'" + g.id(node) + "' is not a " +
                                              std::string(KindName(kind)));
  }
}

void RequireAuthorOrVenue(const KnowledgeGraph &g, NodeIndex node) {
  EntityKind kind = g.kind(node);
  if (kind != EntityKind::kAuthor && kind != EntityKind::kVenue) {
    throw Error(ErrorCode::kKindMismatch,
                "'" + g.id(node) + "' is neither an author nor a venue");
  }
}

std::vector<EntityCount> SortedByCount(const std::map<NodeIndex, int64_t> &counts) {
  std::vector<EntityCount> out;
  for (const auto &[node, count] : counts) out.push_back({node, count});
  std::stable_sort(out.begin(), out.end(),
                   [](const EntityCount &a, const EntityCount &b) {
                     return a.count > b.count;
                   });
  return out;
}

}  // namespace

YearSeries YearSeries::FromYears(std::span<const int> years) {
  std::map<int, int64_t> counts;
  for (int year : years) ++counts[year];
  YearSeries series;
  for (const auto &[year, count] : counts) series.entries_.push_back({year, count});
  return series;
}

int64_t YearSeries::cumulative() const {
  int64_t total = 0;
  for (const YearCount &e : entries_) total += e.count;
  return total;
}

int64_t YearSeries::at(int year) const {
  for (const YearCount &e : entries_) {
    if (e.year == year) return e.count;
  }
  return 0;
}

std::vector<YearCount> YearSeries::Cumulative() const {
  std::vector<YearCount> out;
  int64_t running = 0;
  for (const YearCount &e : entries_) {
    running += e.count;
    out.push_back({e.year, running});
  }
  return out;
}

YearSeries CitationSeries(const KnowledgeGraph &g, NodeIndex paper) {
  RequireKind(g, paper, EntityKind::kPaper);
  std::vector<int> years;
  for (NodeIndex citer : g.Neighbors(paper, EdgeType::kCites, Direction::kReverse)) {
    years.push_back(g.year(citer));
  }
  return YearSeries::FromYears(years);
}

std::vector<NodeIndex> PapersOf(const KnowledgeGraph &g, NodeIndex entity) {
  RequireAuthorOrVenue(g, entity);
  std::span<const NodeIndex> papers =
      g.kind(entity) == EntityKind::kAuthor
          ? g.Neighbors(entity, EdgeType::kAuthored, Direction::kForward)
          : g.Neighbors(entity, EdgeType::kPublishedAt, Direction::kReverse);
  return {papers.begin(), papers.end()};
}

YearSeries PublicationSeries(const KnowledgeGraph &g, NodeIndex entity) {
  std::vector<int> years;
  for (NodeIndex paper : PapersOf(g, entity)) years.push_back(g.year(paper));
  return YearSeries::FromYears(years);
}

YearSeries ReceivedCitationSeries(const KnowledgeGraph &g, NodeIndex entity) {
  std::vector<int> years;
  for (NodeIndex paper : PapersOf(g, entity)) {
    for (NodeIndex citer : g.Neighbors(paper, EdgeType::kCites, Direction::kReverse)) {
      years.push_back(g.year(citer));
    }
  }
  return YearSeries::FromYears(years);
}

int64_t HIndexOfCounts(std::vector<int64_t> counts) {
  std::sort(counts.begin(), counts.end(), std::greater<>());
  int64_t h = 0;
  while (h < static_cast<int64_t>(counts.size()) && counts[h] >= h + 1) ++h;
  return h;
}

int64_t HIndex(const KnowledgeGraph &g, NodeIndex author,
               std::optional<int> up_to_year) {
  RequireKind(g, author, EntityKind::kAuthor);
  std::vector<int64_t> counts;
  for (NodeIndex paper : g.Neighbors(author, EdgeType::kAuthored, Direction::kForward)) {
    if (up_to_year && g.year(paper) > *up_to_year) continue;
    int64_t count = 0;
    for (NodeIndex citer : g.Neighbors(paper, EdgeType::kCites, Direction::kReverse)) {
      if (!up_to_year || g.year(citer) <= *up_to_year) ++count;
    }
    counts.push_back(count);
  }
  return HIndexOfCounts(std::move(counts));
}

ImpactFactor ComputeImpactFactor(const KnowledgeGraph &g, NodeIndex venue,
                                 int year) {
  RequireKind(g, venue, EntityKind::kVenue);
  ImpactFactor result;
  result.year = year;
  for (NodeIndex paper : g.Neighbors(venue, EdgeType::kPublishedAt, Direction::kReverse)) {
    int published = g.year(paper);
    if (published != year - 1 && published != year - 2) continue;
    ++result.papers;
    for (NodeIndex citer : g.Neighbors(paper, EdgeType::kCites, Direction::kReverse)) {
      if (g.year(citer) == year) ++result.citations;
    }
  }
  result.empty_window = result.papers == 0;
  return result;
}

Collaborators CollaboratorsOf(const KnowledgeGraph &g, NodeIndex author) {
  RequireKind(g, author, EntityKind::kAuthor);
  std::map<NodeIndex, int64_t> joint;
  for (NodeIndex paper : g.Neighbors(author, EdgeType::kAuthored, Direction::kForward)) {
    for (NodeIndex other : g.Neighbors(paper, EdgeType::kAuthored, Direction::kReverse)) {
      if (other != author) ++joint[other];
    }
  }
  Collaborators result;
  result.authors = SortedByCount(joint);
  if (!result.authors.empty()) {
    int64_t total = 0;
    for (const EntityCount &c : result.authors) total += c.count;
    result.mean_joint_papers =
        static_cast<double>(total) / static_cast<double>(result.authors.size());
  }
  return result;
}

TopicDistribution TopicDistributionOf(const KnowledgeGraph &g, NodeIndex author) {
  RequireKind(g, author, EntityKind::kAuthor);
  TopicDistribution distribution;
  for (NodeIndex paper : g.Neighbors(author, EdgeType::kAuthored, Direction::kForward)) {
    auto &bucket = distribution[g.year(paper)];
    auto fields = g.Neighbors(paper, EdgeType::kInField, Direction::kForward);
    if (fields.empty()) {
      ++bucket[kUnlabeledField];
      continue;
    }
    for (NodeIndex field : fields) ++bucket[g.id(field)];
  }
  return distribution;
}

VenueSummary SummarizeVenue(const KnowledgeGraph &g, NodeIndex venue) {
  RequireKind(g, venue, EntityKind::kVenue);
  VenueSummary summary;
  std::set<NodeIndex> authors;
  for (NodeIndex paper : g.Neighbors(venue, EdgeType::kPublishedAt, Direction::kReverse)) {
    summary.recently_held_year = std::max(summary.recently_held_year, g.year(paper));
    for (NodeIndex a : g.Neighbors(paper, EdgeType::kAuthored, Direction::kReverse)) {
      authors.insert(a);
    }
  }
  // Each shared author counts once per other venue.
  std::map<NodeIndex, int64_t> shared;
  for (NodeIndex author : authors) {
    std::set<NodeIndex> venues;
    for (NodeIndex paper : g.Neighbors(author, EdgeType::kAuthored, Direction::kForward)) {
      venues.insert(g.venue_of(paper));
    }
    for (NodeIndex other : venues) {
      if (other != venue) ++shared[other];
    }
  }
  summary.collaborating_venues = SortedByCount(shared);
  return summary;
}

}  // namespace scholargraph
