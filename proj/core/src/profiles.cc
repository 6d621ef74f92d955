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
#include "scholargraph/profiles.h"

#include <algorithm>
#include <set>

#include "scholargraph/error.h"
#include "scholargraph/text.h"

namespace scholargraph {
namespace {

void RequireKind(const KnowledgeGraph &g, NodeIndex node, EntityKind kind) {
  if (g.kind(node) != kind) {
    throw Error(ErrorCode::kKindMismatch, "'" + g.id(node) + "' is not a " +
                                              std::string(KindName(kind)));
  }
}

bool ContainsAll(const std::vector<std::string> &haystack,
                 const std::vector<std::string> &needles) {
  if (needles.empty()) return false;
  return std::all_of(needles.begin(), needles.end(), [&](const std::string &n) {
    return std::find(haystack.begin(), haystack.end(), n) != haystack.end();
  });
}

// Whole-token phrase containment on normalized strings.
bool ContainsPhrase(const std::string &normalized, const std::string &phrase) {
  if (phrase.empty()) return false;
  return (" " + normalized + " ").find(" " + phrase + " ") != std::string::npos;
}

}  // namespace

int64_t Popularity(const KnowledgeGraph &g, NodeIndex node) {
  EntityKind kind = g.kind(node);
  if (kind == EntityKind::kPaper) return g.citation_count(node);
  std::span<const NodeIndex> papers =
      kind == EntityKind::kAuthor
          ? g.Neighbors(node, EdgeType::kAuthored, Direction::kForward)
      : kind == EntityKind::kVenue
          ? g.Neighbors(node, EdgeType::kPublishedAt, Direction::kReverse)
          : g.Neighbors(node, EdgeType::kInField, Direction::kReverse);
  int64_t total = 0;
  for (NodeIndex paper : papers) total += g.citation_count(paper);
  return total;
}

std::vector<NodeIndex> RankPapers(const KnowledgeGraph &g,
                                  std::span<const NodeIndex> papers) {
  for (NodeIndex p : papers) RequireKind(g, p, EntityKind::kPaper);
  return RankEntities(g, papers);
}

std::vector<NodeIndex> RankEntities(const KnowledgeGraph &g,
                                    std::span<const NodeIndex> nodes) {
  struct Key {
    EntityKind kind;
    int64_t popularity;
    int year;
    NodeIndex node;
  };
  std::vector<Key> keys;
  keys.reserve(nodes.size());
  for (NodeIndex n : nodes) {
    EntityKind kind = g.kind(n);
    keys.push_back({kind, Popularity(g, n),
                    kind == EntityKind::kPaper ? g.year(n) : 0, n});
  }
  // Node index order within a kind is id order.
  std::sort(keys.begin(), keys.end(), [](const Key &a, const Key &b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.popularity != b.popularity) return a.popularity > b.popularity;
    if (a.year != b.year) return a.year > b.year;
    return a.node < b.node;
  });
  std::vector<NodeIndex> out;
  out.reserve(keys.size());
  for (const Key &k : keys) out.push_back(k.node);
  return out;
}

PaperProfile BuildPaperProfile(const KnowledgeGraph &g, NodeIndex paper,
                               const SentimentScorer &scorer,
                               const StopwordList &stopwords) {
  RequireKind(g, paper, EntityKind::kPaper);
  const PaperProperties &props = g.paper_properties(paper);
  PaperProfile profile;
  profile.paper = paper;
  profile.title = g.node(paper).display;
  profile.authors = props.byline;
  profile.affiliations = props.affiliations;
  profile.abstract = props.abstract;
  profile.year = g.year(paper);
  profile.venue = g.venue_of(paper);
  auto fields = g.Neighbors(paper, EdgeType::kInField, Direction::kForward);
  profile.fields.assign(fields.begin(), fields.end());
  profile.citations = CitationSeries(g, paper);
  profile.cumulative_citations = profile.citations.cumulative();
  profile.references =
      RankPapers(g, g.Neighbors(paper, EdgeType::kCites, Direction::kForward));
  profile.citers =
      RankPapers(g, g.Neighbors(paper, EdgeType::kCites, Direction::kReverse));
  profile.co_cited = CoCitedWith(g, paper);
  profile.urls = props.urls;
  profile.sentiment = AggregateSentiment(g, paper, scorer);
  profile.summary = SummarizeIncoming(g, paper, stopwords);
  return profile;
}

AuthorProfile BuildAuthorProfile(const KnowledgeGraph &g, NodeIndex author) {
  RequireKind(g, author, EntityKind::kAuthor);
  AuthorProfile profile;
  profile.author = author;
  profile.name = g.node(author).display;
  profile.publications = PublicationSeries(g, author);
  profile.citations = ReceivedCitationSeries(g, author);
  profile.collaborators = CollaboratorsOf(g, author);
  profile.h_index = HIndex(g, author);
  profile.topics = TopicDistributionOf(g, author);
  auto papers = g.Neighbors(author, EdgeType::kAuthored, Direction::kForward);
  profile.papers = RankPapers(g, papers);

  std::set<std::string> seen;
  for (NodeIndex paper : papers) {
    const PaperProperties &props = g.paper_properties(paper);
    if (props.affiliations.size() != props.byline.size()) continue;
    for (size_t i = 0; i < props.byline.size(); ++i) {
      if (props.byline[i] == author && !props.affiliations[i].empty() &&
          seen.insert(props.affiliations[i]).second) {
        profile.affiliations.push_back(props.affiliations[i]);
      }
    }
  }

  if (!profile.publications.empty() && g.max_year()) {
    for (int year = profile.publications.entries().front().year;
         year <= *g.max_year(); ++year) {
      profile.h_index_by_year.push_back({year, HIndex(g, author, year)});
    }
  }
  return profile;
}

VenueProfile BuildVenueProfile(const KnowledgeGraph &g, NodeIndex venue) {
  RequireKind(g, venue, EntityKind::kVenue);
  VenueProfile profile;
  profile.venue = venue;
  profile.name = g.node(venue).display;
  profile.publications = PublicationSeries(g, venue);
  profile.citations = ReceivedCitationSeries(g, venue);
  VenueSummary summary = SummarizeVenue(g, venue);
  profile.recently_held_year = summary.recently_held_year;
  profile.collaborating_venues = std::move(summary.collaborating_venues);
  if (!profile.publications.empty() && g.max_year()) {
    for (int year = profile.publications.entries().front().year + 1;
         year <= *g.max_year(); ++year) {
      profile.impact_factors.push_back(ComputeImpactFactor(g, venue, year));
    }
  }
  std::vector<NodeIndex> ranked = RankPapers(
      g, g.Neighbors(venue, EdgeType::kPublishedAt, Direction::kReverse));
  if (ranked.size() > kTopPapers) ranked.resize(kTopPapers);
  profile.top_papers = std::move(ranked);
  return profile;
}

std::vector<SearchHit> KeywordSearch(const KnowledgeGraph &g, std::string_view text,
                                     std::optional<EntityKind> kind,
                                     const StopwordList &stopwords) {
  const std::string query = NormalizeName(text);
  if (query.empty()) return {};
  std::vector<std::string> all_tokens = Tokenize(text);
  std::vector<std::string> content_tokens;
  for (const std::string &t : all_tokens) {
    if (!stopwords.contains(t)) content_tokens.push_back(t);
  }
  if (content_tokens.empty()) content_tokens = all_tokens;
  auto wanted = [&](EntityKind k) { return !kind || *kind == k; };

  std::vector<SearchHit> hits;
  auto append_ranked = [&](std::vector<NodeIndex> matched) {
    for (NodeIndex n : RankEntities(g, matched)) hits.push_back({n, Popularity(g, n)});
  };

  if (wanted(EntityKind::kVenue)) {
    std::vector<NodeIndex> matched;
    for (NodeIndex v : g.nodes(EntityKind::kVenue)) {
      if (NormalizeName(g.id(v)) == query || NormalizeName(g.node(v).display) == query) {
        matched.push_back(v);
      }
    }
    append_ranked(std::move(matched));
  }
  if (wanted(EntityKind::kAuthor)) {
    std::vector<NodeIndex> matched;
    for (NodeIndex a : g.nodes(EntityKind::kAuthor)) {
      const std::string &name = g.node(a).display;
      if (NormalizeName(name) == query || ContainsAll(Tokenize(name), all_tokens)) {
        matched.push_back(a);
      }
    }
    append_ranked(std::move(matched));
  }
  if (wanted(EntityKind::kPaper)) {
    std::vector<NodeIndex> matched;
    for (NodeIndex p : g.nodes(EntityKind::kPaper)) {
      const std::string &title = g.node(p).display;
      if (ContainsPhrase(NormalizeName(title), query) ||
          ContainsAll(Tokenize(title), content_tokens)) {
        matched.push_back(p);
      }
    }
    append_ranked(std::move(matched));
  }
  return hits;
}

std::optional<NodeIndex> ResolveEntity(const KnowledgeGraph &g, EntityKind kind,
                                       std::string_view id_or_name,
                                       const StopwordList &stopwords) {
  if (auto found = g.Find(kind, id_or_name)) return found;
  const std::string key = NormalizeName(id_or_name);
  for (NodeIndex n : g.nodes(kind)) {
    if (NormalizeName(g.node(n).display) == key) return n;
  }
  std::vector<SearchHit> hits = KeywordSearch(g, id_or_name, kind, stopwords);
  if (hits.empty()) return std::nullopt;
  return hits.front().node;
}

}  // namespace scholargraph
