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
#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "scholargraph/error.h"
#include "scholargraph/profiles.h"
#include "testing/fixtures.h"

namespace scholargraph {
namespace {

using ::scholargraph::testing::Ids;
using ::scholargraph::testing::Mini;
using ::scholargraph::testing::Node;

using Strings = std::vector<std::string>;

NodeIndex Paper(const std::string &id) { return Node(Mini(), EntityKind::kPaper, id); }

Strings Hits(std::string_view text, std::optional<EntityKind> kind = std::nullopt) {
  std::vector<NodeIndex> nodes;
  for (const SearchHit &h : KeywordSearch(Mini(), text, kind, StopwordList::Default())) {
    nodes.push_back(h.node);
  }
  return Ids(Mini(), nodes);
}

TEST(RankTest, ByCitationsThenYearThenId) {
  std::vector<NodeIndex> papers = {Paper("P3"), Paper("P1"), Paper("P2")};
  EXPECT_EQ(Ids(Mini(), RankPapers(Mini(), papers)), (Strings{"P1", "P2", "P3"}));
  std::vector<NodeIndex> uncited = {Paper("P4"), Paper("P6"), Paper("P5")};
  EXPECT_EQ(Ids(Mini(), RankPapers(Mini(), uncited)), (Strings{"P6", "P4", "P5"}));
  std::vector<NodeIndex> one = {Paper("P2")};
  EXPECT_EQ(Ids(Mini(), RankPapers(Mini(), one)), Strings{"P2"});
  std::vector<NodeIndex> mixed = {Paper("P1"), Node(Mini(), EntityKind::kAuthor, "a1")};
  EXPECT_THROW(RankPapers(Mini(), mixed), Error);
}

TEST(RankTest, IsAPermutationAndDeterministic) {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    KnowledgeGraph g = testing::MakeRandomCorpus(seed).graph;
    std::vector<NodeIndex> papers(g.nodes(EntityKind::kPaper).begin(),
                                  g.nodes(EntityKind::kPaper).end());
    std::vector<NodeIndex> ranked = RankPapers(g, papers);
    std::mt19937 rng(seed);
    std::shuffle(papers.begin(), papers.end(), rng);
    EXPECT_EQ(RankPapers(g, papers), ranked);
    std::sort(papers.begin(), papers.end());
    std::vector<NodeIndex> sorted = ranked;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(sorted, papers);
    for (size_t i = 1; i < ranked.size(); ++i) {
      EXPECT_GE(g.citation_count(ranked[i - 1]), g.citation_count(ranked[i]));
    }
  }
}

TEST(ProfileTest, Paper) {
  PaperProfile p1 = BuildPaperProfile(Mini(), Paper("P1"), SentimentLexicon::Default(),
                                      StopwordList::Default());
  EXPECT_EQ(p1.title, "Fast Dependency Parsing for English");
  Strings citers = Ids(Mini(), p1.citers);
  std::sort(citers.begin(), citers.end());
  EXPECT_EQ(citers, (Strings{"P3", "P4", "P5"}));
  EXPECT_EQ(p1.co_cited, (std::vector<EntityCount>{{Paper("P2"), 2}, {Paper("P3"), 1}}));
  EXPECT_EQ(p1.cumulative_citations, 3);
  EXPECT_EQ(Mini().id(p1.venue), "ACL");
  EXPECT_EQ(Ids(Mini(), p1.fields), Strings{"parsing"});
  EXPECT_DOUBLE_EQ(p1.sentiment.mean, 1.0 / 3.0);
  EXPECT_EQ(p1.summary.sentences.size(), 3u);

  PaperProfile p2 = BuildPaperProfile(Mini(), Paper("P2"), SentimentLexicon::Default(),
                                      StopwordList::Default());
  EXPECT_EQ(p2.cumulative_citations, 2);
  EXPECT_EQ(Ids(Mini(), p2.authors), (Strings{"a1", "a2"}));
  EXPECT_EQ(p2.affiliations, (Strings{"Univ A", "Univ B"}));

  PaperProfile p6 = BuildPaperProfile(Mini(), Paper("P6"), SentimentLexicon::Default(),
                                      StopwordList::Default());
  EXPECT_TRUE(p6.citers.empty());
  EXPECT_TRUE(p6.summary.sentences.empty());
  EXPECT_THROW(BuildPaperProfile(Mini(), Node(Mini(), EntityKind::kVenue, "ACL"),
                                 SentimentLexicon::Default(), StopwordList::Default()),
               Error);
}

TEST(ProfileTest, Author) {
  AuthorProfile a1 = BuildAuthorProfile(Mini(), Node(Mini(), EntityKind::kAuthor, "a1"));
  EXPECT_EQ(a1.name, "Ann Smith");
  EXPECT_EQ(a1.h_index, 2);
  EXPECT_EQ(a1.publications.cumulative(), 3);
  EXPECT_EQ(a1.citations.cumulative(), 5);
  EXPECT_EQ(Ids(Mini(), a1.papers), (Strings{"P1", "P2", "P4"}));
  ASSERT_FALSE(a1.h_index_by_year.empty());
  EXPECT_EQ(a1.h_index_by_year.front(), (YearCount{2010, 0}));
  EXPECT_EQ(a1.h_index_by_year.back(), (YearCount{2013, 2}));
  EXPECT_EQ(a1.affiliations, Strings{"Univ A"});

  AuthorProfile a2 = BuildAuthorProfile(Mini(), Node(Mini(), EntityKind::kAuthor, "a2"));
  EXPECT_EQ(a2.collaborators.authors,
            (std::vector<EntityCount>{{Node(Mini(), EntityKind::kAuthor, "a1"), 1}}));

  PaperRecord solo;
  solo.paper_id = "X";
  solo.title = "Alone";
  solo.author_ids = {"a1"};
  solo.author_names = {"Solo"};
  solo.venue_id = "V";
  solo.year = 2000;
  KnowledgeGraph g = BuildGraph(std::vector<PaperRecord>{solo});
  AuthorProfile s = BuildAuthorProfile(g, g.Require(EntityKind::kAuthor, "a1"));
  EXPECT_EQ(s.h_index, 0);
  EXPECT_EQ(s.publications.cumulative(), 1);
}

TEST(ProfileTest, Venue) {
  VenueProfile acl = BuildVenueProfile(Mini(), Node(Mini(), EntityKind::kVenue, "ACL"));
  auto it = std::find_if(acl.impact_factors.begin(), acl.impact_factors.end(),
                         [](const ImpactFactor &f) { return f.year == 2012; });
  ASSERT_NE(it, acl.impact_factors.end());
  EXPECT_EQ(it->value(), 2.0);
  EXPECT_EQ(acl.impact_factors.front().year, 2011);
  EXPECT_EQ(acl.impact_factors.back().year, 2013);
  EXPECT_EQ(Ids(Mini(), acl.top_papers), (Strings{"P1", "P2", "P6", "P4"}));

  VenueProfile naacl = BuildVenueProfile(Mini(), Node(Mini(), EntityKind::kVenue, "NAACL"));
  EXPECT_EQ(naacl.recently_held_year, 2012);
  EXPECT_THROW(Mini().Require(EntityKind::kVenue, "EMNLP"), Error);
}

TEST(ProfileTest, NumbersMatchMetrics) {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    KnowledgeGraph g = testing::MakeRandomCorpus(seed).graph;
    for (NodeIndex a : g.nodes(EntityKind::kAuthor)) {
      AuthorProfile p = BuildAuthorProfile(g, a);
      EXPECT_EQ(p.h_index, HIndex(g, a));
      EXPECT_EQ(p.publications, PublicationSeries(g, a));
    }
    for (NodeIndex v : g.nodes(EntityKind::kVenue)) {
      VenueProfile p = BuildVenueProfile(g, v);
      for (const ImpactFactor &f : p.impact_factors) {
        EXPECT_EQ(f.value(), ComputeImpactFactor(g, v, f.year).value());
      }
    }
  }
}

TEST(SearchTest, Mini) {
  EXPECT_EQ(Hits("Chris"), Strings{"a3"});
  EXPECT_EQ(Hits("Smith"), Strings{"a1"});
  EXPECT_EQ(Hits("Ann Smith"), Strings{"a1"});
  EXPECT_EQ(Hits("NAACL"), Strings{"NAACL"});
  EXPECT_TRUE(Hits("zzzz").empty());
  EXPECT_EQ(Hits("embeddings"), (Strings{"P2", "P3"}));
  EXPECT_EQ(Hits("parsing", EntityKind::kPaper), (Strings{"P1", "P2"}));
  EXPECT_TRUE(Hits("Chris", EntityKind::kPaper).empty());
}

TEST(SearchTest, ResolveEntity) {
  const StopwordList &stop = StopwordList::Default();
  EXPECT_EQ(ResolveEntity(Mini(), EntityKind::kAuthor, "a2", stop),
            Node(Mini(), EntityKind::kAuthor, "a2"));
  EXPECT_EQ(ResolveEntity(Mini(), EntityKind::kAuthor, "bo li", stop),
            Node(Mini(), EntityKind::kAuthor, "a2"));
  EXPECT_EQ(ResolveEntity(Mini(), EntityKind::kPaper, "Neural Question Answering", stop),
            Paper("P5"));
  EXPECT_FALSE(ResolveEntity(Mini(), EntityKind::kVenue, "EMNLP", stop).has_value());
}

}  // namespace
}  // namespace scholargraph
