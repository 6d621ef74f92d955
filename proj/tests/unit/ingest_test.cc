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
#include <sstream>

#include <gtest/gtest.h>

#include "scholargraph/error.h"
#include "scholargraph/ingest.h"
#include "scholargraph/text.h"
#include "testing/fixtures.h"

namespace scholargraph {
namespace {

using ::scholargraph::testing::IngestMini;
using ::scholargraph::testing::MiniCorpusPath;

TEST(TextTest, FoldCaseStripsAccents) {
  EXPECT_EQ(FoldCase("Ann SMITH"), "ann smith");
  EXPECT_EQ(FoldCase("Jos\xC3\xA9 Mu\xC3\xB1oz"), "jose munoz");
  EXPECT_EQ(FoldCase("\xC5\x81ukasz"), "lukasz");
}

TEST(TextTest, NormalizeNameIsIdempotent) {
  for (std::string s : {"  Ann   Smith ", "Smith, J.-P.", "Parsing: A Survey!", "", "\xC3\x89mile"}) {
    std::string once = NormalizeName(s);
    EXPECT_EQ(NormalizeName(once), once) << s;
  }
  EXPECT_EQ(NormalizeName("  Ann   Smith "), "ann smith");
  EXPECT_EQ(NormalizeName("Parsing: A Survey!"), "parsing a survey");
}

TEST(TextTest, TokenizeSplitsOnNonAlphanumerics) {
  EXPECT_EQ(Tokenize("Smith's parser (2010) is fast."),
            (std::vector<std::string>{"smith", "s", "parser", "2010", "is", "fast"}));
  EXPECT_TRUE(Tokenize("  ...  ").empty());
}

TEST(TextTest, LongestCommonSubsequence) {
  EXPECT_EQ(LongestCommonSubsequence("ann smith", "ann smith"), 9u);
  EXPECT_EQ(LongestCommonSubsequence("abcde", "ace"), 3u);
  EXPECT_EQ(LongestCommonSubsequence("", "abc"), 0u);
  EXPECT_EQ(LongestCommonSubsequence("xyz", "abc"), 0u);
}

TEST(IngestTest, MiniCorpusHasSixRecords) {
  LoadReport report = LoadCorpus(MiniCorpusPath());
  EXPECT_EQ(report.records.size(), 6u);
  EXPECT_EQ(report.skipped, 0u);
}

TEST(IngestTest, EmptyCorpus) {
  std::istringstream in("");
  LoadReport report = ParseCorpus(in);
  EXPECT_TRUE(report.records.empty());
  EXPECT_EQ(report.skipped, 0u);
}

TEST(IngestTest, TruncatedLineIsSkipped) {
  std::istringstream in(
      R"({"id": "X1", "title": "T", "authors": ["A B"], "venue": "ACL", "year": 2001})"
      "\n"
      R"({"id": "X2", "title": "U", "authors": ["A)"
      "\n");
  LoadReport report = ParseCorpus(in);
  ASSERT_EQ(report.records.size(), 1u);
  EXPECT_EQ(report.skipped, 1u);
  ASSERT_EQ(report.diagnostics.size(), 1u);
  EXPECT_EQ(report.diagnostics[0].rfind("line 2:", 0), 0u);
}

TEST(IngestTest, RecordValidation) {
  EXPECT_THROW(ParseRecordLine(R"({"id": "X", "title": "T", "authors": [], "venue": "V", "year": 2001})"),
               Error);
  EXPECT_THROW(ParseRecordLine(R"({"id": "X", "title": "T", "authors": ["A"], "venue": "V", "year": 1200})"),
               Error);
  EXPECT_THROW(ParseRecordLine(R"({"id": "X", "title": "T", "authors": ["A"], "venue": "V"})"), Error);
  EXPECT_THROW(ParseRecordLine("not json"), Error);
}

TEST(IngestTest, RecordLineRoundTrip) {
  RawRecord r = ParseRecordLine(
      R"({"id": "X", "title": "T", "authors": ["A B"], "venue": "V", "year": 2001,)"
      R"( "references": ["R"], "contexts": [{"reference": "R", "sentence": "S."}]})");
  RawRecord again = ParseRecordLine(FormatRecordLine(r));
  EXPECT_EQ(again.anthology_id, "X");
  EXPECT_EQ(again.reference_titles, r.reference_titles);
  ASSERT_EQ(again.citation_contexts.size(), 1u);
  EXPECT_EQ(again.citation_contexts[0].sentence, "S.");
}

TEST(IngestTest, CanonicalizeAuthor) {
  NameIndex index;
  std::string a = CanonicalizeAuthor("Ann Smith", index);
  EXPECT_EQ(CanonicalizeAuthor("ann  smith", index), a);
  EXPECT_NE(CanonicalizeAuthor("Bo Li", index), a);
  EXPECT_EQ(index.canonical_names().at(a), "Ann Smith");
  EXPECT_THROW(CanonicalizeAuthor("   ", index), Error);
}

TEST(IngestTest, MiniAuthorIdsFollowFirstSight) {
  IngestResult mini = IngestMini();
  EXPECT_EQ(mini.authors.Lookup("Chris Ray"), "a3");
  EXPECT_EQ(mini.authors.Lookup("Ann Smith"), "a1");
  EXPECT_EQ(mini.authors.Lookup("Bo Li"), "a2");
}

TEST(IngestTest, CanonicalizeVenue) {
  VenueTable table = VenueTable::Load(testing::MiniVenuesPath());
  std::vector<std::string> warnings;
  EXPECT_EQ(CanonicalizeVenue("NAACL-HLT", table, &warnings), "NAACL");
  EXPECT_EQ(CanonicalizeVenue("ACL", table, &warnings), "ACL");
  EXPECT_TRUE(warnings.empty());
  EXPECT_EQ(CanonicalizeVenue("WS-XYZ", table, &warnings), "WS-XYZ");
  EXPECT_EQ(warnings.size(), 1u);
  // Once minted, the venue is known.
  EXPECT_EQ(CanonicalizeVenue("WS-XYZ", table, &warnings), "WS-XYZ");
  EXPECT_EQ(warnings.size(), 1u);
}

TEST(IngestTest, ResolveReferences) {
  LoadReport report = LoadCorpus(MiniCorpusPath());
  TitleIndex titles = BuildTitleIndex(report.records);
  EXPECT_EQ(ResolveReferences(report.records[4], titles),
            (std::vector<std::string>{"P1", "P2", "P3"}));
  EXPECT_TRUE(ResolveReferences(report.records[5], titles).empty());

  RawRecord twice = report.records[2];
  twice.reference_titles = {"Fast Dependency Parsing for English",
                            "fast dependency parsing for english"};
  EXPECT_EQ(ResolveReferences(twice, titles), (std::vector<std::string>{"P1"}));

  RawRecord self = report.records[0];
  self.reference_titles = {self.title};
  EXPECT_TRUE(ResolveReferences(self, titles).empty());
}

TEST(IngestTest, AssignFields) {
  FieldVocabulary vocab = FieldVocabulary::Load(testing::MiniFieldsPath());
  EXPECT_EQ(AssignFields("Fast Dependency Parsing for English", "", vocab),
            (std::vector<std::string>{"parsing"}));
  EXPECT_EQ(AssignFields("Parsing with Word Embeddings", "", vocab),
            (std::vector<std::string>{"embeddings", "parsing"}));
  EXPECT_TRUE(AssignFields("Neural Question Answering", "", vocab).empty());
  // Keywords match whole tokens only.
  EXPECT_TRUE(AssignFields("Reparsing", "", vocab).empty());
}

TEST(IngestTest, IngestIsIdempotent) {
  IngestResult a = IngestMini();
  IngestResult b = IngestMini();
  ASSERT_EQ(a.papers.size(), b.papers.size());
  for (size_t i = 0; i < a.papers.size(); ++i) {
    EXPECT_EQ(a.papers[i].paper_id, b.papers[i].paper_id);
    EXPECT_EQ(a.papers[i].author_ids, b.papers[i].author_ids);
    EXPECT_EQ(a.papers[i].cited_paper_ids, b.papers[i].cited_paper_ids);
    EXPECT_EQ(a.papers[i].field_ids, b.papers[i].field_ids);
  }
}

TEST(IngestTest, ReferenceClosureAndAuthorAccounting) {
  IngestResult mini = IngestMini();
  std::set<std::string> ids;
  size_t authored = 0;
  for (const PaperRecord &p : mini.papers) {
    ids.insert(p.paper_id);
    authored += p.author_ids.size();
  }
  for (const PaperRecord &p : mini.papers) {
    for (const std::string &c : p.cited_paper_ids) EXPECT_TRUE(ids.count(c)) << c;
    for (const PaperContext &c : p.contexts) {
      EXPECT_NE(std::find(p.cited_paper_ids.begin(), p.cited_paper_ids.end(), c.cited_paper_id),
                p.cited_paper_ids.end());
    }
  }
  EXPECT_LE(mini.authors.canonical_names().size(), mini.raw_author_occurrences);
  EXPECT_EQ(authored, mini.raw_author_occurrences);
}

TEST(IngestTest, ContextsOfDroppedReferencesAreDiscarded) {
  std::istringstream in(
      R"({"id": "X1", "title": "Alpha", "authors": ["A B"], "venue": "ACL", "year": 2001})"
      "\n"
      R"({"id": "X2", "title": "Beta", "authors": ["A B"], "venue": "ACL", "year": 2002,)"
      R"( "references": ["Alpha", "Gamma"], "contexts": [["Alpha", "One."], ["Gamma", "Two."]]})"
      "\n");
  IngestResult r = Ingest(ParseCorpus(in).records, VenueTable(), FieldVocabulary());
  ASSERT_EQ(r.papers.size(), 2u);
  ASSERT_EQ(r.papers[1].contexts.size(), 1u);
  EXPECT_EQ(r.papers[1].contexts[0].cited_paper_id, "X1");
  EXPECT_EQ(r.papers[1].contexts[0].sentence, "One.");
}

}  // namespace
}  // namespace scholargraph
