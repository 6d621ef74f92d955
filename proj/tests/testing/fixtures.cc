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
#include "fixtures.h"

#include <algorithm>
#include <random>
#include <set>

#include "scholargraph/error.h"

namespace scholargraph::testing {

std::filesystem::path DataDir() { return SCHOLARGRAPH_TEST_DATA_DIR; }
std::filesystem::path MiniCorpusPath() { return DataDir() / "mini.jsonl"; }
std::filesystem::path MiniVenuesPath() { return DataDir() / "mini_venues.json"; }
std::filesystem::path MiniFieldsPath() { return DataDir() / "mini_fields.json"; }

IngestResult IngestMini() {
  LoadReport report = LoadCorpus(MiniCorpusPath());
  return Ingest(report.records, VenueTable::Load(MiniVenuesPath()),
                FieldVocabulary::Load(MiniFieldsPath()));
}

const std::vector<PaperRecord> &MiniRecords() {
  static const std::vector<PaperRecord> records = IngestMini().papers;
  return records;
}

const KnowledgeGraph &Mini() {
  static const KnowledgeGraph graph = BuildGraph(MiniRecords());
  return graph;
}

NodeIndex Node(const KnowledgeGraph &g, EntityKind kind, const std::string &id) {
  return g.Require(kind, id);
}

std::vector<std::string> Ids(const KnowledgeGraph &g, const std::vector<NodeIndex> &nodes) {
  std::vector<std::string> ids;
  for (NodeIndex n : nodes) ids.push_back(g.id(n));
  return ids;
}

namespace {

const char *const kFirstNames[] = {"Ann",   "Bo",     "Chris", "Dana",  "Eli",   "Fatima",
                                   "Goran", "Hiro",   "Ines",  "Jonas", "Kavya", "Lena",
                                   "Mateo", "Nadia",  "Omar",  "Priya", "Quinn", "Rosa",
                                   "Sven",  "Tamara"};
const char *const kLastNames[] = {"Smith",  "Li",      "Ray",    "Okafor", "Novak",
                                  "Tanaka", "Moreau",  "Silva",  "Kowal",  "Haddad",
                                  "Berg",   "Castillo", "Dubois", "Ivanova", "Patel"};
const char *const kVenues[] = {"ACL", "EMNLP", "COLING", "NAACL", "EACL", "CoNLL", "LREC"};
const char *const kFields[] = {"parsing",  "summarization", "translation",
                               "tagging",  "dialogue",      "semantics"};
const char *const kTitleWords[] = {"Neural",   "Robust",  "Sparse",     "Latent",
                                   "Bayesian", "Graph",   "Multilingual", "Efficient",
                                   "Models",   "Learning", "Inference",  "Representations",
                                   "Corpora",  "Alignment", "Decoding",  "Features"};
const char *const kPositive[] = {"excellent", "improves", "robust", "effective", "novel"};
const char *const kNegative[] = {"fails", "poor", "limited", "weak", "inaccurate"};

}  // namespace

RandomCorpus MakeRandomCorpus(uint64_t seed, size_t max_nodes) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](size_t lo, size_t hi) {
    return std::uniform_int_distribution<size_t>(lo, hi)(rng);
  };
  auto coin = [&](double p) { return std::bernoulli_distribution(p)(rng); };

  // Split the node budget: venues 1-4, fields 0-4, authors 1-12, rest papers.
  size_t budget = std::max<size_t>(max_nodes, 6);
  size_t venues = uniform(1, 4);
  size_t fields = uniform(0, 4);
  size_t authors = uniform(1, std::min<size_t>(12, budget / 4));
  size_t used = venues + fields + authors;
  size_t papers = uniform(1, std::clamp<size_t>(budget > used ? budget - used : 1, 1, 24));

  std::vector<std::string> venue_ids(std::begin(kVenues), std::end(kVenues));
  std::shuffle(venue_ids.begin(), venue_ids.end(), rng);
  venue_ids.resize(venues);
  std::vector<std::string> field_ids(std::begin(kFields), std::end(kFields));
  std::shuffle(field_ids.begin(), field_ids.end(), rng);
  field_ids.resize(fields);

  std::set<std::string> used_names;
  std::vector<std::string> author_names;
  while (author_names.size() < authors) {
    std::string name = std::string(kFirstNames[uniform(0, std::size(kFirstNames) - 1)]) + " " +
                       kLastNames[uniform(0, std::size(kLastNames) - 1)];
    if (used_names.insert(name).second) author_names.push_back(name);
  }

  std::set<std::string> used_titles;
  RandomCorpus corpus;
  for (size_t i = 0; i < papers; ++i) {
    PaperRecord r;
    r.paper_id = "P" + std::to_string(100 + i);
    do {
      r.title.clear();
      size_t words = uniform(2, 4);
      for (size_t w = 0; w < words; ++w) {
        if (w > 0) r.title += ' ';
        r.title += kTitleWords[uniform(0, std::size(kTitleWords) - 1)];
      }
    } while (!used_titles.insert(r.title).second);
    r.year = static_cast<int>(uniform(2000, 2008));
    r.venue_id = venue_ids[uniform(0, venues - 1)];
    std::vector<size_t> picks(authors);
    for (size_t a = 0; a < authors; ++a) picks[a] = a;
    std::shuffle(picks.begin(), picks.end(), rng);
    picks.resize(uniform(1, std::min<size_t>(3, authors)));
    for (size_t a : picks) {
      r.author_ids.push_back("a" + std::to_string(a + 1));
      r.author_names.push_back(author_names[a]);
    }
    for (const std::string &f : field_ids) {
      if (coin(0.4)) r.field_ids.push_back(f);
    }
    std::sort(r.field_ids.begin(), r.field_ids.end());
    corpus.records.push_back(std::move(r));
  }
  for (size_t i = 0; i < papers; ++i) {
    PaperRecord &r = corpus.records[i];
    for (size_t j = 0; j < papers; ++j) {
      if (j == i || !coin(0.25)) continue;
      const std::string &cited = corpus.records[j].paper_id;
      r.cited_paper_ids.push_back(cited);
      size_t contexts = uniform(0, 2);
      for (size_t c = 0; c < contexts; ++c) {
        std::string sentence = "The method of " + corpus.records[j].title;
        switch (uniform(0, 2)) {
          case 0:
            sentence += std::string(" is ") + kPositive[uniform(0, std::size(kPositive) - 1)];
            break;
          case 1:
            sentence += std::string(" is ") + kNegative[uniform(0, std::size(kNegative) - 1)];
            break;
          default:
            sentence += " is described in section " + std::to_string(uniform(1, 9));
            break;
        }
        r.contexts.push_back({cited, sentence + "."});
      }
    }
  }
  corpus.graph = BuildGraph(corpus.records);
  return corpus;
}

}  // namespace scholargraph::testing
