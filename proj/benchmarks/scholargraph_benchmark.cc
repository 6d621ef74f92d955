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
#include <map>
#include <random>

#include <benchmark/benchmark.h>

#include "scholargraph/citetext.h"
#include "scholargraph/graph.h"
#include "scholargraph/graph_io.h"
#include "scholargraph/metrics.h"
#include "scholargraph/nlq.h"
#include "scholargraph/profiles.h"

namespace scholargraph {
namespace {

// A synthetic corpus with `papers` papers, ~papers/3 authors, 20 venues and
// 10 fields; each paper cites up to 8 earlier ones.
std::vector<PaperRecord> Synthetic(size_t papers) {
  std::mt19937_64 rng(42);
  size_t authors = std::max<size_t>(papers / 3, 2);
  std::vector<PaperRecord> out;
  for (size_t i = 0; i < papers; ++i) {
    PaperRecord r;
    r.paper_id = "P" + std::to_string(i);
    r.title = "Synthetic paper " + std::to_string(i);
    r.year = 1990 + static_cast<int>(i * 30 / papers);
    r.venue_id = "V" + std::to_string(rng() % 20);
    size_t n = 1 + rng() % 4;
    for (size_t a = 0; a < n; ++a) {
      std::string id = "a" + std::to_string(rng() % authors);
      if (std::find(r.author_ids.begin(), r.author_ids.end(), id) != r.author_ids.end()) continue;
      r.author_ids.push_back(id);
      r.author_names.push_back("Author " + id);
    }
    r.field_ids.push_back("F" + std::to_string(rng() % 10));
    for (size_t c = 0; i > 0 && c < 8; ++c) {
      std::string cited = "P" + std::to_string(rng() % i);
      if (std::find(r.cited_paper_ids.begin(), r.cited_paper_ids.end(), cited) ==
          r.cited_paper_ids.end()) {
        r.cited_paper_ids.push_back(cited);
        if (c % 2 == 0) r.contexts.push_back({cited, "This excellent parser improves results."});
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

const KnowledgeGraph &Graph(size_t papers) {
  static std::map<size_t, KnowledgeGraph> cache;
  auto it = cache.find(papers);
  if (it == cache.end()) it = cache.emplace(papers, BuildGraph(Synthetic(papers))).first;
  return it->second;
}

void BM_BuildGraph(benchmark::State &state) {
  std::vector<PaperRecord> records = Synthetic(static_cast<size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(BuildGraph(records));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildGraph)->Arg(1000)->Arg(20000);

void BM_MetapathVenueAuthorPaper(benchmark::State &state) {
  const KnowledgeGraph &g = Graph(static_cast<size_t>(state.range(0)));
  MetapathSpec spec = MetapathSpec::ParseCompact("V-A-P");
  NodeIndex venue = g.nodes(EntityKind::kVenue)[0];
  for (auto _ : state) benchmark::DoNotOptimize(MetapathTraverse(g, venue, spec));
}
BENCHMARK(BM_MetapathVenueAuthorPaper)->Arg(1000)->Arg(20000);

void BM_HIndexAllAuthors(benchmark::State &state) {
  const KnowledgeGraph &g = Graph(static_cast<size_t>(state.range(0)));
  for (auto _ : state) {
    int64_t sum = 0;
    for (NodeIndex a : g.nodes(EntityKind::kAuthor)) sum += HIndex(g, a);
    benchmark::DoNotOptimize(sum);
  }
  state.SetItemsProcessed(state.iterations() * g.node_count(EntityKind::kAuthor));
}
BENCHMARK(BM_HIndexAllAuthors)->Arg(1000)->Arg(20000);

void BM_ClassifyQuery(benchmark::State &state) {
  const TemplateCatalog &catalog = TemplateCatalog::Default();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        catalog.Classify("How many papers are published by Author a1 and Author a2 together"));
  }
}
BENCHMARK(BM_ClassifyQuery);

void BM_AnswerQuery(benchmark::State &state) {
  const KnowledgeGraph &g = Graph(static_cast<size_t>(state.range(0)));
  const TemplateCatalog &catalog = TemplateCatalog::Default();
  for (auto _ : state) {
    benchmark::DoNotOptimize(AnswerQuery("List the papers published by Author a1", g, catalog,
                                         SentimentLexicon::Default()));
  }
}
BENCHMARK(BM_AnswerQuery)->Arg(1000)->Arg(20000);

void BM_CatalogLoad(benchmark::State &state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(TemplateCatalog::Parse(R"({"templates": [{"id": "t",
        "class": "list", "phrasings": ["(List|Show|Give) [me] [all] the papers (of|by) $A"],
        "plan": {"paths": ["$A:A-P"]}}]})"));
  }
}
BENCHMARK(BM_CatalogLoad);

void BM_Dump(benchmark::State &state) {
  const KnowledgeGraph &g = Graph(static_cast<size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(DumpToString(g));
}
BENCHMARK(BM_Dump)->Arg(20000);

}  // namespace
}  // namespace scholargraph

BENCHMARK_MAIN();
