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
#ifndef SCHOLARGRAPH_TESTS_TESTING_FIXTURES_H_
#define SCHOLARGRAPH_TESTS_TESTING_FIXTURES_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "scholargraph/graph.h"
#include "scholargraph/ingest.h"

namespace scholargraph::testing {

std::filesystem::path DataDir();
std::filesystem::path MiniCorpusPath();
std::filesystem::path MiniVenuesPath();
std::filesystem::path MiniFieldsPath();

// The six-paper fixture, ingested from tests/data.
IngestResult IngestMini();
const std::vector<PaperRecord> &MiniRecords();
const KnowledgeGraph &Mini();

// Shorthand for a node of the fixture or any other graph.
NodeIndex Node(const KnowledgeGraph &g, EntityKind kind, const std::string &id);
std::vector<std::string> Ids(const KnowledgeGraph &g, const std::vector<NodeIndex> &nodes);

struct RandomCorpus {
  std::vector<PaperRecord> records;
  KnowledgeGraph graph;
};

// A random heterogeneous graph of at most `max_nodes` nodes with unique,
// realistic names and random citation contexts.
RandomCorpus MakeRandomCorpus(uint64_t seed, size_t max_nodes = 50);

}  // namespace scholargraph::testing

#endif  // SCHOLARGRAPH_TESTS_TESTING_FIXTURES_H_
