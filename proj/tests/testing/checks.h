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
#ifndef SCHOLARGRAPH_TESTS_TESTING_CHECKS_H_
#define SCHOLARGRAPH_TESTS_TESTING_CHECKS_H_

// Property checks shared by the unit tests and the acceptance gate. Each
// returns the number of violations and appends a description of the first
// few to *log.

#include <string>
#include <vector>

#include "fixtures.h"
#include "scholargraph/nlq.h"

namespace scholargraph::testing {

// Kind-letter strings of 2..max_kinds kinds where every adjacent pair
// involves a paper.
std::vector<std::string> ValidKindSequences(size_t max_kinds);

// MetapathTraverse vs. brute-force enumeration, every node, every valid
// sequence, both cites directions.
size_t MetapathMismatches(const RandomCorpus &corpus, size_t max_kinds,
                          std::vector<std::string> *log);

// HIndex for every author at every year and now; ComputeImpactFactor for
// every venue and year; citation totals.
size_t MetricMismatches(const RandomCorpus &corpus, std::vector<std::string> *log);

// Co-citation and collaboration against the oracles, plus symmetry.
size_t RelationMismatches(const RandomCorpus &corpus, std::vector<std::string> *log);

// For each triple of representative templates (binary, statistical, list)
// sharing a table row, instantiated with the graph's own entity names:
// binary == (count > 0) and count == list length.
size_t CrossClassMismatches(const KnowledgeGraph &g, const TemplateCatalog &catalog,
                            std::vector<std::string> *log, size_t *checked = nullptr);

}  // namespace scholargraph::testing

#endif  // SCHOLARGRAPH_TESTS_TESTING_CHECKS_H_
