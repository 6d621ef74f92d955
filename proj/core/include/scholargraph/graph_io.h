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
#ifndef SCHOLARGRAPH_GRAPH_IO_H_
#define SCHOLARGRAPH_GRAPH_IO_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "scholargraph/graph.h"

namespace scholargraph {

// Plain-text bulk dump:
//
//   #NODES
//   kind<TAB>id<TAB>display_name<TAB>year_or_empty
//   #EDGES
//   edge_type<TAB>src_id<TAB>dst_id
//
// Lines are sorted bytewise within each section. Tabs and line breaks in
// display names are written as spaces.
void WriteDump(const KnowledgeGraph &g, std::ostream &out);
std::string DumpToString(const KnowledgeGraph &g);
// Throws Error(kIo) if the destination cannot be written.
void DumpToFile(const KnowledgeGraph &g, const std::filesystem::path &path);

// The graph file used by the CLI: the dump followed by a #PROPERTIES
// section carrying abstracts, URLs, affiliations and citation contexts.
void WriteGraphFile(const KnowledgeGraph &g, std::ostream &out);
void SaveGraph(const KnowledgeGraph &g, const std::filesystem::path &path);

// Reads either a dump or a graph file. Throws Error(kParse) on malformed
// content.
KnowledgeGraph ReadGraph(std::istream &in);
KnowledgeGraph LoadGraph(const std::filesystem::path &path);

// Reconstructs the paper records a graph was built from (ids, names,
// edges and properties). BuildGraph(ToRecords(g)) is isomorphic to g.
std::vector<PaperRecord> ToRecords(const KnowledgeGraph &g);

}  // namespace scholargraph

#endif  // SCHOLARGRAPH_GRAPH_IO_H_
