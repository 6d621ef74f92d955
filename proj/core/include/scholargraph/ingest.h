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
#ifndef SCHOLARGRAPH_INGEST_H_
#define SCHOLARGRAPH_INGEST_H_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nlohmann/json_fwd.hpp"

namespace scholargraph {

// A citation context as extracted from the citing paper's full text.
struct RawContext {
  std::string reference_title;
  std::string sentence;
};

// One line of the corpus file, before any canonicalization.
struct RawRecord {
  std::string anthology_id;
  std::string title;
  std::vector<std::string> author_names;
  std::string venue_raw;
  int year = 0;
  std::optional<std::string> abstract;
  std::vector<std::string> reference_titles;
  std::vector<RawContext> citation_contexts;
  std::vector<std::string> urls;
  std::vector<std::string> affiliations;
};

struct LoadReport {
  std::vector<RawRecord> records;
  size_t skipped = 0;
  // One line per skipped record: "line N: reason".
  std::vector<std::string> diagnostics;
};

// Parses one corpus line. Throws Error(kParse) when the line is not a
// well-formed record.
RawRecord ParseRecordLine(std::string_view line);

// Reads a line-delimited corpus. Malformed lines and repeated ids are
// skipped and reported; blank lines are ignored. LoadCorpus throws
// Error(kIo) if the file cannot be read.
LoadReport ParseCorpus(std::istream &in);
LoadReport LoadCorpus(const std::filesystem::path &path);

// Serializes a record in the corpus line format (no trailing newline).
std::string FormatRecordLine(const RawRecord &record);

// Maps normalized author names to minted ids "a1", "a2", ... in order of
// first sight. The display name of an id is the first raw spelling seen.
class NameIndex {
 public:
  explicit NameIndex(std::string id_prefix = "a") : prefix_(std::move(id_prefix)) {}

  // Returns the id for the name, minting a new one if unseen. Throws
  // Error(kInvalidArgument) for blank names.
  std::string Canonicalize(std::string_view raw_name);

  std::optional<std::string> Lookup(std::string_view raw_name) const;

  // id -> display string.
  const std::map<std::string, std::string> &canonical_names() const {
    return canonical_names_;
  }
  // normalized string -> id.
  const std::map<std::string, std::string> &alias_map() const {
    return alias_map_;
  }

 private:
  std::string prefix_;
  size_t next_ = 1;
  std::map<std::string, std::string> canonical_names_;
  std::map<std::string, std::string> alias_map_;
};

std::string CanonicalizeAuthor(std::string_view name, NameIndex &index);

// Raw venue string -> unified venue id. Every unified id is also an alias
// of itself.
class VenueTable {
 public:
  VenueTable() = default;

  // Accepts {"ACL": ["ACL", "Annual Meeting of the ACL"], ...}.
  static VenueTable FromJson(const nlohmann::json &config);
  static VenueTable Load(const std::filesystem::path &path);

  void AddAlias(std::string_view unified_id, std::string_view raw);

  std::optional<std::string> Lookup(std::string_view raw) const;

  // Unseen strings mint a new unified id (the trimmed raw string) and
  // append a warning to *warnings when given.
  std::string Canonicalize(std::string_view raw,
                           std::vector<std::string> *warnings = nullptr);

  size_t size() const { return unified_ids_.size(); }

 private:
  std::map<std::string, std::string> aliases_;  // normalized -> id
  std::map<std::string, int> unified_ids_;
};

std::string CanonicalizeVenue(std::string_view venue_raw, VenueTable &table,
                              std::vector<std::string> *warnings = nullptr);

// Field id -> keyword phrases, each stored as a token sequence.
class FieldVocabulary {
 public:
  FieldVocabulary() = default;

  // Accepts {"parsing": ["parsing", "parser"], ...}.
  static FieldVocabulary FromJson(const nlohmann::json &config);
  static FieldVocabulary Load(const std::filesystem::path &path);

  void AddKeyword(std::string_view field_id, std::string_view keyword);

  bool empty() const { return fields_.empty(); }
  const std::map<std::string, std::vector<std::vector<std::string>>> &fields()
      const {
    return fields_;
  }

 private:
  std::map<std::string, std::vector<std::vector<std::string>>> fields_;
};

struct PaperContext {
  std::string cited_paper_id;
  std::string sentence;
};

// A canonicalized publication ready for graph construction.
struct PaperRecord {
  std::string paper_id;
  std::string title;
  std::vector<std::string> author_ids;
  std::vector<std::string> author_names;  // display strings, parallel
  std::string venue_id;
  int year = 0;
  std::string abstract;
  std::vector<std::string> cited_paper_ids;
  std::vector<PaperContext> contexts;
  std::vector<std::string> urls;
  std::vector<std::string> affiliations;
  std::vector<std::string> field_ids;
};

// Normalized title -> paper id. Colliding titles keep the smallest id.
using TitleIndex = std::map<std::string, std::string>;

TitleIndex BuildTitleIndex(const std::vector<RawRecord> &records);

// In-corpus cited ids in first-reference order, without duplicates or
// self-citations.
std::vector<std::string> ResolveReferences(const RawRecord &record,
                                           const TitleIndex &title_index);

// Fields whose keywords occur as token sequences in the title or abstract,
// ordered by field id.
std::vector<std::string> AssignFields(std::string_view title,
                                      std::string_view abstract,
                                      const FieldVocabulary &vocabulary);
std::vector<std::string> AssignFields(const PaperRecord &record,
                                      const FieldVocabulary &vocabulary);

struct IngestResult {
  std::vector<PaperRecord> papers;  // corpus order
  NameIndex authors;
  VenueTable venues;
  size_t raw_author_occurrences = 0;
  std::vector<std::string> warnings;
};

// Canonicalizes a whole corpus. Ids are minted in corpus order, so the
// same input always produces the same output.
IngestResult Ingest(const std::vector<RawRecord> &records, VenueTable venues,
                    const FieldVocabulary &vocabulary);

}  // namespace scholargraph

#endif  // SCHOLARGRAPH_INGEST_H_
