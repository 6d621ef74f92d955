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
#include "scholargraph/ingest.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "scholargraph/error.h"
#include "scholargraph/text.h"

namespace scholargraph {
namespace {

using json = nlohmann::json;

constexpr int kMinYear = 1900;
constexpr int kMaxYear = 2100;

[[noreturn]] void ParseError(const std::string &message) {
  throw Error(ErrorCode::kParse, message);
}

std::string RequireString(const json &obj, const char *key) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    ParseError(std::string("missing or non-string field '") + key + "'");
  }
  return it->get<std::string>();
}

std::vector<std::string> OptionalStringList(const json &obj, const char *key) {
  std::vector<std::string> out;
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return out;
  if (!it->is_array()) {
    ParseError(std::string("field '") + key + "' must be a list of strings");
  }
  for (const json &item : *it) {
    if (!item.is_string()) {
      ParseError(std::string("field '") + key + "' must be a list of strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

bool ContainsSequence(const std::vector<std::string> &tokens,
                      const std::vector<std::string> &needle) {
  if (needle.empty() || needle.size() > tokens.size()) return false;
  return std::search(tokens.begin(), tokens.end(), needle.begin(),
                     needle.end()) != tokens.end();
}

json ReadJsonFile(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kParse, path.string() + ": " + e.what());
  }
}

}  // namespace

RawRecord ParseRecordLine(std::string_view line) {
  json obj;
  try {
    obj = json::parse(line);
  } catch (const json::exception &e) {
    ParseError(std::string("invalid record syntax: ") + e.what());
  }
  if (!obj.is_object()) ParseError("record is not an object");

  RawRecord record;
  record.anthology_id = Trim(RequireString(obj, "id"));
  if (record.anthology_id.empty()) ParseError("empty id");
  record.title = RequireString(obj, "title");
  record.venue_raw = RequireString(obj, "venue");

  auto year = obj.find("year");
  if (year == obj.end() || !year->is_number_integer()) {
    ParseError("missing or non-integer field 'year'");
  }
  record.year = year->get<int>();
  if (record.year < kMinYear || record.year > kMaxYear) {
    ParseError("year " + std::to_string(record.year) + " out of range");
  }

  if (!obj.contains("authors")) ParseError("missing field 'authors'");
  record.author_names = OptionalStringList(obj, "authors");
  if (record.author_names.empty()) ParseError("record has no authors");
  for (const std::string &name : record.author_names) {
    if (Trim(name).empty()) ParseError("blank author name");
  }

  auto abstract = obj.find("abstract");
  if (abstract != obj.end() && !abstract->is_null()) {
    if (!abstract->is_string()) ParseError("field 'abstract' must be a string");
    record.abstract = abstract->get<std::string>();
  }
  record.reference_titles = OptionalStringList(obj, "references");
  record.urls = OptionalStringList(obj, "urls");
  record.affiliations = OptionalStringList(obj, "affiliations");

  auto contexts = obj.find("contexts");
  if (contexts != obj.end() && !contexts->is_null()) {
    if (!contexts->is_array()) ParseError("field 'contexts' must be a list");
    for (const json &item : *contexts) {
      RawContext context;
      if (item.is_object()) {
        context.reference_title = RequireString(item, "reference");
        context.sentence = RequireString(item, "sentence");
      } else if (item.is_array() && item.size() == 2 && item[0].is_string() &&
                 item[1].is_string()) {
        context.reference_title = item[0].get<std::string>();
        context.sentence = item[1].get<std::string>();
      } else {
        ParseError("context must be {reference, sentence}");
      }
      record.citation_contexts.push_back(std::move(context));
    }
  }
  return record;
}

std::string FormatRecordLine(const RawRecord &record) {
  json obj = json::object();
  obj["id"] = record.anthology_id;
  obj["title"] = record.title;
  obj["authors"] = record.author_names;
  obj["venue"] = record.venue_raw;
  obj["year"] = record.year;
  if (record.abstract) obj["abstract"] = *record.abstract;
  obj["references"] = record.reference_titles;
  json contexts = json::array();
  for (const RawContext &c : record.citation_contexts) {
    contexts.push_back({{"reference", c.reference_title},
                        {"sentence", c.sentence}});
  }
  obj["contexts"] = std::move(contexts);
  obj["urls"] = record.urls;
  obj["affiliations"] = record.affiliations;
  return obj.dump();
}

LoadReport ParseCorpus(std::istream &in) {
  LoadReport report;
  std::set<std::string> seen;
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty()) continue;
    try {
      RawRecord record = ParseRecordLine(line);
      if (!seen.insert(record.anthology_id).second) {
        ParseError("duplicate id '" + record.anthology_id + "'");
      }
      report.records.push_back(std::move(record));
    } catch (const Error &e) {
      ++report.skipped;
      report.diagnostics.push_back("line " + std::to_string(line_number) +
                                   ": " + e.what());
    }
  }
  return report;
}

LoadReport LoadCorpus(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read corpus " + path.string());
  return ParseCorpus(in);
}

std::string NameIndex::Canonicalize(std::string_view raw_name) {
  std::string key = NormalizeName(raw_name);
  if (key.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "blank author name");
  }
  auto it = alias_map_.find(key);
  if (it != alias_map_.end()) return it->second;
  std::string id = prefix_ + std::to_string(next_++);
  alias_map_.emplace(std::move(key), id);
  canonical_names_.emplace(id, Trim(raw_name));
  return id;
}

std::optional<std::string> NameIndex::Lookup(std::string_view raw_name) const {
  auto it = alias_map_.find(NormalizeName(raw_name));
  if (it == alias_map_.end()) return std::nullopt;
  return it->second;
}

std::string CanonicalizeAuthor(std::string_view name, NameIndex &index) {
  return index.Canonicalize(name);
}

VenueTable VenueTable::FromJson(const json &config) {
  if (!config.is_object()) {
    throw Error(ErrorCode::kConfig, "venue table must map ids to alias lists");
  }
  VenueTable table;
  for (const auto &[id, aliases] : config.items()) {
    table.AddAlias(id, id);
    if (aliases.is_string()) {
      table.AddAlias(id, aliases.get<std::string>());
      continue;
    }
    if (!aliases.is_array()) {
      throw Error(ErrorCode::kConfig, "aliases of venue '" + id +
                                          "' must be a list of strings");
    }
    for (const json &alias : aliases) {
      if (!alias.is_string()) {
        throw Error(ErrorCode::kConfig,
                    "alias of venue '" + id + "' is not a string");
      }
      table.AddAlias(id, alias.get<std::string>());
    }
  }
  return table;
}

VenueTable VenueTable::Load(const std::filesystem::path &path) {
  return FromJson(ReadJsonFile(path));
}

void VenueTable::AddAlias(std::string_view unified_id, std::string_view raw) {
  std::string id = Trim(unified_id);
  unified_ids_.emplace(id, 0);
  std::string key = NormalizeName(raw);
  if (!key.empty()) aliases_[key] = id;
}

std::optional<std::string> VenueTable::Lookup(std::string_view raw) const {
  auto it = aliases_.find(NormalizeName(raw));
  if (it == aliases_.end()) return std::nullopt;
  return it->second;
}

std::string VenueTable::Canonicalize(std::string_view raw,
                                     std::vector<std::string> *warnings) {
  if (auto id = Lookup(raw)) return *id;
  std::string id = Trim(raw);
  if (id.empty()) id = "unknown";
  AddAlias(id, raw);
  if (warnings != nullptr) {
    warnings->push_back("unseen venue '" + id + "' minted as a new venue");
  }
  return id;
}

std::string CanonicalizeVenue(std::string_view venue_raw, VenueTable &table,
                              std::vector<std::string> *warnings) {
  return table.Canonicalize(venue_raw, warnings);
}

FieldVocabulary FieldVocabulary::FromJson(const json &config) {
  if (!config.is_object()) {
    throw Error(ErrorCode::kConfig, "field vocabulary must map ids to keywords");
  }
  FieldVocabulary vocabulary;
  for (const auto &[id, keywords] : config.items()) {
    if (!keywords.is_array()) {
      throw Error(ErrorCode::kConfig,
                  "keywords of field '" + id + "' must be a list");
    }
    for (const json &keyword : keywords) {
      if (!keyword.is_string()) {
        throw Error(ErrorCode::kConfig,
                    "keyword of field '" + id + "' is not a string");
      }
      vocabulary.AddKeyword(id, keyword.get<std::string>());
    }
  }
  return vocabulary;
}

FieldVocabulary FieldVocabulary::Load(const std::filesystem::path &path) {
  return FromJson(ReadJsonFile(path));
}

void FieldVocabulary::AddKeyword(std::string_view field_id,
                                 std::string_view keyword) {
  std::vector<std::string> tokens = Tokenize(keyword);
  if (tokens.empty()) return;
  fields_[Trim(field_id)].push_back(std::move(tokens));
}

TitleIndex BuildTitleIndex(const std::vector<RawRecord> &records) {
  TitleIndex index;
  for (const RawRecord &record : records) {
    std::string key = NormalizeName(record.title);
    if (key.empty()) continue;
    auto [it, inserted] = index.emplace(key, record.anthology_id);
    if (!inserted && record.anthology_id < it->second) {
      it->second = record.anthology_id;
    }
  }
  return index;
}

std::vector<std::string> ResolveReferences(const RawRecord &record,
                                           const TitleIndex &title_index) {
  std::vector<std::string> cited;
  for (const std::string &title : record.reference_titles) {
    auto it = title_index.find(NormalizeName(title));
    if (it == title_index.end()) continue;
    const std::string &id = it->second;
    if (id == record.anthology_id) continue;
    if (std::find(cited.begin(), cited.end(), id) == cited.end()) {
      cited.push_back(id);
    }
  }
  return cited;
}

std::vector<std::string> AssignFields(std::string_view title,
                                      std::string_view abstract,
                                      const FieldVocabulary &vocabulary) {
  std::vector<std::string> title_tokens = Tokenize(title);
  std::vector<std::string> abstract_tokens = Tokenize(abstract);
  std::vector<std::string> fields;
  for (const auto &[id, keywords] : vocabulary.fields()) {
    for (const auto &keyword : keywords) {
      if (ContainsSequence(title_tokens, keyword) ||
          ContainsSequence(abstract_tokens, keyword)) {
        fields.push_back(id);
        break;
      }
    }
  }
  return fields;
}

std::vector<std::string> AssignFields(const PaperRecord &record,
                                      const FieldVocabulary &vocabulary) {
  return AssignFields(record.title, record.abstract, vocabulary);
}

IngestResult Ingest(const std::vector<RawRecord> &records, VenueTable venues,
                    const FieldVocabulary &vocabulary) {
  IngestResult result;
  result.venues = std::move(venues);
  TitleIndex title_index = BuildTitleIndex(records);

  for (const RawRecord &raw : records) {
    PaperRecord paper;
    paper.paper_id = raw.anthology_id;
    paper.title = raw.title;
    paper.year = raw.year;
    paper.abstract = raw.abstract.value_or("");
    paper.urls = raw.urls;
    paper.affiliations = raw.affiliations;

    for (const std::string &name : raw.author_names) {
      ++result.raw_author_occurrences;
      std::string id = CanonicalizeAuthor(name, result.authors);
      // The same person listed twice on one paper is one authorship.
      if (std::find(paper.author_ids.begin(), paper.author_ids.end(), id) !=
          paper.author_ids.end()) {
        continue;
      }
      paper.author_ids.push_back(id);
      paper.author_names.push_back(result.authors.canonical_names().at(id));
    }
    paper.venue_id =
        CanonicalizeVenue(raw.venue_raw, result.venues, &result.warnings);
    paper.cited_paper_ids = ResolveReferences(raw, title_index);

    for (const RawContext &context : raw.citation_contexts) {
      auto it = title_index.find(NormalizeName(context.reference_title));
      if (it == title_index.end() || it->second == paper.paper_id) continue;
      const std::string &cited = it->second;
      if (std::find(paper.cited_paper_ids.begin(), paper.cited_paper_ids.end(),
                    cited) == paper.cited_paper_ids.end()) {
        paper.cited_paper_ids.push_back(cited);
      }
      paper.contexts.push_back({cited, context.sentence});
    }
    paper.field_ids = AssignFields(paper, vocabulary);
    result.papers.push_back(std::move(paper));
  }
  return result;
}

}  // namespace scholargraph
