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

#include "scholargraph/nlq.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "scholargraph/assets.h"
#include "scholargraph/error.h"
#include "scholargraph/profiles.h"
#include "scholargraph/text.h"

namespace scholargraph {
namespace {

using json = nlohmann::json;

[[noreturn]] void ConfigError(const std::string &message) {
  throw Error(ErrorCode::kConfig, message);
}

// One element of a phrasing.
struct Element {
  enum class Type { kWords, kSlot } type = Type::kWords;
  std::vector<std::string> options;  // alternatives; one entry for plain words
  bool optional = false;
  std::string slot;  // without '$'
};

std::vector<std::string> SplitAlternatives(std::string_view body) {
  std::vector<std::string> options;
  size_t begin = 0;
  while (true) {
    size_t bar = body.find('|', begin);
    std::string option = Trim(body.substr(begin, bar - begin));
    if (option.empty()) ConfigError("empty alternative in phrasing");
    options.push_back(std::move(option));
    if (bar == std::string_view::npos) break;
    begin = bar + 1;
  }
  return options;
}

std::vector<Element> ParsePhrasing(std::string_view phrasing) {
  std::vector<Element> elements;
  size_t i = 0;
  while (i < phrasing.size()) {
    char c = phrasing[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Element element;
    if (c == '(' || c == '[') {
      char close = c == '(' ? ')' : ']';
      size_t end = phrasing.find(close, i + 1);
      if (end == std::string_view::npos) {
        ConfigError("unbalanced group in phrasing '" + std::string(phrasing) + "'");
      }
      std::string_view body = phrasing.substr(i + 1, end - i - 1);
      if (body.find_first_of("()[]$") != std::string_view::npos) {
        ConfigError("nested group in phrasing '" + std::string(phrasing) + "'");
      }
      element.options = SplitAlternatives(body);
      element.optional = c == '[';
      i = end + 1;
    } else if (c == '$') {
      size_t end = i + 1;
      while (end < phrasing.size() &&
             std::isalnum(static_cast<unsigned char>(phrasing[end]))) {
        ++end;
      }
      element.type = Element::Type::kSlot;
      element.slot = std::string(phrasing.substr(i + 1, end - i - 1));
      ParseSlot(element.slot);
      i = end;
    } else {
      size_t end = i;
      while (end < phrasing.size() &&
             !std::isspace(static_cast<unsigned char>(phrasing[end])) &&
             std::string_view("()[]$").find(phrasing[end]) == std::string_view::npos) {
        ++end;
      }
      element.options = {std::string(phrasing.substr(i, end - i))};
      i = end;
    }
    elements.push_back(std::move(element));
  }
  if (elements.empty()) ConfigError("empty phrasing");
  return elements;
}

std::string EscapeRegex(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (std::string_view(R"(\^$.|?*+()[]{}/-)").find(c) != std::string_view::npos) {
      out.push_back('\\');
    }
    out.push_back(c);
  }
  return out;
}

std::regex CompilePhrasing(const std::vector<Element> &elements,
                           std::vector<Slot> *slot_order) {
  std::string pattern = "^";
  bool emitted = false;
  for (const Element &e : elements) {
    std::string body;
    if (e.type == Element::Type::kSlot) {
      body = "(.+?)";
      slot_order->push_back(ParseSlot(e.slot));
    } else {
      std::vector<std::string> escaped;
      for (const std::string &o : e.options) escaped.push_back(EscapeRegex(o));
      body = escaped.size() == 1 ? escaped[0] : "(?:" + Join(escaped, "|") + ")";
    }
    if (e.optional) {
      pattern += emitted ? "(?: " + body + ")?" : "(?:" + body + " )?";
    } else {
      pattern += emitted ? " " + body : body;
      emitted = true;
    }
  }
  pattern += "$";
  return std::regex(pattern, std::regex::ECMAScript | std::regex::icase |
                                 std::regex::optimize);
}

void ExpandFrom(const std::vector<Element> &elements, size_t index,
                std::vector<std::string> &parts, std::vector<std::string> &out) {
  if (index == elements.size()) {
    std::vector<std::string> nonempty;
    for (const std::string &p : parts) {
      if (!p.empty()) nonempty.push_back(p);
    }
    out.push_back(Join(nonempty, " "));
    return;
  }
  const Element &e = elements[index];
  if (e.type == Element::Type::kSlot) {
    parts.push_back("$" + e.slot);
    ExpandFrom(elements, index + 1, parts, out);
    parts.pop_back();
    return;
  }
  if (e.optional) {
    parts.push_back("");
    ExpandFrom(elements, index + 1, parts, out);
    parts.pop_back();
  }
  for (const std::string &option : e.options) {
    parts.push_back(option);
    ExpandFrom(elements, index + 1, parts, out);
    parts.pop_back();
  }
}

std::vector<Slot> SlotsOf(const std::vector<Element> &elements) {
  std::vector<Slot> slots;
  for (const Element &e : elements) {
    if (e.type == Element::Type::kSlot) slots.push_back(ParseSlot(e.slot));
  }
  return slots;
}

bool HasWord(std::string_view lowered, std::string_view word) {
  std::string padded = " " + std::string(lowered) + " ";
  return padded.find(" " + std::string(word) + " ") != std::string::npos;
}

std::string Lower(std::string_view text) {
  std::string out(text);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// Swaps numbered same-kind slots ($A1 <-> $A2) in an expanded phrasing.
std::vector<std::string> SlotOrderings(const std::string &text,
                                       const std::vector<Slot> &slots) {
  std::vector<std::string> out = {text};
  std::map<EntityKind, std::vector<std::string>> by_kind;
  for (const Slot &s : slots) by_kind[s.kind].push_back(s.name);
  for (const auto &[kind, names] : by_kind) {
    if (names.size() != 2) continue;
    std::string first = "$" + names[0];
    std::string second = "$" + names[1];
    size_t a = text.find(first);
    size_t b = text.find(second);
    if (a == std::string::npos || b == std::string::npos) continue;
    std::string swapped = text;
    // Replace the later occurrence first so earlier offsets stay valid.
    if (a < b) {
      swapped.replace(b, second.size(), first);
      swapped.replace(a, first.size(), second);
    } else {
      swapped.replace(a, first.size(), second);
      swapped.replace(b, second.size(), first);
    }
    out.push_back(std::move(swapped));
  }
  return out;
}

QueryClass ParseClass(const json &spec, const std::string &id) {
  std::string type = spec.value("class", "");
  QueryClass result;
  if (type == "binary") {
    result.type = QueryType::kBinary;
  } else if (type == "list") {
    result.type = QueryType::kList;
  } else if (type == "statistical") {
    result.type = QueryType::kStatistical;
    std::string subtype = spec.value("subtype", "");
    if (subtype == "temporal") result.subtype = StatSubtype::kTemporal;
    else if (subtype == "cumulative") result.subtype = StatSubtype::kCumulative;
    else if (subtype == "comparison") result.subtype = StatSubtype::kComparison;
    else ConfigError("template '" + id + "' needs a statistical subtype");
  } else {
    ConfigError("template '" + id + "' has unknown class '" + type + "'");
  }
  if (result.type != QueryType::kStatistical && spec.contains("subtype")) {
    ConfigError("template '" + id + "': only statistical templates have subtypes");
  }
  return result;
}

SlotPath ParseSlotPath(const std::string &text, const std::string &id) {
  size_t colon = text.find(':');
  if (colon == std::string::npos) {
    ConfigError("template '" + id + "': path '" + text + "' must be SLOT:METAPATH");
  }
  std::string slot = Trim(text.substr(0, colon));
  if (!slot.empty() && slot[0] == '$') slot.erase(0, 1);
  std::string path = text.substr(colon + 1);
  Direction direction =
      path.find('<') != std::string::npos ? Direction::kReverse : Direction::kForward;
  try {
    return {ParseSlot(slot).name, MetapathSpec::ParseCompact(path, direction)};
  } catch (const Error &e) {
    ConfigError("template '" + id + "': " + e.what());
  }
}

}  // namespace

std::string_view QueryTypeName(QueryType type) {
  switch (type) {
    case QueryType::kBinary: return "binary";
    case QueryType::kStatistical: return "statistical";
    case QueryType::kList: return "list";
  }
  return "unknown";
}

std::string_view StatSubtypeName(StatSubtype subtype) {
  switch (subtype) {
    case StatSubtype::kNone: return "none";
    case StatSubtype::kTemporal: return "temporal";
    case StatSubtype::kCumulative: return "cumulative";
    case StatSubtype::kComparison: return "comparison";
  }
  return "unknown";
}

std::string QueryClass::ToString() const {
  std::string out(QueryTypeName(type));
  if (type == QueryType::kStatistical) {
    out += '/';
    out += StatSubtypeName(subtype);
  }
  return out;
}

Slot ParseSlot(std::string_view text) {
  if (!text.empty() && text[0] == '$') text.remove_prefix(1);
  if (text.empty()) ConfigError("empty slot name");
  auto kind = ParseKind(text.substr(0, 1));
  if (!kind) ConfigError("slot '$" + std::string(text) + "' has no entity kind");
  for (char c : text.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      ConfigError("slot '$" + std::string(text) + "' must be a kind letter and digits");
    }
  }
  std::string name(text);
  name[0] = KindLetter(*kind);
  return {name, *kind};
}

std::vector<std::string> ExpandPhrasing(std::string_view phrasing) {
  std::vector<Element> elements = ParsePhrasing(phrasing);
  std::vector<std::string> parts;
  std::vector<std::string> out;
  ExpandFrom(elements, 0, parts, out);
  return out;
}

std::string NormalizeQueryText(std::string_view text) {
  std::string collapsed;
  bool space = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      space = true;
      continue;
    }
    if (space && !collapsed.empty()) collapsed.push_back(' ');
    space = false;
    collapsed.push_back(c);
  }
  while (!collapsed.empty() &&
         (collapsed.back() == '?' || collapsed.back() == '.' ||
          collapsed.back() == '!' || collapsed.back() == ' ')) {
    collapsed.pop_back();
  }
  return collapsed;
}

std::optional<QueryType> LeadingQueryType(std::string_view normalized_text) {
  std::string lowered = Lower(normalized_text);
  size_t space = lowered.find(' ');
  std::string first = lowered.substr(0, space);
  static const std::set<std::string> kBinary = {"is",  "are", "has", "have", "does",
                                                "do",  "did", "was", "were"};
  static const std::set<std::string> kList = {"list", "show", "give", "find"};
  if (kBinary.count(first) > 0) return QueryType::kBinary;
  if (kList.count(first) > 0) return QueryType::kList;
  if (first == "compare" || lowered.rfind("how many ", 0) == 0) {
    return QueryType::kStatistical;
  }
  return std::nullopt;
}

StatSubtype CueSubtype(std::string_view normalized_text, std::span<const Slot> slots) {
  std::string lowered = Lower(normalized_text);
  static const char *const kTemporalCues[] = {"over the years", "year-wise", "year wise",
                                              "per year",       "each year", "every year",
                                              "by year",        "yearly",    "annually"};
  for (const char *cue : kTemporalCues) {
    if (HasWord(lowered, cue)) return StatSubtype::kTemporal;
  }
  static const char *const kComparisonCues[] = {"compare", "compared", "versus", "vs"};
  for (const char *cue : kComparisonCues) {
    if (HasWord(lowered, cue)) return StatSubtype::kComparison;
  }
  std::map<EntityKind, int> per_kind;
  for (const Slot &s : slots) {
    if (++per_kind[s.kind] >= 2 && !HasWord(lowered, "together")) {
      return StatSubtype::kComparison;
    }
  }
  return StatSubtype::kCumulative;
}

std::vector<CatalogEntry> ExpandTemplates(std::span<const QueryTemplate> templates) {
  std::vector<CatalogEntry> entries;
  std::map<std::string, std::string> owner;  // lowered text -> template id
  for (const QueryTemplate &t : templates) {
    if (t.phrasings.empty()) ConfigError("template '" + t.id + "' has no phrasings");
    std::set<std::string> plan_slots;
    for (const SlotPath &p : t.plan.paths) plan_slots.insert(p.slot);

    for (const std::string &phrasing : t.phrasings) {
      std::vector<Element> elements = ParsePhrasing(phrasing);
      std::vector<Slot> slots = SlotsOf(elements);
      std::set<std::string> phrasing_slots;
      for (const Slot &s : slots) {
        if (!phrasing_slots.insert(s.name).second) {
          ConfigError("template '" + t.id + "': slot $" + s.name + " repeats in '" +
                      phrasing + "'");
        }
      }
      if (phrasing_slots != plan_slots) {
        ConfigError("template '" + t.id + "': slots of '" + phrasing +
                    "' do not match its plan");
      }
      for (const std::string &expanded : ExpandPhrasing(phrasing)) {
        for (std::string &text : SlotOrderings(expanded, slots)) {
          if (t.query_class.type == QueryType::kStatistical &&
              CueSubtype(text, slots) != t.query_class.subtype) {
            ConfigError("template '" + t.id + "': '" + text + "' reads as " +
                        std::string(StatSubtypeName(CueSubtype(text, slots))));
          }
          std::string key = Lower(text);
          auto [it, inserted] = owner.emplace(key, t.id);
          if (!inserted) {
            if (it->second != t.id) {
              ConfigError("query '" + text + "' belongs to both '" + it->second +
                          "' and '" + t.id + "'");
            }
            continue;
          }
          entries.push_back({t.id, std::move(text)});
        }
      }
    }
  }
  return entries;
}

TemplateCatalog::TemplateCatalog(std::vector<QueryTemplate> templates)
    : templates_(std::move(templates)) {
  std::set<std::string> ids;
  for (QueryTemplate &t : templates_) {
    if (t.id.empty()) ConfigError("template without an id");
    if (!ids.insert(t.id).second) ConfigError("duplicate template id '" + t.id + "'");
    if (t.plan.paths.empty()) ConfigError("template '" + t.id + "' has an empty plan");
    if ((t.query_class.type == QueryType::kStatistical) !=
        (t.query_class.subtype != StatSubtype::kNone)) {
      ConfigError("template '" + t.id + "': subtype must accompany statistical class");
    }
    if ((t.plan.combine == Combine::kCompare) !=
        (t.query_class.subtype == StatSubtype::kComparison)) {
      ConfigError("template '" + t.id + "': comparison class and compare plan go together");
    }
    t.slots.clear();
    std::optional<EntityKind> terminal;
    for (const SlotPath &p : t.plan.paths) {
      Slot slot = ParseSlot(p.slot);
      if (slot.kind != p.metapath.kinds().front()) {
        ConfigError("template '" + t.id + "': path of $" + slot.name + " starts at " +
                    std::string(1, KindLetter(p.metapath.kinds().front())));
      }
      if (terminal && *terminal != p.metapath.kinds().back()) {
        ConfigError("template '" + t.id + "': paths end at different kinds");
      }
      terminal = p.metapath.kinds().back();
      t.slots.push_back(slot);
    }
    if (t.plan.filter == ResultFilter::kPositiveSentiment &&
        terminal != EntityKind::kPaper) {
      ConfigError("template '" + t.id + "': sentiment filter needs paper results");
    }
    if (t.query_class.subtype == StatSubtype::kTemporal && terminal != EntityKind::kPaper) {
      ConfigError("template '" + t.id + "': year series need paper results");
    }
  }
  entries_ = ExpandTemplates(templates_);
  for (size_t i = 0; i < templates_.size(); ++i) {
    for (const std::string &phrasing : templates_[i].phrasings) {
      CompiledPhrasing compiled{i, {}, {}};
      compiled.pattern = CompilePhrasing(ParsePhrasing(phrasing), &compiled.slot_order);
      compiled_.push_back(std::move(compiled));
    }
  }
}

TemplateCatalog TemplateCatalog::FromJson(const json &config) {
  if (!config.is_object() || !config.contains("templates") ||
      !config["templates"].is_array()) {
    ConfigError("catalog must be an object with a 'templates' list");
  }
  std::vector<QueryTemplate> templates;
  try {
    for (const json &spec : config["templates"]) {
      QueryTemplate t;
      t.id = spec.at("id").get<std::string>();
      t.query_class = ParseClass(spec, t.id);
      t.table_row = spec.value("row", 0);
      t.example = spec.value("example", "");
      for (const json &p : spec.at("phrasings")) t.phrasings.push_back(p.get<std::string>());
      const json &plan = spec.at("plan");
      for (const json &p : plan.at("paths")) {
        t.plan.paths.push_back(ParseSlotPath(p.get<std::string>(), t.id));
      }
      std::string combine = plan.value("combine", "intersect");
      if (combine == "compare") t.plan.combine = Combine::kCompare;
      else if (combine != "intersect") ConfigError("template '" + t.id + "': bad combine");
      std::string filter = plan.value("filter", "none");
      if (filter == "positive_sentiment") t.plan.filter = ResultFilter::kPositiveSentiment;
      else if (filter != "none") ConfigError("template '" + t.id + "': bad filter");
      templates.push_back(std::move(t));
    }
  } catch (const json::exception &e) {
    ConfigError(std::string("malformed catalog: ") + e.what());
  }
  return TemplateCatalog(std::move(templates));
}

TemplateCatalog TemplateCatalog::Parse(std::string_view json_text) {
  try {
    return FromJson(json::parse(json_text));
  } catch (const json::parse_error &e) {
    ConfigError(std::string("catalog is not valid JSON: ") + e.what());
  }
}

TemplateCatalog TemplateCatalog::Load(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read catalog " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return Parse(text);
}

const TemplateCatalog &TemplateCatalog::Default() {
  static const TemplateCatalog catalog = Parse(DefaultTemplateCatalogText());
  return catalog;
}

const QueryTemplate &TemplateCatalog::Get(std::string_view id) const {
  for (const QueryTemplate &t : templates_) {
    if (t.id == id) return t;
  }
  throw Error(ErrorCode::kNotFound, "no template '" + std::string(id) + "'");
}

ClassifiedQuery TemplateCatalog::Classify(std::string_view text) const {
  std::string normalized = NormalizeQueryText(text);
  if (normalized.empty()) {
    throw Error(ErrorCode::kUnsupportedQuery, "empty query");
  }
  std::optional<QueryType> type = LeadingQueryType(normalized);
  if (!type) {
    throw Error(ErrorCode::kUnsupportedQuery,
                "unsupported query '" + normalized + "': unknown question form");
  }
  const CompiledPhrasing *best = nullptr;
  std::smatch best_match;
  size_t best_specificity = 0;
  for (const CompiledPhrasing &c : compiled_) {
    if (templates_[c.template_index].query_class.type != *type) continue;
    std::smatch m;
    if (!std::regex_match(normalized, m, c.pattern)) continue;
    size_t captured = 0;
    for (size_t i = 1; i < m.size(); ++i) captured += m[i].length();
    size_t specificity = normalized.size() - captured;
    if (best == nullptr || specificity > best_specificity ||
        (specificity == best_specificity && c.template_index < best->template_index)) {
      best = &c;
      best_match = std::move(m);
      best_specificity = specificity;
    }
  }
  if (best == nullptr) {
    throw Error(ErrorCode::kUnsupportedQuery,
                "unsupported query '" + normalized + "': no template matches");
  }
  const QueryTemplate &t = templates_[best->template_index];
  ClassifiedQuery result;
  result.query_class = t.query_class;
  result.template_id = t.id;
  result.normalized_text = normalized;
  for (size_t i = 0; i < best->slot_order.size(); ++i) {
    result.mentions.push_back({best->slot_order[i], best_match[i + 1].str()});
  }
  return result;
}

ClassifiedQuery ClassifyQuery(std::string_view text, const TemplateCatalog &catalog) {
  return catalog.Classify(text);
}

double LinkScore(std::string_view span, std::string_view name) {
  std::string a = FoldCase(Trim(span));
  std::string b = FoldCase(Trim(name));
  if (b.empty()) return 0.0;
  return static_cast<double>(LongestCommonSubsequence(a, b)) /
         static_cast<double>(b.size());
}

Bindings LinkEntities(std::span<const SlotMention> mentions, const KnowledgeGraph &g) {
  Bindings bindings;
  std::set<NodeIndex> used;
  for (const SlotMention &mention : mentions) {
    const std::string span = FoldCase(Trim(mention.span));
    std::optional<NodeIndex> best;
    double best_score = 0.0;
    size_t best_length = 0;
    for (NodeIndex candidate : g.nodes(mention.slot.kind)) {
      if (used.count(candidate) > 0) continue;
      const std::string name = FoldCase(Trim(g.node(candidate).display));
      if (name.empty()) continue;
      // LCS <= |span|, so short spans cannot reach the threshold.
      if (static_cast<double>(span.size()) < kLinkThreshold * static_cast<double>(name.size())) {
        continue;
      }
      double score = static_cast<double>(LongestCommonSubsequence(span, name)) /
                     static_cast<double>(name.size());
      if (score < kLinkThreshold) continue;
      if (!best || score > best_score ||
          (score == best_score && name.size() > best_length)) {
        best = candidate;
        best_score = score;
        best_length = name.size();
      }
    }
    if (!best) {
      throw Error(ErrorCode::kEntityNotFound,
                  "no " + std::string(KindName(mention.slot.kind)) + " matches '" +
                      Trim(mention.span) + "' for slot $" + mention.slot.name);
    }
    used.insert(*best);
    bindings[mention.slot.name] = *best;
  }
  return bindings;
}

namespace {

// Runs one pipeline stage, prefixing error messages with its name.
template <typename Fn>
auto Stage(const char *name, Fn &&fn) {
  try {
    return fn();
  } catch (const Error &e) {
    throw Error(e.code(), std::string(name) + ": " + e.what());
  }
}

}  // namespace

ParsedQuery ParseQuery(std::string_view text, const KnowledgeGraph &g,
                       const TemplateCatalog &catalog) {
  ClassifiedQuery classified = Stage("classify", [&] { return catalog.Classify(text); });
  ParsedQuery parsed;
  parsed.query_class = classified.query_class;
  parsed.template_id = classified.template_id;
  parsed.raw_text = std::string(text);
  parsed.bindings = Stage("link", [&] { return LinkEntities(classified.mentions, g); });
  return parsed;
}

QueryPlan PlanQuery(const ParsedQuery &parsed, const TemplateCatalog &catalog) {
  const QueryTemplate &t = catalog.Get(parsed.template_id);
  QueryPlan plan;
  plan.template_id = t.id;
  plan.query_class = t.query_class;
  plan.combine = t.plan.combine;
  plan.filter = t.plan.filter;
  for (const SlotPath &path : t.plan.paths) {
    auto it = parsed.bindings.find(path.slot);
    if (it == parsed.bindings.end()) {
      throw Error(ErrorCode::kInvalidArgument, "slot $" + path.slot + " is unbound");
    }
    plan.traversals.push_back({path.slot, it->second, path.metapath});
  }
  return plan;
}

Answer Execute(const QueryPlan &plan, const KnowledgeGraph &g,
               const SentimentScorer &scorer) {
  Answer answer;
  answer.query_class = plan.query_class;
  answer.template_id = plan.template_id;

  auto apply_filter = [&](std::vector<NodeIndex> nodes) {
    if (plan.filter == ResultFilter::kPositiveSentiment) {
      std::erase_if(nodes, [&](NodeIndex p) {
        return !(AggregateSentiment(g, p, scorer).mean > 0.0);
      });
    }
    return nodes;
  };

  std::vector<std::vector<NodeIndex>> sets;
  for (const PlannedTraversal &t : plan.traversals) {
    answer.bindings[t.slot] = t.start;
    answer.metapaths.push_back("$" + t.slot + ":" + t.metapath.ToString());
    sets.push_back(apply_filter(MetapathTargets(g, t.start, t.metapath)));
  }

  if (plan.combine == Combine::kCompare) {
    StatisticAnswer stats;
    stats.subtype = StatSubtype::kComparison;
    for (size_t i = 0; i < sets.size(); ++i) {
      int64_t count = static_cast<int64_t>(sets[i].size());
      stats.rows.push_back({plan.traversals[i].slot, plan.traversals[i].start, count});
      stats.total += count;
    }
    answer.result = std::move(stats);
    return answer;
  }

  std::vector<NodeIndex> result = sets.empty() ? std::vector<NodeIndex>{} : sets[0];
  for (size_t i = 1; i < sets.size(); ++i) {
    std::vector<NodeIndex> next;
    std::set_intersection(result.begin(), result.end(), sets[i].begin(), sets[i].end(),
                          std::back_inserter(next));
    result = std::move(next);
  }

  switch (plan.query_class.type) {
    case QueryType::kBinary:
      answer.result = YesNoAnswer{!result.empty(), static_cast<int64_t>(result.size())};
      break;
    case QueryType::kStatistical: {
      StatisticAnswer stats;
      stats.subtype = plan.query_class.subtype;
      stats.total = static_cast<int64_t>(result.size());
      if (stats.subtype == StatSubtype::kTemporal) {
        std::vector<int> years;
        for (NodeIndex p : result) years.push_back(g.year(p));
        stats.series = YearSeries::FromYears(years);
      }
      answer.result = std::move(stats);
      break;
    }
    case QueryType::kList:
      answer.result = ListAnswer{RankEntities(g, result)};
      break;
  }
  return answer;
}

Answer AnswerQuery(std::string_view text, const KnowledgeGraph &g,
                   const TemplateCatalog &catalog, const SentimentScorer &scorer) {
  ParsedQuery parsed = ParseQuery(text, g, catalog);
  QueryPlan plan = Stage("plan", [&] { return PlanQuery(parsed, catalog); });
  return Stage("execute", [&] { return Execute(plan, g, scorer); });
}

std::string InstantiateExample(std::string_view pattern,
                               const std::map<std::string, std::string> &slot_text) {
  std::string out;
  size_t i = 0;
  while (i < pattern.size()) {
    if (pattern[i] != '$') {
      out.push_back(pattern[i++]);
      continue;
    }
    size_t end = i + 1;
    while (end < pattern.size() && std::isalnum(static_cast<unsigned char>(pattern[end]))) {
      ++end;
    }
    std::string slot(pattern.substr(i + 1, end - i - 1));
    auto it = slot_text.find(slot);
    if (it == slot_text.end()) {
      throw Error(ErrorCode::kInvalidArgument, "no text for slot $" + slot);
    }
    out += it->second;
    i = end;
  }
  return out;
}

}  // namespace scholargraph
