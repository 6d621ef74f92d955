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
#include "scholargraph/render.h"

#include <sstream>

namespace scholargraph {
namespace {

using json = nlohmann::json;

json Entities(const KnowledgeGraph &g, std::span<const NodeIndex> nodes) {
  json out = json::array();
  for (NodeIndex n : nodes) out.push_back(EntityJson(g, n));
  return out;
}

json Counted(const KnowledgeGraph &g, std::span<const EntityCount> counts) {
  json out = json::array();
  for (const EntityCount &c : counts) {
    json entry = EntityJson(g, c.node);
    entry["count"] = c.count;
    out.push_back(std::move(entry));
  }
  return out;
}

std::string Label(const KnowledgeGraph &g, NodeIndex node) {
  const NodeInfo &info = g.node(node);
  if (info.display == info.id) return info.id;
  return info.display + " (" + info.id + ")";
}

void SeriesLines(std::ostream &out, std::string_view heading,
                 std::span<const YearCount> series) {
  out << heading << ":";
  if (series.empty()) out << " none";
  out << '\n';
  for (const YearCount &yc : series) out << "  " << yc.year << '\t' << yc.count << '\n';
}

void EntityLines(std::ostream &out, const KnowledgeGraph &g, std::string_view heading,
                 std::span<const NodeIndex> nodes) {
  out << heading << ":";
  if (nodes.empty()) out << " none";
  out << '\n';
  for (NodeIndex n : nodes) out << "  " << Label(g, n) << '\n';
}

void CountLines(std::ostream &out, const KnowledgeGraph &g, std::string_view heading,
                std::span<const EntityCount> counts) {
  out << heading << ":";
  if (counts.empty()) out << " none";
  out << '\n';
  for (const EntityCount &c : counts) out << "  " << Label(g, c.node) << '\t' << c.count << '\n';
}

}  // namespace

json EntityJson(const KnowledgeGraph &g, NodeIndex node) {
  const NodeInfo &info = g.node(node);
  return {{"kind", KindName(info.kind)}, {"id", info.id}, {"name", info.display}};
}

json SeriesJson(std::span<const YearCount> series) {
  json out = json::array();
  for (const YearCount &yc : series) out.push_back({{"year", yc.year}, {"count", yc.count}});
  return out;
}

json AnswerJson(const Answer &answer, const KnowledgeGraph &g) {
  json out;
  out["template"] = answer.template_id;
  out["class"] = answer.query_class.ToString();
  json bindings = json::object();
  for (const auto &[slot, node] : answer.bindings) bindings[slot] = EntityJson(g, node);
  out["bindings"] = std::move(bindings);
  out["metapaths"] = answer.metapaths;
  if (const auto *yes_no = std::get_if<YesNoAnswer>(&answer.result)) {
    out["answer"] = yes_no->value;
    out["evidence"] = yes_no->evidence;
  } else if (const auto *stats = std::get_if<StatisticAnswer>(&answer.result)) {
    switch (stats->subtype) {
      case StatSubtype::kTemporal:
        out["answer"] = SeriesJson(stats->series.entries());
        break;
      case StatSubtype::kComparison: {
        json rows = json::array();
        for (const ComparisonRow &row : stats->rows) {
          json entry = EntityJson(g, row.entity);
          entry["slot"] = row.slot;
          entry["count"] = row.count;
          rows.push_back(std::move(entry));
        }
        out["answer"] = std::move(rows);
        break;
      }
      default:
        out["answer"] = stats->total;
        break;
    }
    out["total"] = stats->total;
  } else {
    const auto &list = std::get<ListAnswer>(answer.result);
    out["answer"] = Entities(g, list.entities);
    out["total"] = list.entities.size();
  }
  return out;
}

json ProfileJson(const PaperProfile &p, const KnowledgeGraph &g) {
  json out = EntityJson(g, p.paper);
  out["title"] = p.title;
  out["authors"] = Entities(g, p.authors);
  out["affiliations"] = p.affiliations;
  out["abstract"] = p.abstract;
  out["year"] = p.year;
  out["venue"] = EntityJson(g, p.venue);
  out["fields"] = Entities(g, p.fields);
  out["citations"] = SeriesJson(p.citations.entries());
  out["cumulative_citations"] = p.cumulative_citations;
  out["references"] = Entities(g, p.references);
  out["citers"] = Entities(g, p.citers);
  out["co_cited"] = Counted(g, p.co_cited);
  out["urls"] = p.urls;
  out["sentiment"] = {{"mean", p.sentiment.mean}, {"contexts", p.sentiment.count}};
  json summary = json::array();
  for (size_t i = 0; i < p.summary.sentences.size(); ++i) {
    summary.push_back({{"sentence", p.summary.sentences[i]},
                       {"source", EntityJson(g, p.summary.sources[i])}});
  }
  out["summary"] = std::move(summary);
  return out;
}

json ProfileJson(const AuthorProfile &p, const KnowledgeGraph &g) {
  json out = EntityJson(g, p.author);
  out["affiliations"] = p.affiliations;
  out["publications"] = SeriesJson(p.publications.entries());
  out["citations"] = SeriesJson(p.citations.entries());
  out["collaborators"] = Counted(g, p.collaborators.authors);
  out["mean_joint_papers"] = p.collaborators.mean_joint_papers;
  out["h_index"] = p.h_index;
  out["h_index_by_year"] = SeriesJson(p.h_index_by_year);
  json topics = json::array();
  for (const auto &[year, fields] : p.topics) {
    topics.push_back({{"year", year}, {"fields", fields}});
  }
  out["topics"] = std::move(topics);
  out["papers"] = Entities(g, p.papers);
  return out;
}

json ProfileJson(const VenueProfile &p, const KnowledgeGraph &g) {
  json out = EntityJson(g, p.venue);
  out["publications"] = SeriesJson(p.publications.entries());
  out["citations"] = SeriesJson(p.citations.entries());
  json impact = json::array();
  for (const ImpactFactor &f : p.impact_factors) {
    impact.push_back({{"year", f.year},
                      {"value", f.value()},
                      {"citations", f.citations},
                      {"papers", f.papers},
                      {"empty_window", f.empty_window}});
  }
  out["impact_factors"] = std::move(impact);
  out["recently_held_year"] = p.recently_held_year;
  out["collaborating_venues"] = Counted(g, p.collaborating_venues);
  out["top_papers"] = Entities(g, p.top_papers);
  return out;
}

json SearchJson(std::span<const SearchHit> hits, const KnowledgeGraph &g) {
  json out = json::array();
  for (const SearchHit &hit : hits) {
    json entry = EntityJson(g, hit.node);
    entry["popularity"] = hit.popularity;
    out.push_back(std::move(entry));
  }
  return out;
}

std::string AnswerText(const Answer &answer, const KnowledgeGraph &g) {
  std::ostringstream out;
  if (const auto *yes_no = std::get_if<YesNoAnswer>(&answer.result)) {
    out << (yes_no->value ? "yes" : "no") << '\n';
  } else if (const auto *stats = std::get_if<StatisticAnswer>(&answer.result)) {
    switch (stats->subtype) {
      case StatSubtype::kTemporal:
        if (stats->series.empty()) out << "none\n";
        for (const YearCount &yc : stats->series.entries()) {
          out << yc.year << '\t' << yc.count << '\n';
        }
        break;
      case StatSubtype::kComparison:
        for (const ComparisonRow &row : stats->rows) {
          out << Label(g, row.entity) << '\t' << row.count << '\n';
        }
        break;
      default:
        out << stats->total << '\n';
        break;
    }
  } else {
    const auto &list = std::get<ListAnswer>(answer.result);
    if (list.entities.empty()) out << "none\n";
    for (NodeIndex n : list.entities) {
      out << Label(g, n) << '\n';
    }
  }
  return out.str();
}

std::string ProfileText(const PaperProfile &p, const KnowledgeGraph &g) {
  std::ostringstream out;
  out << p.title << " (" << g.node(p.paper).id << ")\n";
  out << "year: " << p.year << "\nvenue: " << Label(g, p.venue) << '\n';
  EntityLines(out, g, "authors", p.authors);
  EntityLines(out, g, "fields", p.fields);
  out << "citations: " << p.cumulative_citations << '\n';
  SeriesLines(out, "citations by year", p.citations.entries());
  EntityLines(out, g, "references", p.references);
  EntityLines(out, g, "cited by", p.citers);
  CountLines(out, g, "co-cited with", p.co_cited);
  out << "sentiment: " << p.sentiment.mean << " over " << p.sentiment.count
      << " contexts\n";
  out << "summary:" << (p.summary.sentences.empty() ? " none" : "") << '\n';
  for (const std::string &s : p.summary.sentences) out << "  " << s << '\n';
  return out.str();
}

std::string ProfileText(const AuthorProfile &p, const KnowledgeGraph &g) {
  std::ostringstream out;
  out << p.name << " (" << g.node(p.author).id << ")\n";
  out << "h-index: " << p.h_index << '\n';
  SeriesLines(out, "publications", p.publications.entries());
  SeriesLines(out, "citations", p.citations.entries());
  CountLines(out, g, "collaborators", p.collaborators.authors);
  EntityLines(out, g, "papers", p.papers);
  return out.str();
}

std::string ProfileText(const VenueProfile &p, const KnowledgeGraph &g) {
  std::ostringstream out;
  out << p.name << '\n';
  out << "recently held: " << p.recently_held_year << '\n';
  SeriesLines(out, "publications", p.publications.entries());
  SeriesLines(out, "citations", p.citations.entries());
  out << "impact factor:" << (p.impact_factors.empty() ? " none" : "") << '\n';
  for (const ImpactFactor &f : p.impact_factors) {
    out << "  " << f.year << '\t' << f.value() << '\n';
  }
  CountLines(out, g, "collaborating venues", p.collaborating_venues);
  EntityLines(out, g, "top papers", p.top_papers);
  return out.str();
}

}  // namespace scholargraph
