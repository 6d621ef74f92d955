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
#include "oracles.h"

#include <algorithm>
#include <functional>
#include <set>

namespace scholargraph::testing {
namespace {

template <typename T>
void Dedup(std::vector<T> &v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

EdgeList EdgesOf(const std::vector<PaperRecord> &records) {
  EdgeList e;
  for (const PaperRecord &r : records) {
    Key p{'P', r.paper_id};
    for (const std::string &a : r.author_ids) e.authored.push_back({{'A', a}, p});
    e.published.push_back({p, {'V', r.venue_id}});
    for (const std::string &f : r.field_ids) e.in_field.push_back({p, {'F', f}});
    for (const std::string &c : r.cited_paper_ids) e.cites.push_back({p, {'P', c}});
  }
  Dedup(e.authored);
  Dedup(e.published);
  Dedup(e.in_field);
  Dedup(e.cites);
  return e;
}

std::map<Key, int64_t> BrutePaths(const std::vector<PaperRecord> &records, const Key &start,
                                  const std::string &kinds, bool cites_forward) {
  EdgeList e = EdgesOf(records);
  // Every edge usable in both orientations; a step from kind x to kind y
  // takes edges whose endpoints have those kinds.
  auto next = [&](const Key &from, char to_kind) {
    std::vector<Key> out;
    auto scan = [&](const std::vector<std::pair<Key, Key>> &edges) {
      for (const auto &[s, t] : edges) {
        if (s == from && t.first == to_kind) out.push_back(t);
        if (t == from && s.first == to_kind) out.push_back(s);
      }
    };
    if (from.first == 'P' && to_kind == 'P') {
      for (const auto &[s, t] : e.cites) {
        if (cites_forward && s == from) out.push_back(t);
        if (!cites_forward && t == from) out.push_back(s);
      }
      return out;
    }
    scan(e.authored);
    scan(e.published);
    scan(e.in_field);
    return out;
  };
  std::map<Key, int64_t> arrivals;
  std::function<void(const Key &, size_t)> walk = [&](const Key &at, size_t depth) {
    if (depth + 1 == kinds.size()) {
      ++arrivals[at];
      return;
    }
    for (const Key &n : next(at, kinds[depth + 1])) walk(n, depth + 1);
  };
  walk(start, 0);
  return arrivals;
}

std::map<std::string, int64_t> BruteCitationCounts(const std::vector<PaperRecord> &records) {
  std::map<std::string, int64_t> counts;
  for (const PaperRecord &r : records) counts[r.paper_id];
  for (const auto &[citing, cited] : EdgesOf(records).cites) ++counts[cited.second];
  return counts;
}

int64_t BruteHIndex(const std::vector<int64_t> &counts) {
  int64_t best = 0;
  for (int64_t h = 0; h <= static_cast<int64_t>(counts.size()); ++h) {
    int64_t at_least = std::count_if(counts.begin(), counts.end(),
                                     [h](int64_t c) { return c >= h; });
    if (at_least >= h) best = h;
  }
  return best;
}

int64_t BruteAuthorHIndex(const std::vector<PaperRecord> &records, const std::string &author,
                          std::optional<int> up_to_year) {
  std::map<std::string, int> year;
  for (const PaperRecord &r : records) year[r.paper_id] = r.year;
  EdgeList e = EdgesOf(records);
  std::vector<int64_t> counts;
  for (const auto &[a, p] : e.authored) {
    if (a.second != author) continue;
    if (up_to_year && year[p.second] > *up_to_year) continue;
    int64_t c = 0;
    for (const auto &[citing, cited] : e.cites) {
      if (cited == p && (!up_to_year || year[citing.second] <= *up_to_year)) ++c;
    }
    counts.push_back(c);
  }
  return BruteHIndex(counts);
}

BruteImpact BruteImpactFactor(const std::vector<PaperRecord> &records, const std::string &venue,
                              int year) {
  std::map<std::string, const PaperRecord *> by_id;
  for (const PaperRecord &r : records) by_id[r.paper_id] = &r;
  BruteImpact out;
  for (const PaperRecord &r : records) {
    if (r.venue_id == venue && (r.year == year - 1 || r.year == year - 2)) ++out.papers;
  }
  for (const auto &[citing, cited] : EdgesOf(records).cites) {
    const PaperRecord *from = by_id[citing.second];
    const PaperRecord *to = by_id[cited.second];
    if (from->year == year && to->venue_id == venue &&
        (to->year == year - 1 || to->year == year - 2)) {
      ++out.citations;
    }
  }
  return out;
}

std::map<std::string, int64_t> BruteCoCited(const std::vector<PaperRecord> &records,
                                            const std::string &paper) {
  std::map<std::string, int64_t> out;
  for (const PaperRecord &r : records) {
    std::set<std::string> refs(r.cited_paper_ids.begin(), r.cited_paper_ids.end());
    if (refs.count(paper) == 0) continue;
    for (const std::string &other : refs) {
      if (other != paper) ++out[other];
    }
  }
  return out;
}

std::map<std::string, int64_t> BruteCollaborators(const std::vector<PaperRecord> &records,
                                                  const std::string &author) {
  std::map<std::string, int64_t> out;
  for (const PaperRecord &r : records) {
    std::set<std::string> authors(r.author_ids.begin(), r.author_ids.end());
    if (authors.count(author) == 0) continue;
    for (const std::string &other : authors) {
      if (other != author) ++out[other];
    }
  }
  return out;
}

}  // namespace scholargraph::testing
