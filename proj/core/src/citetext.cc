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
#include "scholargraph/citetext.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "scholargraph/assets.h"
#include "scholargraph/error.h"
#include "scholargraph/text.h"

namespace scholargraph {

SentimentLexicon::SentimentLexicon(std::set<std::string> positive,
                                   std::set<std::string> negative)
    : positive_(std::move(positive)), negative_(std::move(negative)) {
  for (const std::string &token : positive_) {
    if (negative_.count(token) > 0) {
      throw Error(ErrorCode::kConfig,
                  "token '" + token + "' is both positive and negative");
    }
  }
}

SentimentLexicon SentimentLexicon::Parse(std::istream &in) {
  std::set<std::string> positive, negative;
  std::set<std::string> *section = nullptr;
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::string token = Trim(line);
    if (token.empty() || token[0] == '#') continue;
    if (token == "+") { section = &positive; continue; }
    if (token == "-" || token == "−") { section = &negative; continue; }
    if (section == nullptr) {
      throw Error(ErrorCode::kConfig, "lexicon line " + std::to_string(line_number) +
                                          ": token before a +/- header");
    }
    for (std::string &t : Tokenize(token)) section->insert(std::move(t));
  }
  return SentimentLexicon(std::move(positive), std::move(negative));
}

SentimentLexicon SentimentLexicon::FromString(std::string_view text) {
  std::istringstream in{std::string(text)};
  return Parse(in);
}

SentimentLexicon SentimentLexicon::Load(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read lexicon " + path.string());
  return Parse(in);
}

const SentimentLexicon &SentimentLexicon::Default() {
  static const SentimentLexicon lexicon = FromString(DefaultLexiconText());
  return lexicon;
}

SentimentLexicon::Hits SentimentLexicon::Count(std::string_view context) const {
  Hits hits;
  for (const std::string &token : Tokenize(context)) {
    if (positive_.count(token) > 0) ++hits.positive;
    else if (negative_.count(token) > 0) ++hits.negative;
  }
  return hits;
}

double SentimentLexicon::Score(std::string_view context) const {
  Hits hits = Count(context);
  return static_cast<double>(hits.positive - hits.negative) /
         static_cast<double>(std::max<int64_t>(1, hits.positive + hits.negative));
}

double ScoreContext(std::string_view context, const SentimentScorer &scorer) {
  return scorer.Score(context);
}

SentimentAggregate AggregateSentiment(const KnowledgeGraph &g, NodeIndex paper,
                                      const SentimentScorer &scorer) {
  SentimentAggregate aggregate;
  double total = 0.0;
  for (const IncomingContext &context : g.incoming_contexts(paper)) {
    total += scorer.Score(context.sentence);
    ++aggregate.count;
  }
  if (aggregate.count > 0) aggregate.mean = total / static_cast<double>(aggregate.count);
  return aggregate;
}

StopwordList StopwordList::Parse(std::istream &in) {
  std::set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    std::string word = Trim(line);
    if (word.empty() || word[0] == '#') continue;
    for (std::string &t : Tokenize(word)) words.insert(std::move(t));
  }
  return StopwordList(std::move(words));
}

StopwordList StopwordList::FromString(std::string_view text) {
  std::istringstream in{std::string(text)};
  return Parse(in);
}

StopwordList StopwordList::Load(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read stopwords " + path.string());
  return Parse(in);
}

const StopwordList &StopwordList::Default() {
  static const StopwordList stopwords = FromString(DefaultStopwordsText());
  return stopwords;
}

TermVector TermFrequencies(std::string_view sentence, const StopwordList &stopwords) {
  TermVector tf;
  for (std::string &token : Tokenize(sentence)) {
    if (!stopwords.contains(token)) tf[std::move(token)] += 1.0;
  }
  return tf;
}

double CosineSimilarity(const TermVector &a, const TermVector &b) {
  double dot = 0.0, norm_a = 0.0, norm_b = 0.0;
  for (const auto &[term, weight] : a) {
    norm_a += weight * weight;
    auto it = b.find(term);
    if (it != b.end()) dot += weight * it->second;
  }
  for (const auto &[term, weight] : b) norm_b += weight * weight;
  if (norm_a == 0.0 || norm_b == 0.0) return 0.0;
  return dot / (std::sqrt(norm_a) * std::sqrt(norm_b));
}

CitationSummary SummarizeCandidates(std::vector<SummaryCandidate> candidates,
                                    const StopwordList &stopwords, size_t k) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "summary size must be >= 1");
  std::sort(candidates.begin(), candidates.end(),
            [](const SummaryCandidate &a, const SummaryCandidate &b) {
              return std::tie(a.source, a.position) < std::tie(b.source, b.position);
            });
  const size_t n = candidates.size();
  std::vector<TermVector> vectors;
  vectors.reserve(n);
  for (const SummaryCandidate &c : candidates) {
    vectors.push_back(TermFrequencies(c.sentence, stopwords));
  }
  std::vector<std::vector<double>> similarity(n, std::vector<double>(n, 0.0));
  std::vector<double> centrality(n, 0.0);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      double s = CosineSimilarity(vectors[i], vectors[j]);
      similarity[i][j] = similarity[j][i] = s;
      centrality[i] += s;
      centrality[j] += s;
    }
  }
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  // Candidates are already in (source, position) order, so a stable sort on
  // centrality alone applies the tie-break.
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return centrality[a] > centrality[b];
  });

  CitationSummary summary;
  std::vector<size_t> selected;
  for (size_t i : order) {
    if (selected.size() == k) break;
    bool redundant = std::any_of(selected.begin(), selected.end(), [&](size_t j) {
      return similarity[i][j] > kRedundancyThreshold;
    });
    if (redundant) continue;
    selected.push_back(i);
    summary.sentences.push_back(candidates[i].sentence);
    summary.sources.push_back(candidates[i].source);
  }
  return summary;
}

CitationSummary SummarizeIncoming(const KnowledgeGraph &g, NodeIndex paper,
                                  const StopwordList &stopwords, size_t k) {
  std::vector<SummaryCandidate> candidates;
  for (const IncomingContext &c : g.incoming_contexts(paper)) {
    candidates.push_back({c.sentence, c.citing, c.position});
  }
  return SummarizeCandidates(std::move(candidates), stopwords, k);
}

}  // namespace scholargraph
