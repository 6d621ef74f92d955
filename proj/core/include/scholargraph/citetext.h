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
#ifndef SCHOLARGRAPH_CITETEXT_H_
#define SCHOLARGRAPH_CITETEXT_H_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "scholargraph/graph.h"

namespace scholargraph {

// Scores one citation context in [-1, +1].
class SentimentScorer {
 public:
  virtual ~SentimentScorer() = default;
  virtual double Score(std::string_view context) const = 0;
};

// Token-count lexicon scorer: (pos - neg) / max(1, pos + neg).
//
// File format: one token per line; a line holding only "+" starts the
// positive section and "-" (or U+2212) the negative one. Blank lines and
// lines starting with '#' are ignored.
class SentimentLexicon : public SentimentScorer {
 public:
  struct Hits {
    int64_t positive = 0;
    int64_t negative = 0;
  };

  // Throws Error(kConfig) if the sets overlap.
  SentimentLexicon(std::set<std::string> positive, std::set<std::string> negative);

  static SentimentLexicon Parse(std::istream &in);
  static SentimentLexicon FromString(std::string_view text);
  static SentimentLexicon Load(const std::filesystem::path &path);
  // The lexicon shipped with the library.
  static const SentimentLexicon &Default();

  Hits Count(std::string_view context) const;
  double Score(std::string_view context) const override;

  const std::set<std::string> &positive() const { return positive_; }
  const std::set<std::string> &negative() const { return negative_; }

 private:
  std::set<std::string> positive_;
  std::set<std::string> negative_;
};

double ScoreContext(std::string_view context, const SentimentScorer &scorer);

struct SentimentAggregate {
  double mean = 0.0;  // 0 when there are no contexts
  size_t count = 0;
};

// Mean score over all incoming citation contexts of a paper.
SentimentAggregate AggregateSentiment(const KnowledgeGraph &g, NodeIndex paper,
                                      const SentimentScorer &scorer);

// One token per line; '#' starts a comment line.
class StopwordList {
 public:
  StopwordList() = default;
  explicit StopwordList(std::set<std::string> words) : words_(std::move(words)) {}

  static StopwordList Parse(std::istream &in);
  static StopwordList FromString(std::string_view text);
  static StopwordList Load(const std::filesystem::path &path);
  static const StopwordList &Default();

  bool contains(const std::string &token) const { return words_.count(token) > 0; }
  size_t size() const { return words_.size(); }

 private:
  std::set<std::string> words_;
};

// Sparse term-frequency vector over non-stopword tokens.
using TermVector = std::map<std::string, double>;

TermVector TermFrequencies(std::string_view sentence, const StopwordList &stopwords);
double CosineSimilarity(const TermVector &a, const TermVector &b);

inline constexpr size_t kDefaultSummarySize = 5;
inline constexpr double kRedundancyThreshold = 0.8;

struct SummaryCandidate {
  std::string sentence;
  NodeIndex source;       // citing paper
  uint32_t position = 0;  // within the citing paper
};

struct CitationSummary {
  std::vector<std::string> sentences;
  std::vector<NodeIndex> sources;
};

// Centrality-ranked extraction: each candidate scores its total cosine
// similarity to the others; candidates are taken in score order (ties by
// source then position), skipping any whose similarity to an already
// selected sentence exceeds kRedundancyThreshold, until k are chosen.
// Throws Error(kInvalidArgument) for k == 0.
CitationSummary SummarizeCandidates(std::vector<SummaryCandidate> candidates,
                                    const StopwordList &stopwords,
                                    size_t k = kDefaultSummarySize);

CitationSummary SummarizeIncoming(const KnowledgeGraph &g, NodeIndex paper,
                                  const StopwordList &stopwords,
                                  size_t k = kDefaultSummarySize);

}  // namespace scholargraph

#endif  // SCHOLARGRAPH_CITETEXT_H_
