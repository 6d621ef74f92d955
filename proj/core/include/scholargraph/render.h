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
#ifndef SCHOLARGRAPH_RENDER_H_
#define SCHOLARGRAPH_RENDER_H_

#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "scholargraph/graph.h"
#include "scholargraph/metrics.h"
#include "scholargraph/nlq.h"
#include "scholargraph/profiles.h"

namespace scholargraph {

// Structured forms share one vocabulary with the service: entities render
// as {"kind", "id", "name"} and year series as [{"year", "count"}].
nlohmann::json EntityJson(const KnowledgeGraph &g, NodeIndex node);
nlohmann::json SeriesJson(std::span<const YearCount> series);
nlohmann::json AnswerJson(const Answer &answer, const KnowledgeGraph &g);
nlohmann::json ProfileJson(const PaperProfile &profile, const KnowledgeGraph &g);
nlohmann::json ProfileJson(const AuthorProfile &profile, const KnowledgeGraph &g);
nlohmann::json ProfileJson(const VenueProfile &profile, const KnowledgeGraph &g);
nlohmann::json SearchJson(std::span<const SearchHit> hits, const KnowledgeGraph &g);

// Human-readable forms for the command line.
std::string AnswerText(const Answer &answer, const KnowledgeGraph &g);
std::string ProfileText(const PaperProfile &profile, const KnowledgeGraph &g);
std::string ProfileText(const AuthorProfile &profile, const KnowledgeGraph &g);
std::string ProfileText(const VenueProfile &profile, const KnowledgeGraph &g);

}  // namespace scholargraph

#endif  // SCHOLARGRAPH_RENDER_H_
