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
#ifndef SCHOLARGRAPH_TEXT_H_
#define SCHOLARGRAPH_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace scholargraph {

// Lowercases ASCII and folds common Latin accented code points (U+00C0 to
// U+017F) to their base letter. Other bytes pass through unchanged.
std::string FoldCase(std::string_view text);

// Name/title normalization: case-fold, strip diacritics, replace
// punctuation with spaces, collapse whitespace, trim. Idempotent.
std::string NormalizeName(std::string_view text);

// Lowercase alphanumeric tokens; everything else separates tokens.
std::vector<std::string> Tokenize(std::string_view text);

std::string Trim(std::string_view text);
std::string Join(const std::vector<std::string> &parts, std::string_view sep);

// Length of the longest common subsequence of two byte strings.
size_t LongestCommonSubsequence(std::string_view a, std::string_view b);

}  // namespace scholargraph

#endif  // SCHOLARGRAPH_TEXT_H_
