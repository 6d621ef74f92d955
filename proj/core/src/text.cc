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
#include "scholargraph/text.h"

#include <algorithm>
#include <cctype>
#include <cstdint>

namespace scholargraph {
namespace {

// Base-letter folding for Latin-1 Supplement and Latin Extended-A.
// Returns nullptr for code points without a mapping.
const char *FoldLatin(uint32_t cp) {
  if (cp >= 0xC0 && cp <= 0xFF) {
    static const char *const kLatin1[64] = {
        "a", "a", "a", "a", "a", "a", "ae", "c",   // C0-C7
        "e", "e", "e", "e", "i", "i", "i", "i",    // C8-CF
        "d", "n", "o", "o", "o", "o", "o", " ",    // D0-D7
        "o", "u", "u", "u", "u", "y", "th", "ss",  // D8-DF
        "a", "a", "a", "a", "a", "a", "ae", "c",   // E0-E7
        "e", "e", "e", "e", "i", "i", "i", "i",    // E8-EF
        "d", "n", "o", "o", "o", "o", "o", " ",    // F0-F7
        "o", "u", "u", "u", "u", "y", "th", "y",   // F8-FF
    };
    return kLatin1[cp - 0xC0];
  }
  if (cp < 0x100 || cp > 0x17F) return nullptr;
  struct Range {
    uint32_t lo, hi;
    const char *base;
  };
  static const Range kExtendedA[] = {
      {0x100, 0x105, "a"},  {0x106, 0x10D, "c"},  {0x10E, 0x111, "d"},
      {0x112, 0x11B, "e"},  {0x11C, 0x123, "g"},  {0x124, 0x127, "h"},
      {0x128, 0x131, "i"},  {0x132, 0x133, "ij"}, {0x134, 0x135, "j"},
      {0x136, 0x138, "k"},  {0x139, 0x142, "l"},  {0x143, 0x14B, "n"},
      {0x14C, 0x151, "o"},  {0x152, 0x153, "oe"}, {0x154, 0x159, "r"},
      {0x15A, 0x161, "s"},  {0x162, 0x167, "t"},  {0x168, 0x173, "u"},
      {0x174, 0x175, "w"},  {0x176, 0x178, "y"},  {0x179, 0x17E, "z"},
      {0x17F, 0x17F, "s"},
  };
  for (const Range &r : kExtendedA) {
    if (cp >= r.lo && cp <= r.hi) return r.base;
  }
  return nullptr;
}

bool IsAsciiAlnum(unsigned char c) { return c < 0x80 && std::isalnum(c); }

}  // namespace

std::string FoldCase(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (size_t i = 0; i < text.size();) {
    unsigned char c = text[i];
    if (c < 0x80) {
      out.push_back(static_cast<char>(std::tolower(c)));
      ++i;
      continue;
    }
    // Two-byte sequences cover the whole folded range.
    if ((c & 0xE0) == 0xC0 && i + 1 < text.size() &&
        (static_cast<unsigned char>(text[i + 1]) & 0xC0) == 0x80) {
      uint32_t cp = ((c & 0x1F) << 6) |
                    (static_cast<unsigned char>(text[i + 1]) & 0x3F);
      if (const char *base = FoldLatin(cp)) {
        out += base;
        i += 2;
        continue;
      }
    }
    out.push_back(static_cast<char>(c));
    ++i;
  }
  return out;
}

std::string NormalizeName(std::string_view text) {
  std::string folded = FoldCase(text);
  std::string out;
  out.reserve(folded.size());
  bool pending_space = false;
  for (unsigned char c : folded) {
    // Non-ASCII bytes that survived folding are kept as letters.
    bool keep = IsAsciiAlnum(c) || c >= 0x80;
    if (!keep) {
      pending_space = true;
      continue;
    }
    if (pending_space && !out.empty()) out.push_back(' ');
    pending_space = false;
    out.push_back(static_cast<char>(c));
  }
  return out;
}

std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string folded = FoldCase(text);
  std::string current;
  for (unsigned char c : folded) {
    if (IsAsciiAlnum(c) || c >= 0x80) {
      current.push_back(static_cast<char>(c));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::string Trim(std::string_view text) {
  size_t begin = 0;
  size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) {
    ++begin;
  }
  while (end > begin &&
         std::isspace(static_cast<unsigned char>(text[end - 1]))) {
    --end;
  }
  return std::string(text.substr(begin, end - begin));
}

std::string Join(const std::vector<std::string> &parts, std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

size_t LongestCommonSubsequence(std::string_view a, std::string_view b) {
  if (a.empty() || b.empty()) return 0;
  std::vector<size_t> prev(b.size() + 1, 0), curr(b.size() + 1, 0);
  for (size_t i = 1; i <= a.size(); ++i) {
    for (size_t j = 1; j <= b.size(); ++j) {
      curr[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1
                                     : std::max(prev[j], curr[j - 1]);
    }
    std::swap(prev, curr);
  }
  return prev[b.size()];
}

}  // namespace scholargraph
