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
#ifndef SCHOLARGRAPH_ERROR_H_
#define SCHOLARGRAPH_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace scholargraph {

// Error classes shared by every layer. The service and CLI map these onto
// HTTP statuses and exit codes respectively.
enum class ErrorCode {
  kInvalidArgument,   // malformed input, bad request parameters
  kIo,                // unreadable/unwritable files
  kParse,             // malformed corpus, graph or config content
  kConfig,            // inconsistent template catalog or lexicon
  kNotFound,          // unknown entity id
  kKindMismatch,      // entity has the wrong kind for the operation
  kInvalidMetapath,   // metapath with an undefined adjacent pair
  kUnsupportedQuery,  // no query template matches
  kEntityNotFound,    // a template slot could not be linked
  kInternal,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace scholargraph

#endif  // SCHOLARGRAPH_ERROR_H_
