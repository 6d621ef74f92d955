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
#include "scholargraph/error.h"

namespace scholargraph {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kIo: return "io-error";
    case ErrorCode::kParse: return "parse-error";
    case ErrorCode::kConfig: return "config-error";
    case ErrorCode::kNotFound: return "not-found";
    case ErrorCode::kKindMismatch: return "kind-mismatch";
    case ErrorCode::kInvalidMetapath: return "invalid-metapath";
    case ErrorCode::kUnsupportedQuery: return "unsupported-query";
    case ErrorCode::kEntityNotFound: return "entity-not-found";
    case ErrorCode::kInternal: return "internal";
  }
  return "internal";
}

}  // namespace scholargraph
