// Copyright 2026 The caspr Authors.
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

#pragma once

#include <stdexcept>
#include <string>

namespace caspr {

/// Error categories. The numeric values double as C-API status codes and
/// CLI exit codes, so they must stay stable.
enum class ErrorCode : int {
  Ok = 0,
  Failure = 1,            // generic / unexpected
  Config = 2,             // bad arguments, missing endpoints, usage
  Parse = 3,              // malformed JSON / JSONL / schema violations
  DegenerateInput = 4,    // empty token union, empty summaries
  Backend = 5,            // transport, protocol, malformed completions
  Cache = 6,              // cache corruption
  MissingIngredient = 7,  // dataset rule inputs absent
  Io = 8,                 // filesystem
  Internal = 9,           // broken internal invariant
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace caspr
