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

#include <string>

namespace caspr::unicode {

/// NFC-normalize a UTF-8 string. Applied to all ingested text so that
/// equality (and therefore cache keys) is stable across encodings.
std::string nfc(const std::string& utf8);

/// Unicode-aware lowercase (root locale, so output is host-independent).
std::string lowercase(const std::string& utf8);

/// Trim Unicode whitespace from both ends.
std::string trim(const std::string& utf8);

bool is_blank(const std::string& utf8);

}  // namespace caspr::unicode
