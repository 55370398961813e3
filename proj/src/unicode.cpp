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

#include "caspr/unicode.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include "caspr/error.hpp"

namespace caspr::unicode {

namespace {

const icu::Normalizer2& nfc_instance() {
  UErrorCode ec = U_ZERO_ERROR;
  const icu::Normalizer2* norm = icu::Normalizer2::getNFCInstance(ec);
  if (U_FAILURE(ec) || norm == nullptr) {
    throw Error(ErrorCode::Internal, "ICU NFC normalizer unavailable");
  }
  return *norm;
}

}  // namespace

std::string nfc(const std::string& utf8) {
  icu::UnicodeString us = icu::UnicodeString::fromUTF8(utf8);
  UErrorCode ec = U_ZERO_ERROR;
  icu::UnicodeString normalized = nfc_instance().normalize(us, ec);
  if (U_FAILURE(ec)) {
    throw Error(ErrorCode::Internal, "NFC normalization failed");
  }
  std::string out;
  normalized.toUTF8String(out);
  return out;
}

std::string lowercase(const std::string& utf8) {
  icu::UnicodeString us = icu::UnicodeString::fromUTF8(utf8);
  us.toLower(icu::Locale::getRoot());
  std::string out;
  us.toUTF8String(out);
  return out;
}

std::string trim(const std::string& utf8) {
  icu::UnicodeString us = icu::UnicodeString::fromUTF8(utf8);
  int32_t begin = 0;
  int32_t end = us.length();
  while (begin < end && u_isUWhiteSpace(us.char32At(begin))) {
    begin = us.moveIndex32(begin, 1);
  }
  while (end > begin) {
    int32_t prev = us.moveIndex32(end, -1);
    if (!u_isUWhiteSpace(us.char32At(prev))) break;
    end = prev;
  }
  std::string out;
  us.tempSubStringBetween(begin, end).toUTF8String(out);
  return out;
}

bool is_blank(const std::string& utf8) { return trim(utf8).empty(); }

}  // namespace caspr::unicode
