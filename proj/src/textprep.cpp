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

#include "caspr/textprep.hpp"

#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <cctype>
#include <fstream>
#include <mutex>
#include <sstream>

#include "caspr/error.hpp"
#include "caspr/parallel.hpp"
#include "caspr/unicode.hpp"
#include "caspr/util.hpp"

namespace caspr::textprep {

size_t TokenBag::total() const {
  size_t n = 0;
  for (const auto& [token, count] : counts) n += count;
  return n;
}

std::set<std::string> TokenBag::distinct() const {
  std::set<std::string> out;
  for (const auto& [token, count] : counts) out.insert(token);
  return out;
}

std::vector<std::string> token_stream(const std::string& text) {
  icu::UnicodeString us = icu::UnicodeString::fromUTF8(unicode::nfc(text));
  us.toLower(icu::Locale::getRoot());

  std::vector<std::string> tokens;
  icu::UnicodeString current;
  auto flush = [&]() {
    if (current.isEmpty()) return;
    std::string token;
    current.toUTF8String(token);
    tokens.push_back(std::move(token));
    current.remove();
  };

  for (int32_t i = 0; i < us.length();) {
    UChar32 cp = us.char32At(i);
    i = us.moveIndex32(i, 1);
    if (u_isUWhiteSpace(cp)) {
      flush();
    } else if (u_ispunct(cp)) {
      // strip all Unicode punctuation categories
    } else {
      current.append(cp);
    }
  }
  flush();
  return tokens;
}

TokenBag tokenize(const std::string& text) {
  TokenBag bag;
  for (std::string& token : token_stream(text)) {
    bag.counts[std::move(token)] += 1;
  }
  return bag;
}

std::vector<Sentence> segment_sentences(const std::string& text) {
  const std::string normalized = unicode::nfc(text);

  std::vector<std::string> chunks;
  std::string current;
  auto is_terminal = [](char c) { return c == '.' || c == '!' || c == '?'; };
  auto flush = [&]() {
    std::string trimmed = unicode::trim(current);
    if (!trimmed.empty()) chunks.push_back(std::move(trimmed));
    current.clear();
  };

  for (size_t i = 0; i < normalized.size(); ++i) {
    current += normalized[i];
    if (!is_terminal(normalized[i])) continue;
    while (i + 1 < normalized.size() && is_terminal(normalized[i + 1])) {
      current += normalized[++i];
    }
    if (i + 1 >= normalized.size() ||
        std::isspace(static_cast<unsigned char>(normalized[i + 1]))) {
      flush();
    }
  }
  flush();

  std::vector<Sentence> sentences;
  sentences.reserve(chunks.size());
  for (size_t k = 0; k < chunks.size(); ++k) {
    sentences.push_back(make_sentence("s" + std::to_string(k + 1), chunks[k]));
  }
  return sentences;
}

DecomposedSummary make_decomposed_summary(Summary origin,
                                          std::vector<Sentence> sentences) {
  std::set<std::string> origin_ids;
  for (const Sentence& s : origin.sentences) origin_ids.insert(s.id);

  std::set<std::string> covered;
  for (const Sentence& s : sentences) {
    if (!origin_ids.count(s.source_id)) {
      throw Error(ErrorCode::Internal,
                  "decomposed sentence '" + s.id +
                      "' has source_id '" + s.source_id +
                      "' not present in origin summary");
    }
    covered.insert(s.source_id);
  }
  for (const std::string& id : origin_ids) {
    if (!covered.count(id)) {
      throw Error(ErrorCode::Internal,
                  "origin sentence '" + id + "' has no decomposed sentences");
    }
  }

  DecomposedSummary d;
  d.origin = std::move(origin);
  d.sentences = std::move(sentences);
  return d;
}

std::vector<Sentence> decompose_sentence(
    const DecompositionRequest& request,
    backends::ChatCompletionBackend& client) {
  if (request.max_tokens <= 0) {
    throw Error(ErrorCode::Config, "decomposition max_tokens must be > 0");
  }
  if (request.temperature < 0.0 || request.temperature > 2.0) {
    throw Error(ErrorCode::Config,
                "decomposition temperature must lie in [0, 2]");
  }

  // Every sentence is a fresh chat; no prior inputs or responses are sent.
  const std::string completion =
      client.complete(request.prompt_template, request.sentence.text,
                      request.max_tokens, request.temperature);

  std::vector<Sentence> parts = segment_sentences(completion);
  if (parts.empty()) {
    throw Error(ErrorCode::Backend,
                "malformed decomposition response for sentence '" +
                    request.sentence.id +
                    "': completion contains no sentences");
  }

  std::vector<Sentence> out;
  out.reserve(parts.size());
  for (size_t k = 0; k < parts.size(); ++k) {
    out.push_back(make_sentence(
        request.sentence.id + "." + std::to_string(k + 1), parts[k].text,
        request.sentence.id));
  }
  return out;
}

DecomposedSummary decompose_summary(const Summary& summary,
                                    backends::ChatCompletionBackend& client,
                                    const DecomposeOptions& options) {
  std::vector<std::string> violations = validate_summary(summary);
  if (!violations.empty()) {
    throw Error(ErrorCode::Config, "invalid summary: " + violations.front());
  }
  const std::string& prompt = options.prompt_template.empty()
                                  ? default_decompose_prompt()
                                  : options.prompt_template;

  // One backend call per distinct sentence text (memoized by NFC text).
  std::vector<std::string> unique_texts;
  std::map<std::string, size_t> text_slot;
  for (const Sentence& s : summary.sentences) {
    if (text_slot.emplace(s.text, unique_texts.size()).second) {
      unique_texts.push_back(s.text);
    }
  }

  std::vector<std::vector<std::string>> claim_texts(unique_texts.size());
  parallel_for(unique_texts.size(), options.concurrency, [&](size_t i) {
    // Use the first origin sentence with this text for ids/errors.
    const Sentence* origin = nullptr;
    for (const Sentence& s : summary.sentences) {
      if (s.text == unique_texts[i]) {
        origin = &s;
        break;
      }
    }
    DecompositionRequest request;
    request.sentence = *origin;
    request.prompt_template = prompt;
    request.max_tokens = options.max_tokens;
    request.temperature = options.temperature;
    try {
      for (const Sentence& claim : decompose_sentence(request, client)) {
        claim_texts[i].push_back(claim.text);
      }
    } catch (const Error& e) {
      throw Error(e.code(), "sentence '" + origin->id + "': " + e.what());
    }
  });

  std::vector<Sentence> claims;
  for (const Sentence& s : summary.sentences) {
    const std::vector<std::string>& texts = claim_texts[text_slot.at(s.text)];
    for (size_t k = 0; k < texts.size(); ++k) {
      claims.push_back(make_sentence(s.id + "." + std::to_string(k + 1),
                                     texts[k], s.id));
    }
  }
  return make_decomposed_summary(summary, std::move(claims));
}

std::string load_prompt_asset(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::Io,
                "cannot read prompt asset '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string prompt_hash(const std::string& prompt) {
  return hex64(fnv1a64(prompt));
}

}  // namespace caspr::textprep
