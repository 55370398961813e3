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

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "caspr/backends.hpp"
#include "caspr/types.hpp"

namespace caspr::textprep {

/// Multiset of lowercase tokens of one text.
struct TokenBag {
  std::map<std::string, int> counts;

  size_t total() const;
  size_t distinct_size() const { return counts.size(); }
  std::set<std::string> distinct() const;
  bool empty() const { return counts.empty(); }
};

/// Lowercase, strip all Unicode punctuation categories, split on
/// whitespace. This scheme is load-bearing: DS values depend on it.
TokenBag tokenize(const std::string& text);

/// Same scheme as tokenize, preserving token order and multiplicity.
std::vector<std::string> token_stream(const std::string& text);

/// Rule-based segmentation: split after runs of terminal punctuation
/// (. ! ?) followed by whitespace. Abbreviations are not special-cased;
/// summaries here are short clean prose. Sentences get ids "s1", "s2", ...
std::vector<Sentence> segment_sentences(const std::string& text);

struct DecompositionRequest {
  Sentence sentence;
  std::string prompt_template;
  int max_tokens = 256;
  double temperature = 0.5;
};

/// A summary rewritten as single-claim sentences, with provenance back to
/// the origin. Construction validates that provenance is total (every
/// claim points into origin) and surjective (every origin sentence has at
/// least one claim).
struct DecomposedSummary {
  Summary origin;
  std::vector<Sentence> sentences;
};

DecomposedSummary make_decomposed_summary(Summary origin,
                                          std::vector<Sentence> sentences);

/// One chat call, no conversation history; the completion is parsed back
/// into sentences via segment_sentences. Output ids are "<source>.<k>".
std::vector<Sentence> decompose_sentence(
    const DecompositionRequest& request,
    backends::ChatCompletionBackend& client);

struct DecomposeOptions {
  std::string prompt_template;  // defaults to the bundled prompt asset
  int max_tokens = 256;
  double temperature = 0.5;
  int concurrency = 4;  // in-flight bound for backend calls
};

/// Decompose every sentence in order. Results are memoized by NFC text
/// within the call, so repeated sentences cost one backend call.
DecomposedSummary decompose_summary(const Summary& summary,
                                    backends::ChatCompletionBackend& client,
                                    const DecomposeOptions& options = {});

/// The bundled few-shot decomposition prompt (versioned text asset).
const std::string& default_decompose_prompt();

/// Load an alternate prompt asset, replacing the default for this call
/// path. UTF-8 plain text.
std::string load_prompt_asset(const std::filesystem::path& path);

/// Stable hash of a prompt, recorded in report metadata.
std::string prompt_hash(const std::string& prompt);

}  // namespace caspr::textprep
