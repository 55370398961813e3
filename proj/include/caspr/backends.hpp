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
#include <memory>
#include <string>
#include <vector>

#include "caspr/types.hpp"

// Uniform interfaces to external model inference: NLI prediction, token
// embeddings, chat completion. Each has an HTTP implementation, a
// read-through disk cache wrapper, and deterministic stubs for hermetic
// runs. Implementations must be safe to share across threads.

namespace caspr::backends {

struct EmbeddedToken {
  std::string token;
  std::vector<double> vector;
};

class NliBackend {
 public:
  virtual ~NliBackend() = default;
  virtual NliLabel predict(const std::string& premise,
                           const std::string& hypothesis) = 0;
  virtual std::string identity() const = 0;
  /// Diagnostic counters (e.g. observed argmax ties); merged into report
  /// metadata by callers.
  virtual std::map<std::string, std::string> stats() const { return {}; }
};

class EmbeddingBackend {
 public:
  virtual ~EmbeddingBackend() = default;
  virtual std::vector<EmbeddedToken> embed(const std::string& text) = 0;
  virtual std::string identity() const = 0;
};

class ChatCompletionBackend {
 public:
  virtual ~ChatCompletionBackend() = default;
  virtual std::string complete(const std::string& system_prompt,
                               const std::string& user_text, int max_tokens,
                               double temperature) = 0;
  virtual std::string identity() const = 0;
};

/// One pattern rule of the deterministic NLI stub. Patterns are plain
/// substring matchers; an empty pattern matches any text. A rule describes
/// a (left, right) sentence pair: `forward` is the verdict with the left
/// text as premise, `backward` with the right text as premise. First
/// matching rule wins; unmatched pairs are neutral in both directions.
struct StubNliRule {
  std::string pattern_left;
  std::string pattern_right;
  NliLabel forward = NliLabel::Neutral;
  NliLabel backward = NliLabel::Neutral;
};

std::shared_ptr<NliBackend> stub_nli(std::vector<StubNliRule> rules);

/// Chat stub that returns the user text unchanged. Decomposition and
/// paraphrasing become the identity under it.
std::shared_ptr<ChatCompletionBackend> echo_chat();

/// Chat stub with recorded completions keyed by NFC user text.
/// Unrecorded inputs raise a backend error.
std::shared_ptr<ChatCompletionBackend> fixture_chat(
    std::map<std::string, std::string> responses,
    std::string identity = "stub-chat-fixture");

/// Deterministic embedding stub: each token maps to a fixed unit vector
/// derived from a hash of (seed, token). Distinct tokens get near-orthogonal
/// vectors in high dimensions, identical tokens identical vectors.
std::shared_ptr<EmbeddingBackend> hash_embedding(int dimension = 32,
                                                 uint64_t seed = 0);

/// Embedding stub with explicit recorded sequences keyed by NFC text.
std::shared_ptr<EmbeddingBackend> fixture_embedding(
    std::map<std::string, std::vector<EmbeddedToken>> responses,
    std::string identity = "stub-embed-fixture");

struct RetryPolicy {
  int max_attempts = 3;
  int initial_backoff_ms = 250;  // doubles after each failed attempt
};

struct HttpOptions {
  std::string bearer_token;  // sent as Authorization: Bearer when non-empty
  RetryPolicy retry;
  int timeout_seconds = 60;
};

/// POST {base_url}/nli {"premise","hypothesis"} ->
///   {"label": "entailment|neutral|contradiction", "scores": {...}}.
/// The server-reported argmax label is returned as-is; exact score ties are
/// counted in stats()["nli_ties"].
std::shared_ptr<NliBackend> http_nli(std::string base_url,
                                     std::string identity,
                                     HttpOptions options = {});

/// POST {base_url}/embed {"text"} -> {"tokens": [...], "vectors": [[...]]}.
std::shared_ptr<EmbeddingBackend> http_embedding(std::string base_url,
                                                 std::string identity,
                                                 HttpOptions options = {});

/// POST {base_url}/chat {"system","user","max_tokens","temperature"} ->
///   {"text": "..."}.
std::shared_ptr<ChatCompletionBackend> http_chat(std::string base_url,
                                                 std::string identity,
                                                 HttpOptions options = {});

// Read-through disk caches. Keys combine the inner backend identity with a
// canonicalized request; hits never touch the inner backend. The store is
// append-only JSONL; a corrupted line fails loading with its line number,
// it is never silently skipped.
std::shared_ptr<NliBackend> cached(std::shared_ptr<NliBackend> inner,
                                   const std::filesystem::path& cache_path);
std::shared_ptr<EmbeddingBackend> cached(
    std::shared_ptr<EmbeddingBackend> inner,
    const std::filesystem::path& cache_path);
std::shared_ptr<ChatCompletionBackend> cached(
    std::shared_ptr<ChatCompletionBackend> inner,
    const std::filesystem::path& cache_path);

}  // namespace caspr::backends
