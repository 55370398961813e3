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

// Deterministic stub backends and the read-through disk cache.

#include "caspr/backends.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <mutex>
#include <optional>
#include <random>
#include <shared_mutex>

#include <json.hpp>

#include "caspr/error.hpp"
#include "caspr/textprep.hpp"
#include "caspr/unicode.hpp"
#include "caspr/util.hpp"

namespace caspr::backends {

using nlohmann::json;

namespace {

bool matches(const std::string& text, const std::string& pattern) {
  return pattern.empty() || text.find(pattern) != std::string::npos;
}

class StubNli : public NliBackend {
 public:
  explicit StubNli(std::vector<StubNliRule> rules) : rules_(std::move(rules)) {}

  NliLabel predict(const std::string& premise,
                   const std::string& hypothesis) override {
    for (const StubNliRule& rule : rules_) {
      if (matches(premise, rule.pattern_left) &&
          matches(hypothesis, rule.pattern_right)) {
        return rule.forward;
      }
      if (matches(premise, rule.pattern_right) &&
          matches(hypothesis, rule.pattern_left)) {
        return rule.backward;
      }
    }
    return NliLabel::Neutral;
  }

  std::string identity() const override { return "stub-nli"; }

 private:
  std::vector<StubNliRule> rules_;
};

class EchoChat : public ChatCompletionBackend {
 public:
  std::string complete(const std::string&, const std::string& user_text, int,
                       double) override {
    if (user_text.empty()) {
      throw Error(ErrorCode::Backend, "echo chat: empty user text");
    }
    return user_text;
  }
  std::string identity() const override { return "stub-chat-echo"; }
};

class FixtureChat : public ChatCompletionBackend {
 public:
  FixtureChat(std::map<std::string, std::string> responses,
              std::string identity)
      : responses_(std::move(responses)), identity_(std::move(identity)) {}

  std::string complete(const std::string&, const std::string& user_text, int,
                       double) override {
    auto it = responses_.find(unicode::nfc(user_text));
    if (it == responses_.end()) {
      throw Error(ErrorCode::Backend,
                  identity_ + ": no recorded completion for '" + user_text +
                      "'");
    }
    if (unicode::is_blank(it->second)) {
      throw Error(ErrorCode::Backend,
                  identity_ + ": recorded completion is empty");
    }
    return it->second;
  }
  std::string identity() const override { return identity_; }

 private:
  std::map<std::string, std::string> responses_;
  std::string identity_;
};

class HashEmbedding : public EmbeddingBackend {
 public:
  HashEmbedding(int dimension, uint64_t seed)
      : dimension_(dimension), seed_(seed) {
    if (dimension_ <= 0) {
      throw Error(ErrorCode::Config, "embedding dimension must be > 0");
    }
  }

  std::vector<EmbeddedToken> embed(const std::string& text) override {
    std::vector<std::string> tokens = textprep::token_stream(text);
    if (tokens.empty() && !text.empty()) {
      tokens.push_back(unicode::nfc(text));
    }
    std::vector<EmbeddedToken> out;
    out.reserve(tokens.size());
    for (std::string& token : tokens) {
      out.push_back({token, vector_for(token)});
      out.back().token = std::move(token);
    }
    return out;
  }

  std::string identity() const override {
    return "stub-embed-hash-d" + std::to_string(dimension_) + "-s" +
           std::to_string(seed_);
  }

 private:
  std::vector<double> vector_for(const std::string& token) const {
    std::mt19937_64 rng(fnv1a64(token) ^ (seed_ * 0x9e3779b97f4a7c15ull));
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> v(dimension_);
    double norm2 = 0.0;
    for (double& x : v) {
      x = gauss(rng);
      norm2 += x * x;
    }
    double norm = std::sqrt(norm2);
    if (norm < 1e-12) {
      v.assign(dimension_, 0.0);
      v[0] = 1.0;
    } else {
      for (double& x : v) x /= norm;
    }
    return v;
  }

  int dimension_;
  uint64_t seed_;
};

class FixtureEmbedding : public EmbeddingBackend {
 public:
  FixtureEmbedding(std::map<std::string, std::vector<EmbeddedToken>> responses,
                   std::string identity)
      : responses_(std::move(responses)), identity_(std::move(identity)) {}

  std::vector<EmbeddedToken> embed(const std::string& text) override {
    auto it = responses_.find(unicode::nfc(text));
    if (it == responses_.end()) {
      throw Error(ErrorCode::Backend,
                  identity_ + ": no recorded embedding for '" + text + "'");
    }
    return it->second;
  }
  std::string identity() const override { return identity_; }

 private:
  std::map<std::string, std::vector<EmbeddedToken>> responses_;
  std::string identity_;
};

// Append-only JSONL store shared by the cached() wrappers. Lookups verify
// the full canonical request, so a 64-bit key collision surfaces as an
// explicit cache error instead of a silently wrong response.
class DiskCache {
 public:
  explicit DiskCache(std::filesystem::path path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return;  // cold cache
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      json record = json::parse(line, nullptr, false);
      if (record.is_discarded() || !record.is_object() ||
          !record.contains("key_hash") || !record.contains("request_text") ||
          !record.contains("response_text") || !record.contains("model")) {
        throw Error(ErrorCode::Cache, "corrupted cache record at " +
                                          path_.string() + ":" +
                                          std::to_string(line_no));
      }
      entries_[record["key_hash"].get<std::string>()] = {
          record["request_text"].get<std::string>(),
          record["response_text"].get<std::string>()};
    }
  }

  std::optional<std::string> lookup(const std::string& key_hash,
                                    const std::string& request_text) const {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(key_hash);
    if (it == entries_.end()) return std::nullopt;
    if (it->second.request != request_text) {
      throw Error(ErrorCode::Cache,
                  "cache key collision for hash " + key_hash + " in " +
                      path_.string());
    }
    return it->second.response;
  }

  void store(const std::string& key_hash, const std::string& model,
             const std::string& request_text,
             const std::string& response_text) {
    std::unique_lock lock(mutex_);
    if (entries_.count(key_hash)) return;
    entries_[key_hash] = {request_text, response_text};

    std::filesystem::path dir = path_.parent_path();
    if (!dir.empty()) std::filesystem::create_directories(dir);
    std::ofstream out(path_, std::ios::app);
    if (!out) {
      throw Error(ErrorCode::Cache,
                  "cannot append to cache file '" + path_.string() + "'");
    }
    auto now = std::chrono::system_clock::now().time_since_epoch();
    json record{{"key_hash", key_hash},
                {"model", model},
                {"request_text", request_text},
                {"response_text", response_text},
                {"timestamp",
                 std::chrono::duration_cast<std::chrono::seconds>(now).count()}};
    out << record.dump() << "\n";
    out.flush();
  }

 private:
  struct Entry {
    std::string request;
    std::string response;
  };

  std::filesystem::path path_;
  mutable std::shared_mutex mutex_;
  std::map<std::string, Entry> entries_;
};

std::string cache_key(const std::string& identity, const std::string& request) {
  return hex64(fnv1a64(identity + "\x1f" + request));
}

class CachedNli : public NliBackend {
 public:
  CachedNli(std::shared_ptr<NliBackend> inner, std::filesystem::path path)
      : inner_(std::move(inner)), cache_(std::move(path)) {}

  NliLabel predict(const std::string& premise,
                   const std::string& hypothesis) override {
    const std::string request =
        json{{"premise", premise}, {"hypothesis", hypothesis}}.dump();
    const std::string key = cache_key(inner_->identity(), request);
    if (auto hit = cache_.lookup(key, request)) {
      return nli_label_from_string(*hit);
    }
    NliLabel label = inner_->predict(premise, hypothesis);
    cache_.store(key, inner_->identity(), request, to_string(label));
    return label;
  }

  std::string identity() const override { return inner_->identity(); }
  std::map<std::string, std::string> stats() const override {
    return inner_->stats();
  }

 private:
  std::shared_ptr<NliBackend> inner_;
  DiskCache cache_;
};

class CachedEmbedding : public EmbeddingBackend {
 public:
  CachedEmbedding(std::shared_ptr<EmbeddingBackend> inner,
                  std::filesystem::path path)
      : inner_(std::move(inner)), cache_(std::move(path)) {}

  std::vector<EmbeddedToken> embed(const std::string& text) override {
    const std::string request = json{{"text", text}}.dump();
    const std::string key = cache_key(inner_->identity(), request);
    if (auto hit = cache_.lookup(key, request)) {
      return decode(*hit);
    }
    std::vector<EmbeddedToken> result = inner_->embed(text);
    cache_.store(key, inner_->identity(), request, encode(result));
    return result;
  }

  std::string identity() const override { return inner_->identity(); }

 private:
  static std::string encode(const std::vector<EmbeddedToken>& seq) {
    json tokens = json::array();
    json vectors = json::array();
    for (const EmbeddedToken& t : seq) {
      tokens.push_back(t.token);
      vectors.push_back(t.vector);
    }
    return json{{"tokens", tokens}, {"vectors", vectors}}.dump();
  }

  static std::vector<EmbeddedToken> decode(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.contains("tokens") || !j.contains("vectors")) {
      throw Error(ErrorCode::Cache, "corrupted embedding cache entry");
    }
    std::vector<EmbeddedToken> out;
    const json& tokens = j["tokens"];
    const json& vectors = j["vectors"];
    if (tokens.size() != vectors.size()) {
      throw Error(ErrorCode::Cache, "corrupted embedding cache entry");
    }
    for (size_t i = 0; i < tokens.size(); ++i) {
      out.push_back({tokens[i].get<std::string>(),
                     vectors[i].get<std::vector<double>>()});
    }
    return out;
  }

  std::shared_ptr<EmbeddingBackend> inner_;
  DiskCache cache_;
};

class CachedChat : public ChatCompletionBackend {
 public:
  CachedChat(std::shared_ptr<ChatCompletionBackend> inner,
             std::filesystem::path path)
      : inner_(std::move(inner)), cache_(std::move(path)) {}

  std::string complete(const std::string& system_prompt,
                       const std::string& user_text, int max_tokens,
                       double temperature) override {
    const std::string request = json{{"system", system_prompt},
                                     {"user", user_text},
                                     {"max_tokens", max_tokens},
                                     {"temperature", temperature}}
                                    .dump();
    const std::string key = cache_key(inner_->identity(), request);
    if (auto hit = cache_.lookup(key, request)) {
      return *hit;
    }
    std::string completion =
        inner_->complete(system_prompt, user_text, max_tokens, temperature);
    cache_.store(key, inner_->identity(), request, completion);
    return completion;
  }

  std::string identity() const override { return inner_->identity(); }

 private:
  std::shared_ptr<ChatCompletionBackend> inner_;
  DiskCache cache_;
};

}  // namespace

std::shared_ptr<NliBackend> stub_nli(std::vector<StubNliRule> rules) {
  return std::make_shared<StubNli>(std::move(rules));
}

std::shared_ptr<ChatCompletionBackend> echo_chat() {
  return std::make_shared<EchoChat>();
}

std::shared_ptr<ChatCompletionBackend> fixture_chat(
    std::map<std::string, std::string> responses, std::string identity) {
  std::map<std::string, std::string> normalized;
  for (auto& [key, value] : responses) {
    normalized[unicode::nfc(key)] = value;
  }
  return std::make_shared<FixtureChat>(std::move(normalized),
                                       std::move(identity));
}

std::shared_ptr<EmbeddingBackend> hash_embedding(int dimension,
                                                 uint64_t seed) {
  return std::make_shared<HashEmbedding>(dimension, seed);
}

std::shared_ptr<EmbeddingBackend> fixture_embedding(
    std::map<std::string, std::vector<EmbeddedToken>> responses,
    std::string identity) {
  std::map<std::string, std::vector<EmbeddedToken>> normalized;
  for (auto& [key, value] : responses) {
    normalized[unicode::nfc(key)] = std::move(value);
  }
  return std::make_shared<FixtureEmbedding>(std::move(normalized),
                                            std::move(identity));
}

std::shared_ptr<NliBackend> cached(std::shared_ptr<NliBackend> inner,
                                   const std::filesystem::path& cache_path) {
  return std::make_shared<CachedNli>(std::move(inner), cache_path);
}

std::shared_ptr<EmbeddingBackend> cached(
    std::shared_ptr<EmbeddingBackend> inner,
    const std::filesystem::path& cache_path) {
  return std::make_shared<CachedEmbedding>(std::move(inner), cache_path);
}

std::shared_ptr<ChatCompletionBackend> cached(
    std::shared_ptr<ChatCompletionBackend> inner,
    const std::filesystem::path& cache_path) {
  return std::make_shared<CachedChat>(std::move(inner), cache_path);
}

}  // namespace caspr::backends
