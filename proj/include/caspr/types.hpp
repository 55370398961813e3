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

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace caspr {

/// Which summary of an entity pair a text belongs to.
enum class Side { A_minus_B, B_minus_A, A_common };

enum class NliLabel { Entailment, Contradiction, Neutral };

enum class MetricId { Caspr, Ds, DsMulti, BsInv };

/// One sentence of a summary. Text is NFC-normalized on construction;
/// source_id is set when the sentence was decomposed from a complex one.
struct Sentence {
  std::string id;
  std::string text;
  std::string source_id;
};

/// An ordered contrastive (or common) summary. Values are immutable once
/// built; transformations produce new summaries.
struct Summary {
  Side side = Side::A_minus_B;
  std::string entity_pair_id;
  std::string annotator_id;
  std::vector<Sentence> sentences;

  /// All sentence texts joined with single spaces.
  std::string joined_text() const;
};

/// Two directional NLI verdicts for one sentence pair plus their fused label.
/// fused is always fuse_labels(forward, backward).
struct ComparisonLabel {
  NliLabel forward = NliLabel::Neutral;   // premise = left sentence
  NliLabel backward = NliLabel::Neutral;  // premise = right sentence
  NliLabel fused = NliLabel::Neutral;
};

/// Per-sentence outcome of the CASPR aggregation: how many opposing
/// sentences fused to each label, and the resulting +1/-1 score.
struct SentenceTally {
  std::string sentence_id;
  int n_cont = 0;
  int n_ent = 0;
  int n_neut = 0;
  int label_score = 0;  // +1 or -1
};

/// Result of one metric evaluation on a summary pair. Scores live in
/// [0,100]; per_sentence is populated for CASPR only.
struct MetricReport {
  MetricId metric = MetricId::Ds;
  double score = 0.0;
  std::optional<std::vector<SentenceTally>> per_sentence;
  std::map<std::string, std::string> metadata;
};

Sentence make_sentence(std::string id, const std::string& text,
                       std::string source_id = {});

Summary make_summary(Side side, std::string entity_pair_id,
                     std::string annotator_id, std::vector<Sentence> sentences);

/// Invariant check. Violations are data, not errors: the returned strings
/// name the offending field and sentence id. Empty iff the summary is valid.
std::vector<std::string> validate_summary(const Summary& summary);

const char* to_string(Side side);
const char* to_string(NliLabel label);
const char* to_string(MetricId metric);
Side side_from_string(const std::string& s);
NliLabel nli_label_from_string(const std::string& s);
MetricId metric_from_string(const std::string& s);

}  // namespace caspr
