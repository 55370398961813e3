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

#include "caspr/types.hpp"

#include <set>

#include "caspr/error.hpp"
#include "caspr/unicode.hpp"

namespace caspr {

std::string Summary::joined_text() const {
  std::string out;
  for (const Sentence& s : sentences) {
    if (!out.empty()) out += ' ';
    out += s.text;
  }
  return out;
}

Sentence make_sentence(std::string id, const std::string& text,
                       std::string source_id) {
  Sentence s;
  s.id = std::move(id);
  s.text = unicode::nfc(text);
  s.source_id = std::move(source_id);
  return s;
}

Summary make_summary(Side side, std::string entity_pair_id,
                     std::string annotator_id,
                     std::vector<Sentence> sentences) {
  Summary summary;
  summary.side = side;
  summary.entity_pair_id = std::move(entity_pair_id);
  summary.annotator_id = std::move(annotator_id);
  summary.sentences = std::move(sentences);
  return summary;
}

std::vector<std::string> validate_summary(const Summary& summary) {
  std::vector<std::string> violations;
  if (summary.entity_pair_id.empty()) {
    violations.push_back("entity_pair_id: must be non-empty");
  }
  std::set<std::string> seen;
  for (const Sentence& s : summary.sentences) {
    if (s.id.empty()) {
      violations.push_back("sentence id: must be non-empty");
    } else if (!seen.insert(s.id).second) {
      violations.push_back("sentence id '" + s.id +
                           "': duplicated within summary");
    }
    if (unicode::is_blank(s.text)) {
      violations.push_back("sentence '" + s.id +
                           "' text: blank after whitespace trimming");
    }
  }
  return violations;
}

const char* to_string(Side side) {
  switch (side) {
    case Side::A_minus_B: return "A_minus_B";
    case Side::B_minus_A: return "B_minus_A";
    case Side::A_common: return "A_common";
  }
  throw Error(ErrorCode::Internal, "unknown Side value");
}

const char* to_string(NliLabel label) {
  switch (label) {
    case NliLabel::Entailment: return "entailment";
    case NliLabel::Contradiction: return "contradiction";
    case NliLabel::Neutral: return "neutral";
  }
  throw Error(ErrorCode::Internal, "unknown NliLabel value");
}

const char* to_string(MetricId metric) {
  switch (metric) {
    case MetricId::Caspr: return "CASPR";
    case MetricId::Ds: return "DS";
    case MetricId::DsMulti: return "DS_multi";
    case MetricId::BsInv: return "BS_inv";
  }
  throw Error(ErrorCode::Internal, "unknown MetricId value");
}

Side side_from_string(const std::string& s) {
  if (s == "A_minus_B") return Side::A_minus_B;
  if (s == "B_minus_A") return Side::B_minus_A;
  if (s == "A_common") return Side::A_common;
  throw Error(ErrorCode::Parse, "unknown summary side '" + s + "'");
}

NliLabel nli_label_from_string(const std::string& s) {
  if (s == "entailment") return NliLabel::Entailment;
  if (s == "contradiction") return NliLabel::Contradiction;
  if (s == "neutral") return NliLabel::Neutral;
  throw Error(ErrorCode::Parse, "unknown NLI label '" + s + "'");
}

MetricId metric_from_string(const std::string& s) {
  if (s == "CASPR" || s == "caspr") return MetricId::Caspr;
  if (s == "DS" || s == "ds") return MetricId::Ds;
  if (s == "DS_multi" || s == "ds_multi") return MetricId::DsMulti;
  if (s == "BS_inv" || s == "bs_inv") return MetricId::BsInv;
  throw Error(ErrorCode::Parse, "unknown metric '" + s + "'");
}

}  // namespace caspr
