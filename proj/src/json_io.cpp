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

#include "caspr/json_io.hpp"

#include "caspr/error.hpp"

namespace caspr {

using nlohmann::json;

namespace {

const json& require(const json& j, const char* key, const char* what) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw Error(ErrorCode::Parse,
                std::string(what) + ": missing field '" + key + "'");
  }
  return *it;
}

std::string require_string(const json& j, const char* key, const char* what) {
  const json& v = require(j, key, what);
  if (!v.is_string()) {
    throw Error(ErrorCode::Parse,
                std::string(what) + ": field '" + key + "' must be a string");
  }
  return v.get<std::string>();
}

}  // namespace

json summary_to_json(const Summary& summary) {
  json sentences = json::array();
  for (const Sentence& s : summary.sentences) {
    json row{{"id", s.id}, {"text", s.text}};
    if (!s.source_id.empty()) row["source_id"] = s.source_id;
    sentences.push_back(std::move(row));
  }
  return json{{"side", to_string(summary.side)},
              {"entity_pair_id", summary.entity_pair_id},
              {"annotator_id", summary.annotator_id},
              {"sentences", std::move(sentences)}};
}

Summary summary_from_json(const json& j) {
  if (!j.is_object()) {
    throw Error(ErrorCode::Parse, "summary: expected a JSON object");
  }
  Summary summary;
  summary.side = side_from_string(require_string(j, "side", "summary"));
  summary.entity_pair_id = require_string(j, "entity_pair_id", "summary");
  summary.annotator_id = require_string(j, "annotator_id", "summary");
  const json& sentences = require(j, "sentences", "summary");
  if (!sentences.is_array()) {
    throw Error(ErrorCode::Parse, "summary: 'sentences' must be an array");
  }
  for (const json& row : sentences) {
    std::string source;
    if (row.contains("source_id")) {
      source = require_string(row, "source_id", "sentence");
    }
    summary.sentences.push_back(make_sentence(
        require_string(row, "id", "sentence"),
        require_string(row, "text", "sentence"), std::move(source)));
  }
  return summary;
}

Summary summary_from_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw Error(ErrorCode::Parse, "summary: invalid JSON");
  }
  return summary_from_json(j);
}

json report_to_json(const MetricReport& report) {
  json j{{"metric", to_string(report.metric)},
         {"score", report.score},
         {"metadata", report.metadata}};
  if (report.per_sentence) {
    json rows = json::array();
    for (const SentenceTally& t : *report.per_sentence) {
      rows.push_back(json{{"sentence_id", t.sentence_id},
                          {"label_score", t.label_score},
                          {"n_cont", t.n_cont},
                          {"n_ent", t.n_ent},
                          {"n_neut", t.n_neut}});
    }
    j["per_sentence"] = std::move(rows);
  }
  return j;
}

MetricReport report_from_json(const json& j) {
  MetricReport report;
  report.metric = metric_from_string(require_string(j, "metric", "report"));
  report.score = require(j, "score", "report").get<double>();
  if (j.contains("metadata")) {
    report.metadata =
        j.at("metadata").get<std::map<std::string, std::string>>();
  }
  if (j.contains("per_sentence")) {
    std::vector<SentenceTally> rows;
    for (const json& row : j.at("per_sentence")) {
      SentenceTally t;
      t.sentence_id = require_string(row, "sentence_id", "per_sentence");
      t.label_score = require(row, "label_score", "per_sentence").get<int>();
      t.n_cont = require(row, "n_cont", "per_sentence").get<int>();
      t.n_ent = require(row, "n_ent", "per_sentence").get<int>();
      t.n_neut = require(row, "n_neut", "per_sentence").get<int>();
      rows.push_back(std::move(t));
    }
    report.per_sentence = std::move(rows);
  }
  return report;
}

}  // namespace caspr
