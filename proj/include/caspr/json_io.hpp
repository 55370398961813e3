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

#include <json.hpp>

#include "caspr/types.hpp"

// Canonical JSON shapes for the domain types. Field names are fixed wire
// contracts: lowercase snake case, exactly as in the type definitions.

namespace caspr {

nlohmann::json summary_to_json(const Summary& summary);
Summary summary_from_json(const nlohmann::json& j);
Summary summary_from_json_text(const std::string& text);

nlohmann::json report_to_json(const MetricReport& report);
MetricReport report_from_json(const nlohmann::json& j);

}  // namespace caspr
