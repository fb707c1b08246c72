// Copyright 2026 The tsvf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON encoding of scenario files and report documents.
//
// Complex numbers are two-element arrays [re, im]. Particle indices are
// 1-based. Keys are emitted in a fixed order so output is byte-stable.

#include <filesystem>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "tsvf/scenarios.hpp"

namespace tsvf::io {

using Json = nlohmann::ordered_json;

/// Validation failure located by a JSON-pointer-style path such as
/// "/queries/2/projector/pair/1".
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string path, const std::string& message);

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

Json complex_to_json(Complex value);

Scenario scenario_from_json(const Json& doc);
Json scenario_to_json(const Scenario& scenario);

/// Reads and validates a scenario file. I/O and syntax failures are reported
/// as SchemaError with an empty path.
Scenario load_scenario_file(const std::filesystem::path& path);

Json report_to_json(const ScenarioReport& report);
ScenarioReport report_from_json(const Json& doc);

}  // namespace tsvf::io
