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

#include <stdexcept>
#include <string>

namespace tsvf {

/// Failure categories shared by every layer. The message text of each kind is
/// stable and is what reports and the CLI surface.
enum class ErrorKind {
  kDimensionMismatch,
  kUnnormalizableState,
  kNotNormalized,
  kInvalidState,
  kInvalidSpec,
  kConventionMismatch,
  kIncompleteMeasurement,
  kImpossiblePostselection,
  kOrthogonalSelection,
  kNonProjectorMember,
  kNotLegitimateQuestion,
  kNotFound,
};

const char* error_kind_message(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail = {});

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tsvf
