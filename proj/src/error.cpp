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

#include "tsvf/error.hpp"

namespace tsvf {

const char* error_kind_message(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDimensionMismatch:
      return "dimension mismatch";
    case ErrorKind::kUnnormalizableState:
      return "unnormalizable state";
    case ErrorKind::kNotNormalized:
      return "state is not normalized";
    case ErrorKind::kInvalidState:
      return "invalid state";
    case ErrorKind::kInvalidSpec:
      return "invalid projector spec";
    case ErrorKind::kConventionMismatch:
      return "label convention mismatch";
    case ErrorKind::kIncompleteMeasurement:
      return "incomplete measurement";
    case ErrorKind::kImpossiblePostselection:
      return "impossible postselection";
    case ErrorKind::kOrthogonalSelection:
      return "orthogonal pre/postselection";
    case ErrorKind::kNonProjectorMember:
      return "non-projector member";
    case ErrorKind::kNotLegitimateQuestion:
      return "not a legitimate question";
    case ErrorKind::kNotFound:
      return "not found";
  }
  return "unknown error";
}

namespace {

std::string compose(ErrorKind kind, const std::string& detail) {
  std::string message = error_kind_message(kind);
  if (!detail.empty()) {
    message += ": ";
    message += detail;
  }
  return message;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(compose(kind, detail)), kind_(kind) {}

}  // namespace tsvf
