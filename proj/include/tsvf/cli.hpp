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

// Command-line front end: `list`, `run` and `check`.
//
// Exit codes: 0 success; 1 the input could not be read, parsed or validated;
// 2 a scenario ran but at least one query reported an error.

#include <iosfwd>
#include <string>
#include <vector>

#include "tsvf/hilbert.hpp"
#include "tsvf/projectors.hpp"

namespace tsvf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitQueryErrors = 2;

struct OperatorCheck {
  std::string expression;
  bool is_projector = false;
  bool hermitian = false;
  double hermiticity_defect = 0.0;
  double idempotency_defect = 0.0;
};

struct PairCheck {
  std::size_t first = 0;
  std::size_t second = 0;
  bool orthogonal = false;
};

struct CheckReport {
  int n_particles = 0;
  double tolerance = kZeroTolerance;
  std::vector<OperatorCheck> operators;
  std::vector<PairCheck> pairs;
  bool resolution_of_identity = false;
};

CheckReport check_operators(const std::vector<HamiltonianSpec>& specs,
                            double tol = kZeroTolerance);

void cmd_list(std::ostream& out);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tsvf::cli
