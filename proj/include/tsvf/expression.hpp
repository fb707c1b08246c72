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

// Text form of weighted projector sums, used by the `check` command.
//
//   expr    := ['-'] term (('+' | '-') term)*
//   term    := [scalar ['*']] product | scalar
//   scalar  := number ['i'] | 'i'
//   product := atom ('*' atom)*          (only box atoms may be multiplied)
//   atom    := identity | box(p, L|R) | pair_same(i, j) | pair_diff(i, j)
//            | all_same [ (i, j, ...) ] | sd(i, j; k)
//
// A bare scalar stands for that multiple of the identity.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tsvf/projectors.hpp"

namespace tsvf {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  /// 1-based.
  std::size_t line() const { return line_; }
  /// 1-based.
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

HamiltonianSpec parse_operator_expression(std::string_view text, int n_particles,
                                          std::size_t line = 1);

/// One expression per non-blank line; '#' starts a comment.
std::vector<HamiltonianSpec> parse_operator_list(std::string_view text, int n_particles);

}  // namespace tsvf
