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

#include "gtest/gtest.h"
#include "tsvf/expression.hpp"

namespace tsvf {
namespace {

TEST(Expression, SingleAtoms) {
  EXPECT_EQ(parse_operator_expression("pair_same(1,2)", 3),
            HamiltonianSpec::single(ProjectorSpec::pair_same(3, 1, 2)));
  EXPECT_EQ(parse_operator_expression("sd(1,2;3)", 3),
            HamiltonianSpec::single(ProjectorSpec::same_diff(3, 1, 2, 3)));
  EXPECT_EQ(parse_operator_expression("sd(1, 2, 3)", 3),
            HamiltonianSpec::single(ProjectorSpec::same_diff(3, 1, 2, 3)));
  EXPECT_EQ(parse_operator_expression("all_same", 3),
            HamiltonianSpec::single(ProjectorSpec::all_same(3)));
  EXPECT_EQ(parse_operator_expression("identity", 2),
            HamiltonianSpec::single(ProjectorSpec::identity(2)));
}

TEST(Expression, BoxProductsMerge) {
  EXPECT_EQ(parse_operator_expression("box(1,L) * box(2,L)", 3),
            HamiltonianSpec::single(ProjectorSpec::box_pattern(3, {{1, Box::kL}, {2, Box::kL}})));
}

TEST(Expression, SumsAndCoefficients) {
  const HamiltonianSpec h = parse_operator_expression("pair_same(1,2) + pair_same(2,3) - 2i*all_same", 3);
  ASSERT_EQ(h.terms.size(), 3u);
  EXPECT_EQ(h.terms[0].coefficient, Complex(1.0));
  EXPECT_EQ(h.terms[2].coefficient, Complex(0.0, -2.0));
  EXPECT_EQ(h.terms[2].projector, ProjectorSpec::all_same(3));

  const HamiltonianSpec scalar = parse_operator_expression("-0.5", 2);
  ASSERT_EQ(scalar.terms.size(), 1u);
  EXPECT_EQ(scalar.terms[0].coefficient, Complex(-0.5));
  EXPECT_EQ(scalar.terms[0].projector.kind, ProjectorKind::kIdentity);
}

ParseError parse_error(const std::string& text, int n = 3) {
  try {
    parse_operator_expression(text, n);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "accepted: " << text;
  return ParseError(0, 0, "");
}

TEST(Expression, ErrorsHavePositions) {
  EXPECT_EQ(parse_error("pair_same(1,4)").column(), 1u);
  EXPECT_EQ(parse_error("pair_same(1,2) +").column(), 17u);
  EXPECT_EQ(parse_error("frobnicate").column(), 1u);
  EXPECT_EQ(parse_error("pair_same(1,2) * pair_same(2,3)").line(), 1u);
  const ParseError e(4, 7, "unexpected token");
  EXPECT_STREQ(e.what(), "line 4, column 7: unexpected token");
}

TEST(ExpressionList, CommentsAndLines) {
  const auto specs = parse_operator_list("# header\nsd(1,2;3)\n\n  all_same  # trailing\n", 3);
  ASSERT_EQ(specs.size(), 2u);
  EXPECT_EQ(specs[1], HamiltonianSpec::single(ProjectorSpec::all_same(3)));
  try {
    parse_operator_list("all_same\npair_same(1,\n", 3);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_operator_list("# nothing\n", 3), ParseError);
}

}  // namespace
}  // namespace tsvf
