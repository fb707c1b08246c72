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

#include <optional>
#include <ostream>
#include <string>

#include "tsvf/hilbert.hpp"
#include "tsvf/scenarios.hpp"

namespace tsvf::format {

/// Largest denominator tried when annotating a value with an exact fraction.
inline constexpr int kMaxDenominator = 64;

/// "a + bi" with 6 significant digits per component.
std::string complex_text(Complex value);
/// 6 significant digits.
std::string real_text(double value);

/// "p/q" (or "p") for a real value that is within tol of such a fraction with
/// q ≤ kMaxDenominator.
std::optional<std::string> fraction_annotation(double value, double tol = kZeroTolerance);
/// "(p+qi)/r", "p/r", "qi/r" and similar forms for dyadic-style complex
/// values, using the smallest common denominator r ≤ kMaxDenominator.
std::optional<std::string> fraction_annotation(Complex value, double tol = kZeroTolerance);

/// Human-readable rendering of a report: one row per quantity.
void write_table(std::ostream& out, const ScenarioReport& report);

}  // namespace tsvf::format
