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

// Declarative pre/post-selected scenarios and the reports produced by running
// them. The builtin scenarios cover the three-particle, two-box pigeonhole
// configuration and its variations.

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tsvf/engine.hpp"
#include "tsvf/hilbert.hpp"
#include "tsvf/projectors.hpp"

namespace tsvf {

/// cL|L⟩ + cR|R⟩, normalized when built.
struct ExplicitAmplitudes {
  Complex left;
  Complex right;

  bool operator==(const ExplicitAmplitudes&) const = default;
};

using SingleParticleSpec = std::variant<SingleParticlePreset, ExplicitAmplitudes>;

/// A many-particle state: a product of single-particle states, or a
/// superposition of basis labels (normalized when built). Exactly one of the
/// two is populated.
struct StateSpec {
  std::vector<SingleParticleSpec> product;
  std::map<std::string, Complex> superposition;

  bool operator==(const StateSpec&) const = default;
};

Ket build_state(const SingleParticleSpec& spec,
                LabelConvention convention = LabelConvention::kBox);
Ket build_product_state(const std::vector<SingleParticleSpec>& specs,
                        LabelConvention convention = LabelConvention::kBox);
Ket build_state(const StateSpec& spec, int n_particles,
                LabelConvention convention = LabelConvention::kBox);

enum class QueryType {
  kAblAmplitude,
  kAblProbabilities,
  kWeakValue,
  kWeakValueSum,
  kDetailedVsGlobal,
  kTransitionElement,
  kPredicate,
};

enum class PredicateCheck { kIsProjector, kOrthogonal, kResolutionOfIdentity, kEigenstate };

const char* query_type_name(QueryType type);
QueryType parse_query_type(std::string_view name);
const char* predicate_check_name(PredicateCheck check);
PredicateCheck parse_predicate_check(std::string_view name);

struct Query {
  QueryType type = QueryType::kAblAmplitude;
  /// Single-operator queries use operators[0]; set queries use all of them.
  std::vector<HamiltonianSpec> operators;
  PredicateCheck check = PredicateCheck::kIsProjector;
  /// kEigenstate only.
  std::optional<StateSpec> state;
  Complex eigenvalue{1.0, 0.0};
  /// Free-text statement of what the query reproduces.
  std::string claim;

  bool operator==(const Query&) const = default;
};

/// Whether a query type takes exactly one operator.
bool is_single_operator(QueryType type);

struct Scenario {
  std::string name;
  std::string summary;
  int n_particles = 1;
  std::vector<SingleParticleSpec> pre;
  std::vector<SingleParticleSpec> post;
  std::vector<Query> queries;
  LabelConvention convention = LabelConvention::kBox;
  std::vector<std::string> notes;

  /// Throws Error(kInvalidSpec) on length or index violations.
  void validate() const;

  bool operator==(const Scenario&) const = default;
};

/// Presence-type quantities (ABL, weak) are kept apart from transition-type
/// quantities (matrix elements of a Hamiltonian).
enum class QuantityKind { kPresence, kTransition, kPredicate };

const char* quantity_kind_name(QuantityKind kind);
QuantityKind parse_quantity_kind(std::string_view name);

struct ComplexResult {
  std::string name;
  Complex value;
  bool vanishing = false;

  bool operator==(const ComplexResult&) const = default;
};

struct RealResult {
  std::string name;
  double value = 0.0;

  bool operator==(const RealResult&) const = default;
};

struct VerdictResult {
  std::string name;
  bool value = false;

  bool operator==(const VerdictResult&) const = default;
};

struct QueryRecord {
  Query query;
  std::string label;
  QuantityKind kind = QuantityKind::kPresence;
  std::vector<ComplexResult> amplitudes;
  std::vector<RealResult> reals;
  std::vector<VerdictResult> verdicts;
  std::optional<std::string> error;

  const ComplexResult* find_amplitude(std::string_view name) const;
  const RealResult* find_real(std::string_view name) const;
  const VerdictResult* find_verdict(std::string_view name) const;

  bool operator==(const QueryRecord&) const = default;
};

struct ScenarioReport {
  std::string scenario;
  std::string summary;
  int n_particles = 1;
  LabelConvention convention = LabelConvention::kBox;
  double tolerance = kZeroTolerance;
  std::vector<std::string> notes;
  std::vector<QueryRecord> records;

  bool has_errors() const;

  bool operator==(const ScenarioReport&) const = default;
};

struct RunOptions {
  double tolerance = kZeroTolerance;
};

/// Answers every query in order. Engine failures are captured per record and
/// do not stop the remaining queries. Throws only when the scenario itself is
/// invalid.
ScenarioReport run_scenario(const Scenario& scenario, const RunOptions& options = {});

/// Builtins in a fixed order.
const std::vector<Scenario>& builtin_scenarios();
/// Throws Error(kNotFound).
const Scenario& find_builtin(std::string_view name);

}  // namespace tsvf
