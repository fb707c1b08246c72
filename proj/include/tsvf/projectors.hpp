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

// Box and correlation projectors, weighted sums of them, and the predicates
// that decide whether an operator (or a list of them) is a legitimate
// projective question.

#include <span>
#include <string>
#include <vector>

#include "tsvf/hilbert.hpp"

namespace tsvf {

enum class ProjectorKind {
  kIdentity,
  /// One or more particles pinned to given boxes: Π1^L, or Π1^L Π2^L.
  kBox,
  /// Pair in identical boxes.
  kPairSame,
  /// Pair in different boxes.
  kPairDiff,
  /// All listed particles in identical boxes (all particles when none listed).
  kAllSame,
  /// Pair in identical boxes while a third particle sits in the other box.
  kSameDiff,
};

struct BoxAssignment {
  int particle = 1;
  Box box = Box::kL;

  bool operator==(const BoxAssignment&) const = default;
};

/// Description of a diagonal 0/1 projector. Particle indices are 1-based.
/// Unmentioned particles carry an implicit identity factor.
struct ProjectorSpec {
  ProjectorKind kind = ProjectorKind::kIdentity;
  int n_particles = 1;
  /// kPairSame/kPairDiff: the pair. kSameDiff: the pair followed by the
  /// distinguished third particle. kAllSame: optional subset.
  std::vector<int> particles;
  /// kBox only.
  std::vector<BoxAssignment> boxes;

  static ProjectorSpec identity(int n_particles);
  static ProjectorSpec box(int n_particles, int particle, Box box);
  static ProjectorSpec box_pattern(int n_particles, std::vector<BoxAssignment> boxes);
  static ProjectorSpec pair_same(int n_particles, int i, int j);
  static ProjectorSpec pair_diff(int n_particles, int i, int j);
  static ProjectorSpec all_same(int n_particles);
  static ProjectorSpec all_same(int n_particles, std::vector<int> particles);
  static ProjectorSpec same_diff(int n_particles, int i, int j, int third);

  /// Throws Error(kInvalidSpec) describing the first violated constraint.
  void validate() const;
  /// Whether the diagonal entry at this basis label is 1.
  bool holds(const BasisLabel& label) const;

  bool operator==(const ProjectorSpec&) const = default;
};

const char* projector_kind_name(ProjectorKind kind);
ProjectorKind parse_projector_kind(std::string_view name);

/// Display name such as "Π12_same", "Π^sd_12,3", "Π1^L" or, for kSpin,
/// "Π1^↑".
std::string describe(const ProjectorSpec& spec,
                     LabelConvention convention = LabelConvention::kBox);

struct HamiltonianTerm {
  Complex coefficient{1.0, 0.0};
  ProjectorSpec projector;

  bool operator==(const HamiltonianTerm&) const = default;
};

/// Weighted sum of projectors. The same structure describes interaction
/// Hamiltonians and arbitrary operator expressions in queries.
struct HamiltonianSpec {
  int n_particles = 1;
  std::vector<HamiltonianTerm> terms;

  static HamiltonianSpec single(ProjectorSpec projector);

  void validate() const;

  bool operator==(const HamiltonianSpec&) const = default;
};

std::string describe(const HamiltonianSpec& spec,
                     LabelConvention convention = LabelConvention::kBox);

Operator build_projector(const ProjectorSpec& spec,
                         LabelConvention convention = LabelConvention::kBox);
Operator build_hamiltonian(const HamiltonianSpec& spec,
                           LabelConvention convention = LabelConvention::kBox);

/// Ordered list of operators with display labels.
struct MeasurementSet {
  std::vector<Operator> projectors;
  std::vector<std::string> labels;

  MeasurementSet() = default;
  explicit MeasurementSet(std::vector<Operator> projectors, std::vector<std::string> labels = {});

  std::size_t size() const { return projectors.size(); }
  bool empty() const { return projectors.empty(); }
};

/// Max-entry norm of op - op†.
double hermiticity_defect(const Operator& op);
/// Max-entry norm of op² - op.
double idempotency_defect(const Operator& op);

bool is_hermitian(const Operator& op, double tol = kZeroTolerance);
bool is_projector(const Operator& op, double tol = kZeroTolerance);
bool are_orthogonal(const Operator& a, const Operator& b, double tol = kZeroTolerance);

/// Every member a projector, members pairwise orthogonal, sum equal to the
/// identity. Rejects empty input with kInvalidSpec.
bool is_resolution_of_identity(std::span<const Operator> ops, double tol = kZeroTolerance);
bool is_resolution_of_identity(const MeasurementSet& set, double tol = kZeroTolerance);

/// Re-expresses a box-labelled value with spin labels (L -> up, R -> down).
/// Amplitudes and matrix entries are carried over bit for bit.
Ket relabel_to_spin(const Ket& ket);
Operator relabel_to_spin(const Operator& op);
MeasurementSet relabel_to_spin(const MeasurementSet& set);

}  // namespace tsvf
