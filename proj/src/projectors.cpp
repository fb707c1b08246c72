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

#include "tsvf/projectors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "tsvf/error.hpp"

namespace tsvf {

namespace {

void require(bool condition, const std::string& detail) {
  if (!condition) throw Error(ErrorKind::kInvalidSpec, detail);
}

void require_indices(const std::vector<int>& particles, int n_particles) {
  std::set<int> seen;
  for (int p : particles) {
    require(p >= 1 && p <= n_particles, "particle index " + std::to_string(p) +
                                            " outside 1.." + std::to_string(n_particles));
    require(seen.insert(p).second, "particle index " + std::to_string(p) + " repeated");
  }
}

const char* box_letter(Box box, LabelConvention convention) {
  if (convention == LabelConvention::kSpin) return box == Box::kL ? "↑" : "⇓";
  return box == Box::kL ? "L" : "R";
}

std::string join_indices(const std::vector<int>& particles) {
  std::string out;
  for (int p : particles) out += std::to_string(p);
  return out;
}

std::string coefficient_prefix(Complex c) {
  if (c == Complex{1.0, 0.0}) return "";
  char buf[64];
  if (c.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%g·", c.real());
  } else if (c.real() == 0.0) {
    std::snprintf(buf, sizeof buf, "%gi·", c.imag());
  } else {
    std::snprintf(buf, sizeof buf, "(%g%+gi)·", c.real(), c.imag());
  }
  return buf;
}

void replace_all(std::string& s, const std::string& from, const std::string& to) {
  for (std::size_t pos = s.find(from); pos != std::string::npos;
       pos = s.find(from, pos + to.size())) {
    s.replace(pos, from.size(), to);
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// ProjectorSpec

ProjectorSpec ProjectorSpec::identity(int n_particles) {
  ProjectorSpec spec{ProjectorKind::kIdentity, n_particles, {}, {}};
  spec.validate();
  return spec;
}

ProjectorSpec ProjectorSpec::box(int n_particles, int particle, Box box) {
  return box_pattern(n_particles, {BoxAssignment{particle, box}});
}

ProjectorSpec ProjectorSpec::box_pattern(int n_particles, std::vector<BoxAssignment> boxes) {
  ProjectorSpec spec{ProjectorKind::kBox, n_particles, {}, std::move(boxes)};
  spec.validate();
  return spec;
}

ProjectorSpec ProjectorSpec::pair_same(int n_particles, int i, int j) {
  ProjectorSpec spec{ProjectorKind::kPairSame, n_particles, {i, j}, {}};
  spec.validate();
  return spec;
}

ProjectorSpec ProjectorSpec::pair_diff(int n_particles, int i, int j) {
  ProjectorSpec spec{ProjectorKind::kPairDiff, n_particles, {i, j}, {}};
  spec.validate();
  return spec;
}

ProjectorSpec ProjectorSpec::all_same(int n_particles) { return all_same(n_particles, {}); }

ProjectorSpec ProjectorSpec::all_same(int n_particles, std::vector<int> particles) {
  ProjectorSpec spec{ProjectorKind::kAllSame, n_particles, std::move(particles), {}};
  spec.validate();
  return spec;
}

ProjectorSpec ProjectorSpec::same_diff(int n_particles, int i, int j, int third) {
  ProjectorSpec spec{ProjectorKind::kSameDiff, n_particles, {i, j, third}, {}};
  spec.validate();
  return spec;
}

void ProjectorSpec::validate() const {
  require(n_particles >= 1 && n_particles <= kMaxParticles,
          "particle count " + std::to_string(n_particles) + " outside 1.." +
              std::to_string(kMaxParticles));
  switch (kind) {
    case ProjectorKind::kIdentity:
      require(particles.empty() && boxes.empty(), "identity takes no arguments");
      break;
    case ProjectorKind::kBox: {
      require(!boxes.empty(), "box projector needs at least one particle");
      require(particles.empty(), "box projector takes box assignments only");
      std::vector<int> indices;
      for (const BoxAssignment& a : boxes) indices.push_back(a.particle);
      require_indices(indices, n_particles);
      break;
    }
    case ProjectorKind::kPairSame:
    case ProjectorKind::kPairDiff:
      require(n_particles >= 2, "pair projectors need at least 2 particles");
      require(particles.size() == 2, "pair projectors take exactly 2 particle indices");
      require(boxes.empty(), "pair projectors take no box assignments");
      require_indices(particles, n_particles);
      break;
    case ProjectorKind::kAllSame:
      require(boxes.empty(), "all_same takes no box assignments");
      require(particles.empty() || particles.size() >= 2,
              "all_same needs at least 2 particle indices when a subset is given");
      require_indices(particles, n_particles);
      break;
    case ProjectorKind::kSameDiff:
      require(n_particles >= 3, "sd projectors need at least 3 particles");
      require(particles.size() == 3, "sd projectors take a pair and a third particle");
      require(boxes.empty(), "sd projectors take no box assignments");
      require_indices(particles, n_particles);
      break;
  }
}

bool ProjectorSpec::holds(const BasisLabel& label) const {
  switch (kind) {
    case ProjectorKind::kIdentity:
      return true;
    case ProjectorKind::kBox:
      return std::all_of(boxes.begin(), boxes.end(), [&](const BoxAssignment& a) {
        return label.box(a.particle) == a.box;
      });
    case ProjectorKind::kPairSame:
      return label.box(particles[0]) == label.box(particles[1]);
    case ProjectorKind::kPairDiff:
      return label.box(particles[0]) != label.box(particles[1]);
    case ProjectorKind::kAllSame: {
      if (particles.empty()) {
        for (int p = 2; p <= label.n_particles(); ++p) {
          if (label.box(p) != label.box(1)) return false;
        }
        return true;
      }
      return std::all_of(particles.begin(), particles.end(),
                         [&](int p) { return label.box(p) == label.box(particles[0]); });
    }
    case ProjectorKind::kSameDiff:
      return label.box(particles[0]) == label.box(particles[1]) &&
             label.box(particles[2]) != label.box(particles[0]);
  }
  return false;
}

const char* projector_kind_name(ProjectorKind kind) {
  switch (kind) {
    case ProjectorKind::kIdentity:
      return "identity";
    case ProjectorKind::kBox:
      return "box";
    case ProjectorKind::kPairSame:
      return "pair_same";
    case ProjectorKind::kPairDiff:
      return "pair_diff";
    case ProjectorKind::kAllSame:
      return "all_same";
    case ProjectorKind::kSameDiff:
      return "sd";
  }
  return "?";
}

ProjectorKind parse_projector_kind(std::string_view name) {
  for (ProjectorKind kind :
       {ProjectorKind::kIdentity, ProjectorKind::kBox, ProjectorKind::kPairSame,
        ProjectorKind::kPairDiff, ProjectorKind::kAllSame, ProjectorKind::kSameDiff}) {
    if (name == projector_kind_name(kind)) return kind;
  }
  throw Error(ErrorKind::kInvalidSpec, "unknown projector kind '" + std::string(name) + "'");
}

std::string describe(const ProjectorSpec& spec, LabelConvention convention) {
  switch (spec.kind) {
    case ProjectorKind::kIdentity:
      return "1";
    case ProjectorKind::kBox: {
      std::string out;
      for (const BoxAssignment& a : spec.boxes) {
        out += "Π" + std::to_string(a.particle) + "^" + box_letter(a.box, convention);
      }
      return out;
    }
    case ProjectorKind::kPairSame:
      return "Π" + join_indices(spec.particles) + "_same";
    case ProjectorKind::kPairDiff:
      return "Π" + join_indices(spec.particles) + "_diff";
    case ProjectorKind::kAllSame: {
      if (!spec.particles.empty()) return "Π" + join_indices(spec.particles) + "_same";
      std::vector<int> all;
      for (int p = 1; p <= spec.n_particles; ++p) all.push_back(p);
      return "Π" + join_indices(all) + "_same";
    }
    case ProjectorKind::kSameDiff:
      return "Π^sd_" + std::to_string(spec.particles[0]) + std::to_string(spec.particles[1]) +
             "," + std::to_string(spec.particles[2]);
  }
  return "?";
}

// ---------------------------------------------------------------------------
// HamiltonianSpec

HamiltonianSpec HamiltonianSpec::single(ProjectorSpec projector) {
  HamiltonianSpec spec;
  spec.n_particles = projector.n_particles;
  spec.terms.push_back(HamiltonianTerm{Complex{1.0, 0.0}, std::move(projector)});
  return spec;
}

void HamiltonianSpec::validate() const {
  require(n_particles >= 1 && n_particles <= kMaxParticles, "particle count out of range");
  for (const HamiltonianTerm& term : terms) {
    require(is_finite(term.coefficient), "non-finite coefficient");
    require(term.projector.n_particles == n_particles,
            "term on " + std::to_string(term.projector.n_particles) +
                " particles in a sum over " + std::to_string(n_particles));
    term.projector.validate();
  }
}

std::string describe(const HamiltonianSpec& spec, LabelConvention convention) {
  if (spec.terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < spec.terms.size(); ++i) {
    if (i > 0) out += " + ";
    out += coefficient_prefix(spec.terms[i].coefficient) +
           describe(spec.terms[i].projector, convention);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Builders

Operator build_projector(const ProjectorSpec& spec, LabelConvention convention) {
  spec.validate();
  const std::size_t dim = dimension_for(spec.n_particles);
  std::vector<Complex> diag(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    diag[i] = spec.holds(BasisLabel::from_index(i, spec.n_particles)) ? 1.0 : 0.0;
  }
  return Operator::diagonal(spec.n_particles, diag, convention);
}

Operator build_hamiltonian(const HamiltonianSpec& spec, LabelConvention convention) {
  spec.validate();
  Operator sum = Operator::zero(spec.n_particles, convention);
  for (const HamiltonianTerm& term : spec.terms) {
    sum += term.coefficient * build_projector(term.projector, convention);
  }
  return sum;
}

MeasurementSet::MeasurementSet(std::vector<Operator> ops, std::vector<std::string> names)
    : projectors(std::move(ops)), labels(std::move(names)) {
  if (labels.empty()) {
    for (std::size_t i = 0; i < projectors.size(); ++i) {
      labels.push_back("P" + std::to_string(i + 1));
    }
  }
  if (labels.size() != projectors.size()) {
    throw Error(ErrorKind::kInvalidSpec, "label count does not match operator count");
  }
  for (const Operator& op : projectors) {
    if (op.dimension() != projectors.front().dimension()) {
      throw Error(ErrorKind::kDimensionMismatch, "measurement set members differ in size");
    }
  }
}

// ---------------------------------------------------------------------------
// Predicates

double hermiticity_defect(const Operator& op) { return (op - op.adjoint()).max_abs_entry(); }

double idempotency_defect(const Operator& op) { return (op * op - op).max_abs_entry(); }

bool is_hermitian(const Operator& op, double tol) { return hermiticity_defect(op) <= tol; }

bool is_projector(const Operator& op, double tol) {
  return is_hermitian(op, tol) && idempotency_defect(op) <= tol;
}

bool are_orthogonal(const Operator& a, const Operator& b, double tol) {
  return (a * b).max_abs_entry() <= tol && (b * a).max_abs_entry() <= tol;
}

bool is_resolution_of_identity(std::span<const Operator> ops, double tol) {
  if (ops.empty()) throw Error(ErrorKind::kInvalidSpec, "empty measurement set");
  Operator sum = Operator::zero(ops.front().n_particles(), ops.front().convention());
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (!is_projector(ops[i], tol)) return false;
    for (std::size_t j = i + 1; j < ops.size(); ++j) {
      if (!are_orthogonal(ops[i], ops[j], tol)) return false;
    }
    sum += ops[i];
  }
  const Operator identity = Operator::identity(sum.n_particles(), sum.convention());
  return (sum - identity).max_abs_entry() <= tol;
}

bool is_resolution_of_identity(const MeasurementSet& set, double tol) {
  return is_resolution_of_identity(std::span<const Operator>(set.projectors), tol);
}

// ---------------------------------------------------------------------------
// Spin relabeling

Ket relabel_to_spin(const Ket& ket) { return ket.with_convention(LabelConvention::kSpin); }

Operator relabel_to_spin(const Operator& op) {
  return op.with_convention(LabelConvention::kSpin);
}

MeasurementSet relabel_to_spin(const MeasurementSet& set) {
  MeasurementSet out;
  for (const Operator& op : set.projectors) out.projectors.push_back(relabel_to_spin(op));
  for (std::string label : set.labels) {
    replace_all(label, "^L", "^↑");
    replace_all(label, "^R", "^⇓");
    out.labels.push_back(std::move(label));
  }
  return out;
}

}  // namespace tsvf
