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

#include "tsvf/engine.hpp"

#include <cmath>

#include "tsvf/error.hpp"

namespace tsvf {

namespace {

void check_dimension(const PrePostSelection& sel, const Operator& op) {
  if (op.dimension() != sel.pre().dimension()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "operator of size " + std::to_string(op.dimension()) + " on a " +
                    std::to_string(sel.pre().dimension()) + "-dimensional selection");
  }
}

Complex checked_overlap(const PrePostSelection& sel, double tol) {
  const Complex overlap = sel.overlap();
  if (std::abs(overlap) <= tol) throw Error(ErrorKind::kOrthogonalSelection);
  return overlap;
}

}  // namespace

PrePostSelection::PrePostSelection(Ket pre, Ket post)
    : pre_(std::move(pre)), post_(std::move(post)) {
  if (pre_.dimension() != post_.dimension()) {
    throw Error(ErrorKind::kDimensionMismatch, "pre- and postselected states differ in size");
  }
  if (pre_.convention() != post_.convention()) throw Error(ErrorKind::kConventionMismatch);
}

Complex PrePostSelection::overlap() const { return inner(post_, pre_); }

Complex abl_amplitude(const PrePostSelection& sel, const Operator& op) {
  check_dimension(sel, op);
  return matrix_element(sel.post(), op, sel.pre());
}

AblResult abl_probabilities(const PrePostSelection& sel, const MeasurementSet& set,
                            double tol) {
  if (set.empty()) throw Error(ErrorKind::kIncompleteMeasurement, "empty measurement set");
  for (const Operator& op : set.projectors) check_dimension(sel, op);
  if (!is_resolution_of_identity(set, tol)) throw Error(ErrorKind::kIncompleteMeasurement);

  AblResult result;
  for (const Operator& op : set.projectors) {
    const Complex amp = abl_amplitude(sel, op);
    result.amplitudes.push_back(amp);
    result.normalization += std::norm(amp);
  }
  if (result.normalization <= tol * tol) throw Error(ErrorKind::kImpossiblePostselection);
  for (const Complex& amp : result.amplitudes) {
    result.probabilities.push_back(std::norm(amp) / result.normalization);
  }
  return result;
}

Complex weak_value(const PrePostSelection& sel, const Operator& op, double tol) {
  check_dimension(sel, op);
  const Complex overlap = checked_overlap(sel, tol);
  return abl_amplitude(sel, op) / overlap;
}

WeakValueSum weak_value_sum_detail(const PrePostSelection& sel, std::span<const Operator> ops,
                                   double tol) {
  const Complex overlap = checked_overlap(sel, tol);
  WeakValueSum out;
  Operator summed = Operator::zero(sel.pre().n_particles(), sel.pre().convention());
  for (const Operator& op : ops) {
    check_dimension(sel, op);
    const Complex wv = abl_amplitude(sel, op) / overlap;
    out.terms.push_back(wv);
    out.sum += wv;
    summed += op;
  }
  out.of_sum = abl_amplitude(sel, summed) / overlap;
  // Both routes are linear in the operators; disagreement means corrupted input.
  if (std::abs(out.sum - out.of_sum) > tol * std::max(1.0, static_cast<double>(ops.size()))) {
    throw std::logic_error("weak value sum: term-wise and summed routes disagree");
  }
  return out;
}

Complex weak_value_sum(const PrePostSelection& sel, std::span<const Operator> ops, double tol) {
  return weak_value_sum_detail(sel, ops, tol).sum;
}

double detailed_probability(const PrePostSelection& sel, const MeasurementSet& set,
                            double tol) {
  double total = 0.0;
  for (std::size_t i = 0; i < set.size(); ++i) {
    const Operator& op = set.projectors[i];
    check_dimension(sel, op);
    if (!is_projector(op, tol)) throw Error(ErrorKind::kNonProjectorMember, set.labels[i]);
    total += std::norm(abl_amplitude(sel, op));
  }
  return total;
}

double global_probability(const PrePostSelection& sel, const MeasurementSet& set, double tol) {
  Operator summed = Operator::zero(sel.pre().n_particles(), sel.pre().convention());
  for (const Operator& op : set.projectors) {
    check_dimension(sel, op);
    summed += op;
  }
  if (!is_projector(summed, tol)) throw Error(ErrorKind::kNotLegitimateQuestion);
  return std::norm(abl_amplitude(sel, summed));
}

Complex transition_element(const PrePostSelection& sel, const Operator& hamiltonian) {
  check_dimension(sel, hamiltonian);
  return matrix_element(sel.post(), hamiltonian, sel.pre());
}

}  // namespace tsvf
