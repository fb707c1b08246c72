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

// Quantities of a pre- and postselected system: ABL amplitudes and
// probabilities, weak values, detailed (incoherent) versus global (coherent)
// probabilities, and transition matrix elements.

#include <span>
#include <vector>

#include "tsvf/hilbert.hpp"
#include "tsvf/projectors.hpp"

namespace tsvf {

/// Preselected state |in⟩ and postselected state |f⟩ of equal dimension.
class PrePostSelection {
 public:
  PrePostSelection(Ket pre, Ket post);

  const Ket& pre() const { return pre_; }
  const Ket& post() const { return post_; }
  /// ⟨f|in⟩.
  Complex overlap() const;

 private:
  Ket pre_;
  Ket post_;
};

struct AblResult {
  std::vector<Complex> amplitudes;
  std::vector<double> probabilities;
  /// Σ_j |⟨f|Π_j|in⟩|².
  double normalization = 0.0;
};

/// ⟨f|op|in⟩.
Complex abl_amplitude(const PrePostSelection& sel, const Operator& op);

/// P(k) = |⟨f|Π_k|in⟩|² / Σ_j |⟨f|Π_j|in⟩|² over a complete projective
/// measurement. Throws kIncompleteMeasurement when the set is not a
/// resolution of the identity and kImpossiblePostselection when the
/// denominator is at most tol².
AblResult abl_probabilities(const PrePostSelection& sel, const MeasurementSet& set,
                            double tol = kZeroTolerance);

/// ⟨f|op|in⟩ / ⟨f|in⟩. Throws kOrthogonalSelection when |⟨f|in⟩| ≤ tol.
Complex weak_value(const PrePostSelection& sel, const Operator& op,
                   double tol = kZeroTolerance);

struct WeakValueSum {
  /// Individual weak values in input order.
  std::vector<Complex> terms;
  /// Σ of the individual weak values.
  Complex sum;
  /// Weak value of the summed operator.
  Complex of_sum;
};

/// Sum of weak values, computed term by term and again as the weak value of
/// the summed operator. The two routes must agree within tol.
WeakValueSum weak_value_sum_detail(const PrePostSelection& sel, std::span<const Operator> ops,
                                   double tol = kZeroTolerance);
Complex weak_value_sum(const PrePostSelection& sel, std::span<const Operator> ops,
                       double tol = kZeroTolerance);

/// Σ_i |⟨f|Π_i|in⟩|². Members must be projectors; completeness is not
/// required.
double detailed_probability(const PrePostSelection& sel, const MeasurementSet& set,
                            double tol = kZeroTolerance);

/// |⟨f|Σ_i Π_i|in⟩|². The summed operator must itself be a projector,
/// otherwise kNotLegitimateQuestion.
double global_probability(const PrePostSelection& sel, const MeasurementSet& set,
                          double tol = kZeroTolerance);

/// ⟨f|H|in⟩ for an interaction Hamiltonian. A transition quantity, not a
/// statement about intermediate presence.
Complex transition_element(const PrePostSelection& sel, const Operator& hamiltonian);

}  // namespace tsvf
