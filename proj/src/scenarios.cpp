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

#include "tsvf/scenarios.hpp"

#include <algorithm>
#include <cmath>

#include "tsvf/error.hpp"

namespace tsvf {

namespace {

void require(bool condition, const std::string& detail) {
  if (!condition) throw Error(ErrorKind::kInvalidSpec, detail);
}

std::string set_label(const std::vector<HamiltonianSpec>& ops, LabelConvention convention) {
  std::string out = "{";
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (i > 0) out += ", ";
    out += describe(ops[i], convention);
  }
  return out + "}";
}

std::string record_label(const Query& query, LabelConvention convention) {
  if (is_single_operator(query.type) && query.type != QueryType::kPredicate) {
    return describe(query.operators.front(), convention);
  }
  if (query.type == QueryType::kPredicate) {
    std::string what = predicate_check_name(query.check);
    if (query.operators.size() == 1) return what + " " + describe(query.operators[0], convention);
    return what + " " + set_label(query.operators, convention);
  }
  return set_label(query.operators, convention);
}

MeasurementSet build_set(const std::vector<HamiltonianSpec>& ops, LabelConvention convention) {
  std::vector<Operator> built;
  std::vector<std::string> labels;
  for (const HamiltonianSpec& op : ops) {
    built.push_back(build_hamiltonian(op, convention));
    labels.push_back(describe(op, convention));
  }
  return MeasurementSet(std::move(built), std::move(labels));
}

class RecordBuilder {
 public:
  RecordBuilder(QueryRecord& record, double tol) : record_(record), tol_(tol) {}

  void amplitude(std::string name, Complex value) {
    record_.amplitudes.push_back(ComplexResult{std::move(name), value, is_vanishing(value, tol_)});
  }
  void real(std::string name, double value) {
    record_.reals.push_back(RealResult{std::move(name), value});
  }
  void verdict(std::string name, bool value) {
    record_.verdicts.push_back(VerdictResult{std::move(name), value});
  }

 private:
  QueryRecord& record_;
  double tol_;
};

void answer(const Query& query, const PrePostSelection& sel, int n_particles,
            LabelConvention convention, double tol, QueryRecord& record) {
  RecordBuilder out(record, tol);
  const MeasurementSet set = build_set(query.operators, convention);

  switch (query.type) {
    case QueryType::kAblAmplitude:
      out.amplitude("amplitude", abl_amplitude(sel, set.projectors[0]));
      break;

    case QueryType::kAblProbabilities: {
      const AblResult result = abl_probabilities(sel, set, tol);
      for (std::size_t i = 0; i < set.size(); ++i) out.amplitude(set.labels[i], result.amplitudes[i]);
      for (std::size_t i = 0; i < set.size(); ++i) {
        out.real("P(" + set.labels[i] + ")", result.probabilities[i]);
      }
      out.real("normalization", result.normalization);
      break;
    }

    case QueryType::kWeakValue:
      out.amplitude("amplitude", abl_amplitude(sel, set.projectors[0]));
      out.amplitude("overlap", sel.overlap());
      out.amplitude("weak_value", weak_value(sel, set.projectors[0], tol));
      break;

    case QueryType::kWeakValueSum: {
      const WeakValueSum wv = weak_value_sum_detail(sel, set.projectors, tol);
      for (std::size_t i = 0; i < set.size(); ++i) {
        out.amplitude("(" + set.labels[i] + ")_w", wv.terms[i]);
      }
      out.amplitude("sum", wv.sum);
      out.amplitude("weak_value_of_sum", wv.of_sum);
      break;
    }

    case QueryType::kDetailedVsGlobal: {
      Operator summed = Operator::zero(n_particles, convention);
      for (std::size_t i = 0; i < set.size(); ++i) {
        out.amplitude(set.labels[i], abl_amplitude(sel, set.projectors[i]));
        summed += set.projectors[i];
      }
      out.amplitude("summed", abl_amplitude(sel, summed));
      out.real("detailed", detailed_probability(sel, set, tol));
      out.real("global", global_probability(sel, set, tol));
      break;
    }

    case QueryType::kTransitionElement:
      out.amplitude("transition_element", transition_element(sel, set.projectors[0]));
      break;

    case QueryType::kPredicate:
      switch (query.check) {
        case PredicateCheck::kIsProjector:
          for (std::size_t i = 0; i < set.size(); ++i) {
            const Operator& op = set.projectors[i];
            const std::string& label = set.labels[i];
            out.verdict("is_projector(" + label + ")", is_projector(op, tol));
            out.verdict("hermitian(" + label + ")", is_hermitian(op, tol));
            out.real("hermiticity_defect(" + label + ")", hermiticity_defect(op));
            out.real("idempotency_defect(" + label + ")", idempotency_defect(op));
          }
          break;
        case PredicateCheck::kOrthogonal:
          for (std::size_t i = 0; i < set.size(); ++i) {
            for (std::size_t j = i + 1; j < set.size(); ++j) {
              out.verdict("orthogonal(" + set.labels[i] + ", " + set.labels[j] + ")",
                          are_orthogonal(set.projectors[i], set.projectors[j], tol));
            }
          }
          break;
        case PredicateCheck::kResolutionOfIdentity:
          out.verdict("resolution_of_identity", is_resolution_of_identity(set, tol));
          break;
        case PredicateCheck::kEigenstate: {
          const Ket ket = build_state(*query.state, n_particles, convention);
          const Operator& op = set.projectors[0];
          const RawVector image = apply(op, ket);
          double sq = 0.0;
          for (std::size_t i = 0; i < ket.dimension(); ++i) {
            sq += std::norm(image[i] - query.eigenvalue * ket[i]);
          }
          out.verdict("is_eigenstate", is_eigenstate(op, ket, query.eigenvalue, tol));
          out.real("residual", std::sqrt(sq));
          break;
        }
      }
      break;
  }
}

QuantityKind kind_of(QueryType type) {
  switch (type) {
    case QueryType::kTransitionElement:
      return QuantityKind::kTransition;
    case QueryType::kPredicate:
      return QuantityKind::kPredicate;
    default:
      return QuantityKind::kPresence;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// States

Ket build_state(const SingleParticleSpec& spec, LabelConvention convention) {
  if (const auto* preset = std::get_if<SingleParticlePreset>(&spec)) {
    return make_single_particle_state(*preset).with_convention(convention);
  }
  const auto& explicit_amps = std::get<ExplicitAmplitudes>(spec);
  return make_single_particle_state(explicit_amps.left, explicit_amps.right)
      .with_convention(convention);
}

Ket build_product_state(const std::vector<SingleParticleSpec>& specs,
                        LabelConvention convention) {
  std::vector<Ket> factors;
  factors.reserve(specs.size());
  for (const SingleParticleSpec& spec : specs) factors.push_back(build_state(spec, convention));
  return tensor(factors);
}

Ket build_state(const StateSpec& spec, int n_particles, LabelConvention convention) {
  const bool has_product = !spec.product.empty();
  const bool has_superposition = !spec.superposition.empty();
  require(has_product != has_superposition,
          "state needs exactly one of a product or a superposition");
  if (has_product) {
    require(static_cast<int>(spec.product.size()) == n_particles,
            "product state has " + std::to_string(spec.product.size()) +
                " factors for " + std::to_string(n_particles) + " particles");
    return build_product_state(spec.product, convention);
  }
  std::vector<Complex> amps(dimension_for(n_particles));
  for (const auto& [text, value] : spec.superposition) {
    const BasisLabel label(text);
    require(label.n_particles() == n_particles,
            "basis label '" + text + "' does not have " + std::to_string(n_particles) +
                " letters");
    amps[label.index()] = value;
  }
  return Ket::normalize(n_particles, std::move(amps), convention);
}

// ---------------------------------------------------------------------------
// Names

const char* query_type_name(QueryType type) {
  switch (type) {
    case QueryType::kAblAmplitude:
      return "abl_amplitude";
    case QueryType::kAblProbabilities:
      return "abl_probabilities";
    case QueryType::kWeakValue:
      return "weak_value";
    case QueryType::kWeakValueSum:
      return "weak_value_sum";
    case QueryType::kDetailedVsGlobal:
      return "detailed_vs_global";
    case QueryType::kTransitionElement:
      return "transition_element";
    case QueryType::kPredicate:
      return "predicate";
  }
  return "?";
}

QueryType parse_query_type(std::string_view name) {
  for (QueryType type :
       {QueryType::kAblAmplitude, QueryType::kAblProbabilities, QueryType::kWeakValue,
        QueryType::kWeakValueSum, QueryType::kDetailedVsGlobal, QueryType::kTransitionElement,
        QueryType::kPredicate}) {
    if (name == query_type_name(type)) return type;
  }
  throw Error(ErrorKind::kInvalidSpec, "unknown query type '" + std::string(name) + "'");
}

const char* predicate_check_name(PredicateCheck check) {
  switch (check) {
    case PredicateCheck::kIsProjector:
      return "is_projector";
    case PredicateCheck::kOrthogonal:
      return "orthogonal";
    case PredicateCheck::kResolutionOfIdentity:
      return "resolution_of_identity";
    case PredicateCheck::kEigenstate:
      return "is_eigenstate";
  }
  return "?";
}

PredicateCheck parse_predicate_check(std::string_view name) {
  for (PredicateCheck check : {PredicateCheck::kIsProjector, PredicateCheck::kOrthogonal,
                               PredicateCheck::kResolutionOfIdentity, PredicateCheck::kEigenstate}) {
    if (name == predicate_check_name(check)) return check;
  }
  throw Error(ErrorKind::kInvalidSpec, "unknown predicate check '" + std::string(name) + "'");
}

const char* quantity_kind_name(QuantityKind kind) {
  switch (kind) {
    case QuantityKind::kPresence:
      return "presence";
    case QuantityKind::kTransition:
      return "transition";
    case QuantityKind::kPredicate:
      return "predicate";
  }
  return "?";
}

QuantityKind parse_quantity_kind(std::string_view name) {
  for (QuantityKind kind :
       {QuantityKind::kPresence, QuantityKind::kTransition, QuantityKind::kPredicate}) {
    if (name == quantity_kind_name(kind)) return kind;
  }
  throw Error(ErrorKind::kInvalidSpec, "unknown quantity kind '" + std::string(name) + "'");
}

bool is_single_operator(QueryType type) {
  return type == QueryType::kAblAmplitude || type == QueryType::kWeakValue ||
         type == QueryType::kTransitionElement;
}

// ---------------------------------------------------------------------------
// Scenario

void Scenario::validate() const {
  require(!name.empty(), "scenario name is empty");
  require(n_particles >= 1 && n_particles <= kMaxParticles, "particle count out of range");
  require(static_cast<int>(pre.size()) == n_particles,
          "pre has " + std::to_string(pre.size()) + " states for " +
              std::to_string(n_particles) + " particles");
  require(static_cast<int>(post.size()) == n_particles,
          "post has " + std::to_string(post.size()) + " states for " +
              std::to_string(n_particles) + " particles");
  for (std::size_t q = 0; q < queries.size(); ++q) {
    const Query& query = queries[q];
    const std::string where = "query " + std::to_string(q) + ": ";
    if (is_single_operator(query.type)) {
      require(query.operators.size() == 1, where + "expects exactly one operator");
    }
    if (query.type == QueryType::kAblProbabilities) {
      require(!query.operators.empty(), where + "measurement set is empty");
    }
    if (query.type == QueryType::kPredicate) {
      require(!query.operators.empty(), where + "predicate needs an operator");
      if (query.check == PredicateCheck::kOrthogonal) {
        require(query.operators.size() >= 2, where + "orthogonality needs two operators");
      }
      if (query.check == PredicateCheck::kEigenstate) {
        require(query.operators.size() == 1, where + "eigenstate check takes one operator");
        require(query.state.has_value(), where + "eigenstate check needs a state");
        require(is_finite(query.eigenvalue), where + "non-finite eigenvalue");
      }
    }
    for (const HamiltonianSpec& op : query.operators) {
      require(op.n_particles == n_particles,
              where + "operator on " + std::to_string(op.n_particles) + " particles");
      try {
        op.validate();
      } catch (const Error& e) {
        throw Error(ErrorKind::kInvalidSpec, where + e.what());
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Reports

const ComplexResult* QueryRecord::find_amplitude(std::string_view name) const {
  for (const ComplexResult& r : amplitudes) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

const RealResult* QueryRecord::find_real(std::string_view name) const {
  for (const RealResult& r : reals) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

const VerdictResult* QueryRecord::find_verdict(std::string_view name) const {
  for (const VerdictResult& r : verdicts) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

bool ScenarioReport::has_errors() const {
  return std::any_of(records.begin(), records.end(),
                     [](const QueryRecord& r) { return r.error.has_value(); });
}

ScenarioReport run_scenario(const Scenario& scenario, const RunOptions& options) {
  scenario.validate();
  const LabelConvention convention = scenario.convention;
  const PrePostSelection sel(build_product_state(scenario.pre, convention),
                             build_product_state(scenario.post, convention));

  ScenarioReport report;
  report.scenario = scenario.name;
  report.summary = scenario.summary;
  report.n_particles = scenario.n_particles;
  report.convention = convention;
  report.tolerance = options.tolerance;
  report.notes = scenario.notes;

  for (const Query& query : scenario.queries) {
    QueryRecord record;
    record.query = query;
    record.label = record_label(query, convention);
    record.kind = kind_of(query.type);
    try {
      answer(query, sel, scenario.n_particles, convention, options.tolerance, record);
    } catch (const Error& e) {
      record.error = e.what();
    }
    report.records.push_back(std::move(record));
  }
  return report;
}

}  // namespace tsvf
