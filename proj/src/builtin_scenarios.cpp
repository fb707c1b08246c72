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

#include <string>
#include <vector>

#include "tsvf/error.hpp"
#include "tsvf/scenarios.hpp"

namespace tsvf {

namespace {

using P = SingleParticlePreset;

HamiltonianSpec op(ProjectorSpec spec) { return HamiltonianSpec::single(std::move(spec)); }

HamiltonianSpec sum_of(int n, std::vector<ProjectorSpec> specs) {
  HamiltonianSpec out;
  out.n_particles = n;
  for (ProjectorSpec& s : specs) out.terms.push_back({Complex{1.0, 0.0}, std::move(s)});
  return out;
}

Query make(QueryType type, std::vector<HamiltonianSpec> ops, std::string claim) {
  Query q;
  q.type = type;
  q.operators = std::move(ops);
  q.claim = std::move(claim);
  return q;
}

Query predicate(PredicateCheck check, std::vector<HamiltonianSpec> ops, std::string claim) {
  Query q = make(QueryType::kPredicate, std::move(ops), std::move(claim));
  q.check = check;
  return q;
}

Query eigenstate(HamiltonianSpec op, StateSpec state, std::string claim) {
  Query q = predicate(PredicateCheck::kEigenstate, {std::move(op)}, std::move(claim));
  q.state = std::move(state);
  return q;
}

constexpr int kThree = 3;

ProjectorSpec same(int i, int j) { return ProjectorSpec::pair_same(kThree, i, j); }
ProjectorSpec diff(int i, int j) { return ProjectorSpec::pair_diff(kThree, i, j); }
ProjectorSpec sd(int i, int j, int k) { return ProjectorSpec::same_diff(kThree, i, j, k); }
ProjectorSpec all_same() { return ProjectorSpec::all_same(kThree); }

std::vector<HamiltonianSpec> sd_measurement() {
  return {op(sd(1, 2, 3)), op(sd(2, 3, 1)), op(sd(3, 1, 2)), op(all_same())};
}

const char* kPostselectionNote =
    "postselected state taken as |+i>|+i>|+i>; postselecting |+>|+>|+> instead would give "
    "every pair a same-box amplitude of 1/2";

Scenario pigeonhole_base(std::string name, std::string summary) {
  Scenario s;
  s.name = std::move(name);
  s.summary = std::move(summary);
  s.n_particles = kThree;
  s.pre = {P::kPlus, P::kPlus, P::kPlus};
  s.post = {P::kPlusI, P::kPlusI, P::kPlusI};
  s.notes = {kPostselectionNote};
  return s;
}

std::vector<Query> pigeonhole_queries() {
  std::vector<Query> q;
  for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 3}, std::pair{3, 1}}) {
    q.push_back(make(QueryType::kAblAmplitude, {op(same(i, j))},
                     "pair (" + std::to_string(i) + "," + std::to_string(j) +
                         ") is never found in the same box"));
  }
  q.push_back(make(QueryType::kAblProbabilities, {op(same(1, 2)), op(diff(1, 2))},
                   "pair (1,2) can only be found in different boxes"));
  q.push_back(make(QueryType::kAblAmplitude, {op(all_same())},
                   "all three particles together in one box has a nonzero amplitude"));
  q.push_back(make(QueryType::kAblAmplitude, {op(sd(1, 2, 3))},
                   "pair (1,2) together with particle 3 elsewhere has a nonzero amplitude"));
  q.push_back(predicate(PredicateCheck::kOrthogonal, sd_measurement(),
                        "the same/different projectors and the all-same projector are "
                        "mutually orthogonal"));
  q.push_back(predicate(PredicateCheck::kResolutionOfIdentity, sd_measurement(),
                        "the same/different projectors and the all-same projector "
                        "resolve the identity"));
  q.push_back(make(QueryType::kAblProbabilities, sd_measurement(),
                   "outcome probabilities of the four-outcome correlation measurement"));
  q.push_back(predicate(PredicateCheck::kOrthogonal, {op(same(1, 2)), op(same(2, 3))},
                        "overlapping pair questions are not orthogonal"));
  q.push_back(predicate(PredicateCheck::kIsProjector, {sum_of(kThree, {same(1, 2), same(2, 3)})},
                        "'either pair (1,2) or pair (2,3) together' is not a projector"));
  q.push_back(make(QueryType::kWeakValue, {op(same(1, 2))},
                   "weak value vanishes together with its ABL numerator"));
  q.push_back(make(QueryType::kWeakValue, {op(diff(1, 2))},
                   "complementary weak value equals one"));
  q.push_back(make(QueryType::kWeakValue, {op(all_same())}, "weak value of the all-same question"));
  q.push_back(make(QueryType::kWeakValue, {op(sd(1, 2, 3))},
                   "weak value of the same/different question"));
  q.push_back(make(QueryType::kWeakValue, {op(ProjectorSpec::identity(kThree))},
                   "weak value of the identity is one"));
  q.push_back(make(QueryType::kWeakValueSum, {op(same(1, 2)), op(same(2, 3))},
                   "weak values of non-commuting pair questions can be added"));
  q.push_back(make(QueryType::kWeakValueSum, sd_measurement(),
                   "weak values over a resolution of the identity sum to one"));
  return q;
}

std::vector<Query> transition_queries() {
  std::vector<Query> q;
  q.push_back(make(QueryType::kTransitionElement,
                   {sum_of(kThree, {same(1, 2), same(2, 3), same(3, 1)})},
                   "pairwise same-box interaction has a vanishing transition element"));
  q.push_back(make(QueryType::kTransitionElement,
                   {sum_of(kThree, {sd(1, 2, 3), sd(2, 3, 1), sd(3, 1, 2)})},
                   "same/different interaction has a nonzero transition element"));
  q.push_back(make(QueryType::kTransitionElement, {sum_of(kThree, {})},
                   "no interaction, no transition"));
  return q;
}

std::vector<Scenario> make_builtins() {
  std::vector<Scenario> out;

  Scenario pigeonhole = pigeonhole_base(
      "pigeonhole3", "three particles, two boxes: pair, joint and same/different questions");
  pigeonhole.queries = pigeonhole_queries();
  out.push_back(pigeonhole);

  Scenario transition = pigeonhole_base(
      "transition", "transition elements of pairwise interaction Hamiltonians");
  transition.queries = transition_queries();
  out.push_back(transition);

  Scenario detailed = pigeonhole_base(
      "detailed-vs-global", "incoherent (detailed) versus coherent (global) probabilities");
  {
    const int n = kThree;
    const auto ll = ProjectorSpec::box_pattern(n, {{1, Box::kL}, {2, Box::kL}});
    const auto rr = ProjectorSpec::box_pattern(n, {{1, Box::kR}, {2, Box::kR}});
    detailed.queries.push_back(make(QueryType::kDetailedVsGlobal, {op(ll), op(rr)},
                                    "separate LL and RR outcomes add up to a nonzero "
                                    "probability while the joint same-box question vanishes"));
    detailed.queries.push_back(make(QueryType::kDetailedVsGlobal,
                                    {op(ProjectorSpec::identity(n))},
                                    "a single outcome gives equal detailed and global values"));
  }
  out.push_back(detailed);

  Scenario coherent;
  coherent.name = "coherent-enhancement";
  coherent.summary = "two particles, |+>|+> to |+>|+>: the coherent sum exceeds the incoherent one";
  coherent.n_particles = 2;
  coherent.pre = {P::kPlus, P::kPlus};
  coherent.post = {P::kPlus, P::kPlus};
  {
    const auto ll = ProjectorSpec::box_pattern(2, {{1, Box::kL}, {2, Box::kL}});
    const auto rr = ProjectorSpec::box_pattern(2, {{1, Box::kR}, {2, Box::kR}});
    coherent.queries.push_back(make(QueryType::kDetailedVsGlobal, {op(ll), op(rr)},
                                    "amplitudes add coherently in the global measurement"));
    coherent.queries.push_back(
        make(QueryType::kAblProbabilities,
             {op(ProjectorSpec::pair_same(2, 1, 2)), op(ProjectorSpec::pair_diff(2, 1, 2))},
             "without a distinguishing postselection both answers are equally likely"));
  }
  out.push_back(coherent);

  Scenario spin = pigeonhole_base(
      "spin-relabel", "the pigeonhole and transition queries on spin-1/2 labels");
  spin.convention = LabelConvention::kSpin;
  spin.queries = pigeonhole_queries();
  for (Query& q : transition_queries()) spin.queries.push_back(std::move(q));
  spin.notes.push_back("L is spin up along z, R is spin down; |+> is |x,+>, |+i> is |y,+>");
  out.push_back(spin);

  Scenario degeneracy;
  degeneracy.name = "eigenspace-degeneracy";
  degeneracy.summary = "the eigenvalue-1 eigenspace of the two-particle same-box projector";
  degeneracy.n_particles = 2;
  degeneracy.pre = {P::kPlus, P::kPlus};
  degeneracy.post = {P::kPlus, P::kPlus};
  {
    const HamiltonianSpec same12 = op(ProjectorSpec::pair_same(2, 1, 2));
    degeneracy.queries.push_back(
        eigenstate(same12, StateSpec{{P::kL, P::kL}, {}}, "|LL> is an eigenstate"));
    degeneracy.queries.push_back(
        eigenstate(same12, StateSpec{{P::kR, P::kR}, {}}, "|RR> is an eigenstate"));
    degeneracy.queries.push_back(
        eigenstate(same12, StateSpec{{}, {{"LL", 1.0}, {"RR", 1.0}}},
                   "the entangled (|LL>+|RR>)/sqrt2 is an eigenstate of the same projector"));
    degeneracy.queries.push_back(
        eigenstate(same12, StateSpec{{P::kL, P::kR}, {}}, "|LR> is not an eigenstate"));
  }
  out.push_back(degeneracy);

  for (const Scenario& s : out) s.validate();
  return out;
}

}  // namespace

const std::vector<Scenario>& builtin_scenarios() {
  static const std::vector<Scenario> scenarios = make_builtins();
  return scenarios;
}

const Scenario& find_builtin(std::string_view name) {
  for (const Scenario& s : builtin_scenarios()) {
    if (s.name == name) return s;
  }
  throw Error(ErrorKind::kNotFound, "no builtin scenario '" + std::string(name) + "'");
}

}  // namespace tsvf
