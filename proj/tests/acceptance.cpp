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

// Acceptance suite: one PASS/FAIL line per criterion, tolerance 1e-12.
// Exit status is non-zero when any criterion fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "generators.hpp"
#include "oracle.hpp"
#include "tsvf/engine.hpp"
#include "tsvf/error.hpp"
#include "tsvf/projectors.hpp"
#include "tsvf/scenarios.hpp"

namespace {

using namespace tsvf;
using P = SingleParticlePreset;

constexpr double kTol = 1e-12;
const Complex kI{0.0, 1.0};

/// Collects failed checks for one criterion.
class Checker {
 public:
  void near(const std::string& what, Complex actual, Complex expected, double tol = kTol) {
    if (!(std::abs(actual - expected) <= tol)) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "%s: got %.17g%+.17gi, want %.17g%+.17gi", what.c_str(),
                    actual.real(), actual.imag(), expected.real(), expected.imag());
      fail(buf);
    }
  }
  void near(const std::string& what, double actual, double expected, double tol = kTol) {
    near(what, Complex{actual}, Complex{expected}, tol);
  }
  void truth(const std::string& what, bool ok) {
    if (!ok) fail(what);
  }
  void fail(const std::string& what) {
    if (first_failure_.empty()) first_failure_ = what;
    ++failures_;
  }
  bool ok() const { return failures_ == 0; }
  const std::string& first_failure() const { return first_failure_; }
  int failures() const { return failures_; }

 private:
  int failures_ = 0;
  std::string first_failure_;
};

const std::vector<SingleParticleSpec> kPre(3, P::kPlus);
const std::vector<SingleParticleSpec> kPost(3, P::kPlusI);
const std::vector<SingleParticleSpec> kPlus2(2, P::kPlus);

/// Inputs in either label convention; spin inputs are relabelled box inputs.
struct Inputs {
  LabelConvention convention;

  Ket state(const std::vector<SingleParticleSpec>& specs) const { return convert(build_product_state(specs)); }
  Ket convert(const Ket& k) const { return convention == LabelConvention::kSpin ? relabel_to_spin(k) : k; }
  Operator op(const ProjectorSpec& spec) const {
    const Operator o = build_projector(spec);
    return convention == LabelConvention::kSpin ? relabel_to_spin(o) : o;
  }
  Operator op(const HamiltonianSpec& spec) const {
    const Operator o = build_hamiltonian(spec);
    return convention == LabelConvention::kSpin ? relabel_to_spin(o) : o;
  }
  MeasurementSet set(const std::vector<ProjectorSpec>& specs) const {
    std::vector<Operator> ops;
    for (const auto& s : specs) ops.push_back(op(s));
    return MeasurementSet(std::move(ops));
  }
  PrePostSelection pigeonhole() const { return {state(kPre), state(kPost)}; }
  PrePostSelection plus2() const { return {state(kPlus2), state(kPlus2)}; }
};

const std::vector<ProjectorSpec> kSdSet{ProjectorSpec::same_diff(3, 1, 2, 3), ProjectorSpec::same_diff(3, 2, 3, 1),
                                        ProjectorSpec::same_diff(3, 3, 1, 2), ProjectorSpec::all_same(3)};

std::vector<ProjectorSpec> ll_rr(int n) {
  return {ProjectorSpec::box_pattern(n, {{1, Box::kL}, {2, Box::kL}}),
          ProjectorSpec::box_pattern(n, {{1, Box::kR}, {2, Box::kR}})};
}

HamiltonianSpec sum_of(int n, const std::vector<ProjectorSpec>& specs) {
  HamiltonianSpec h{n, {}};
  for (const auto& s : specs) h.terms.push_back({1.0, s});
  return h;
}

Complex oracle_amp(const ProjectorSpec& spec) {
  return oracle::amplitude(kPre, kPost, HamiltonianSpec::single(spec));
}

// Each criterion appends every value it inspects to `values`; criterion 9
// compares those streams across label conventions.
using Values = std::vector<double>;
void record(Values& v, Complex c) {
  v.push_back(c.real());
  v.push_back(c.imag());
}

void criterion1(Checker& c, const Inputs& in, Values& v) {
  const PrePostSelection sel = in.pigeonhole();
  for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 3}, std::pair{3, 1}}) {
    const Complex a = abl_amplitude(sel, in.op(ProjectorSpec::pair_same(3, i, j)));
    record(v, a);
    c.near("abl_amplitude pair_same(" + std::to_string(i) + "," + std::to_string(j) + ")", a, 0.0);
    c.near("oracle pair_same", oracle_amp(ProjectorSpec::pair_same(3, i, j)), 0.0);
  }
  const AblResult r = abl_probabilities(sel, in.set({ProjectorSpec::pair_same(3, 1, 2), ProjectorSpec::pair_diff(3, 1, 2)}));
  v.insert(v.end(), r.probabilities.begin(), r.probabilities.end());
  c.near("P(same)", r.probabilities.at(0), 0.0);
  c.near("P(diff)", r.probabilities.at(1), 1.0);
}

void criterion2(Checker& c, const Inputs& in, Values& v) {
  const PrePostSelection sel = in.pigeonhole();
  const Complex all = abl_amplitude(sel, in.op(ProjectorSpec::all_same(3)));
  const Complex sd = abl_amplitude(sel, in.op(ProjectorSpec::same_diff(3, 1, 2, 3)));
  record(v, all);
  record(v, sd);
  c.near("oracle Π123_same", oracle_amp(ProjectorSpec::all_same(3)), (1.0 + kI) / 8.0);
  c.near("oracle Π^sd_12,3", oracle_amp(ProjectorSpec::same_diff(3, 1, 2, 3)), -(1.0 + kI) / 8.0);
  c.near("abl_amplitude Π123_same vs oracle", all, oracle_amp(ProjectorSpec::all_same(3)));
  c.near("abl_amplitude Π^sd_12,3 vs oracle", sd, oracle_amp(ProjectorSpec::same_diff(3, 1, 2, 3)));
}

void criterion3(Checker& c, const Inputs& in, Values& v) {
  const MeasurementSet set = in.set(kSdSet);
  const bool roi = is_resolution_of_identity(set);
  v.push_back(roi ? 1.0 : 0.0);
  c.truth("sd set is a resolution of the identity", roi);
  const AblResult r = abl_probabilities(in.pigeonhole(), set);
  double denom = 0.0;
  for (const auto& s : kSdSet) denom += std::norm(oracle_amp(s));
  for (std::size_t k = 0; k < kSdSet.size(); ++k) {
    v.push_back(r.probabilities[k]);
    c.near("P_k", r.probabilities[k], 0.25);
    c.near("P_k vs oracle", r.probabilities[k], std::norm(oracle_amp(kSdSet[k])) / denom);
  }
}

void criterion4(Checker& c, const Inputs& in, Values& v) {
  const Operator s12 = in.op(ProjectorSpec::pair_same(3, 1, 2));
  const Operator s23 = in.op(ProjectorSpec::pair_same(3, 2, 3));
  const bool projector = is_projector(s12 + s23);
  v.push_back(projector ? 1.0 : 0.0);
  c.truth("Π12_same + Π23_same is not a projector", !projector);
  try {
    const Complex w = weak_value_sum(in.pigeonhole(), std::vector<Operator>{s12, s23});
    record(v, w);
    c.near("weak_value_sum", w, 0.0);
  } catch (const std::exception& e) {
    c.fail(std::string("weak_value_sum raised: ") + e.what());
  }
}

void criterion5(Checker& c, const Inputs& in, Values& v) {
  const PrePostSelection sel = in.pigeonhole();
  const Complex overlap = oracle::overlap(kPre, kPost);
  const std::vector<std::pair<ProjectorSpec, Complex>> expected{
      {ProjectorSpec::pair_same(3, 1, 2), 0.0},
      {ProjectorSpec::pair_diff(3, 1, 2), 1.0},
      {ProjectorSpec::all_same(3), -0.5},
      {ProjectorSpec::same_diff(3, 1, 2, 3), 0.5}};
  for (const auto& [spec, value] : expected) {
    const Complex w = weak_value(sel, in.op(spec));
    record(v, w);
    c.near("weak_value " + describe(spec), w, value);
    c.near("oracle weak_value " + describe(spec), oracle_amp(spec) / overlap, value);
  }
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 3;
    const PrePostSelection random(in.convert(gen::ket(rng, n)), in.convert(gen::ket(rng, n)));
    Operator op = gen::dense_operator(rng, n);
    if (in.convention == LabelConvention::kSpin) op = relabel_to_spin(op);
    const Complex amp = abl_amplitude(random, op);
    const Complex product = weak_value(random, op) * random.overlap();
    record(v, product);
    c.near("numerator identity", product, amp, kTol * std::max(1.0, std::abs(amp)));
  }
  Complex total = 0.0;
  for (const auto& s : kSdSet) total += weak_value(sel, in.op(s));
  record(v, total);
  c.near("Σ weak values over sd set", total, 1.0);
}

void criterion6(Checker& c, const Inputs& in, Values& v) {
  const PrePostSelection sel = in.pigeonhole();
  const HamiltonianSpec h = sum_of(3, {ProjectorSpec::pair_same(3, 1, 2), ProjectorSpec::pair_same(3, 2, 3),
                                       ProjectorSpec::pair_same(3, 3, 1)});
  const HamiltonianSpec h_sd = sum_of(3, {kSdSet[0], kSdSet[1], kSdSet[2]});
  const Complex t = transition_element(sel, in.op(h));
  const Complex t_sd = transition_element(sel, in.op(h_sd));
  record(v, t);
  record(v, t_sd);
  c.near("transition H", t, 0.0);
  c.near("transition H'", t_sd, -3.0 * (1.0 + kI) / 8.0);
  c.near("oracle transition H", oracle::amplitude(kPre, kPost, h), 0.0);
  c.near("oracle transition H'", oracle::amplitude(kPre, kPost, h_sd), -3.0 * (1.0 + kI) / 8.0);
}

void criterion7(Checker& c, const Inputs& in, Values& v) {
  const MeasurementSet set3 = in.set(ll_rr(3));
  const double d3 = detailed_probability(in.pigeonhole(), set3);
  const double g3 = global_probability(in.pigeonhole(), set3);
  const MeasurementSet set2 = in.set(ll_rr(2));
  const double d2 = detailed_probability(in.plus2(), set2);
  const double g2 = global_probability(in.plus2(), set2);
  v.insert(v.end(), {d3, g3, d2, g2});
  c.near("pigeonhole detailed", d3, 1.0 / 16.0);
  c.near("pigeonhole global", g3, 0.0);
  c.near("|+>|+> detailed", d2, 1.0 / 8.0);
  c.near("|+>|+> global", g2, 1.0 / 4.0);

  double od3 = 0.0;
  Complex og3 = 0.0;
  for (const auto& s : ll_rr(3)) {
    const Complex a = oracle_amp(s);
    od3 += std::norm(a);
    og3 += a;
  }
  c.near("oracle pigeonhole detailed", od3, 1.0 / 16.0);
  c.near("oracle pigeonhole global", std::norm(og3), 0.0);
  double od2 = 0.0;
  Complex og2 = 0.0;
  for (const auto& s : ll_rr(2)) {
    const Complex a = oracle::amplitude(kPlus2, kPlus2, HamiltonianSpec::single(s));
    od2 += std::norm(a);
    og2 += a;
  }
  c.near("oracle |+>|+> detailed", od2, 1.0 / 8.0);
  c.near("oracle |+>|+> global", std::norm(og2), 1.0 / 4.0);
}

void criterion8(Checker& c, const Inputs& in, Values& v) {
  const Operator same = in.op(ProjectorSpec::pair_same(2, 1, 2));
  const double h = 1.0 / std::sqrt(2.0);
  const std::vector<std::pair<Ket, bool>> cases{
      {in.convert(Ket::basis(BasisLabel("LL"))), true},
      {in.convert(Ket::basis(BasisLabel("RR"))), true},
      {in.convert(Ket(2, {h, 0.0, 0.0, h})), true},
      {in.convert(Ket::basis(BasisLabel("LR"))), false}};
  const char* names[] = {"|LL>", "|RR>", "(|LL>+|RR>)/sqrt2", "|LR>"};
  for (std::size_t k = 0; k < cases.size(); ++k) {
    const bool eig = is_eigenstate(same, cases[k].first, 1.0, kTol);
    v.push_back(eig ? 1.0 : 0.0);
    c.truth(std::string("is_eigenstate ") + names[k], eig == cases[k].second);
  }
}

using Criterion = std::function<void(Checker&, const Inputs&, Values&)>;
const std::vector<Criterion> kBoxCriteria{criterion1, criterion2, criterion3, criterion4,
                                          criterion5, criterion6, criterion7, criterion8};

void criterion9(Checker& c) {
  const Inputs box{LabelConvention::kBox};
  const Inputs spin{LabelConvention::kSpin};
  for (std::size_t k = 0; k < kBoxCriteria.size(); ++k) {
    Checker ignore;
    Values vb;
    Values vs;
    kBoxCriteria[k](ignore, box, vb);
    Checker spin_checker;
    kBoxCriteria[k](spin_checker, spin, vs);
    const std::string which = "criterion " + std::to_string(k + 1);
    c.truth(which + " quantity count differs after relabelling", vb.size() == vs.size());
    for (std::size_t i = 0; i < std::min(vb.size(), vs.size()); ++i) {
      if (vb[i] != vs[i]) c.fail(which + " value " + std::to_string(i) + " not bit-identical");
    }
    if (!spin_checker.ok()) c.fail(which + " in spin labels: " + spin_checker.first_failure());
  }
  // Builtin scenario reports agree bit for bit as well.
  const ScenarioReport b = run_scenario(find_builtin("pigeonhole3"));
  const ScenarioReport s = run_scenario(find_builtin("spin-relabel"));
  for (std::size_t r = 0; r < b.records.size(); ++r) {
    const auto& ba = b.records[r].amplitudes;
    const auto& sa = s.records.at(r).amplitudes;
    c.truth("spin-relabel record size", ba.size() == sa.size());
    for (std::size_t i = 0; i < std::min(ba.size(), sa.size()); ++i) {
      if (ba[i].value != sa[i].value) c.fail("spin-relabel record " + std::to_string(r) + " differs");
    }
  }
}

void criterion10(Checker& c) {
  // Projector laws.
  for (int n = 2; n <= 6; ++n) {
    for (const ProjectorSpec& spec : gen::all_projector_specs(n)) {
      const Operator p = build_projector(spec);
      const std::string name = "n=" + std::to_string(n) + " " + describe(spec);
      c.truth(name + " hermitian", hermiticity_defect(p) <= kTol);
      c.truth(name + " idempotent", idempotency_defect(p) <= kTol);
      for (std::size_t r = 0; r < p.dimension(); ++r) {
        for (std::size_t col = 0; col < p.dimension(); ++col) {
          const Complex e = p(r, col);
          const bool ok = r == col ? (e == Complex(0.0) || e == Complex(1.0)) : e == Complex(0.0);
          if (!ok) c.fail(name + " entry not 0/1 diagonal");
        }
      }
    }
  }
  // Complement law.
  for (int n = 2; n <= 6; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        const Operator sum = build_projector(ProjectorSpec::pair_same(n, i, j)) +
                             build_projector(ProjectorSpec::pair_diff(n, i, j));
        c.truth("complement law n=" + std::to_string(n), (sum - Operator::identity(n)).max_abs_entry() <= kTol);
      }
    }
  }
  // Pair-same decomposition.
  const Operator lhs = build_projector(ProjectorSpec::pair_same(3, 1, 2));
  const Operator rhs = build_projector(ProjectorSpec::same_diff(3, 1, 2, 3)) + build_projector(ProjectorSpec::all_same(3));
  c.truth("Π12_same = Π^sd_12,3 + Π123_same", lhs == rhs);

  // Oracle equivalence of matrix elements.
  std::mt19937_64 rng(77);
  const auto specs = gen::all_projector_specs(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Ket b = gen::ket(rng, 3);
    const Ket k = gen::ket(rng, 3);
    for (const ProjectorSpec& spec : specs) {
      const Complex lib = matrix_element(b, build_projector(spec), k);
      const Complex ref = oracle::amplitude(std::vector<Complex>(b.amplitudes().begin(), b.amplitudes().end()),
                                          HamiltonianSpec::single(spec),
                                          std::vector<Complex>(k.amplitudes().begin(), k.amplitudes().end()), 3);
      c.near("matrix_element vs oracle " + describe(spec), lib, ref);
    }
  }

  // Phase invariance of probabilities and weak values.
  std::mt19937_64 prng(78);
  const MeasurementSet sd(std::vector<Operator>{build_projector(kSdSet[0]), build_projector(kSdSet[1]),
                                                build_projector(kSdSet[2]), build_projector(kSdSet[3])});
  std::vector<Operator> pair_set;
  for (const auto& s : ll_rr(3)) pair_set.push_back(build_projector(s));
  const MeasurementSet boxes(pair_set);
  for (int trial = 0; trial < 50; ++trial) {
    const Ket pre = gen::ket(prng, 3);
    const Ket post = gen::ket(prng, 3);
    const PrePostSelection a(pre, post);
    const PrePostSelection b(pre.rephased(gen::unit_phase(prng)), post.rephased(gen::unit_phase(prng)));
    const AblResult ra = abl_probabilities(a, sd);
    const AblResult rb = abl_probabilities(b, sd);
    for (std::size_t k = 0; k < ra.probabilities.size(); ++k) {
      c.near("ABL probability phase invariance", ra.probabilities[k], rb.probabilities[k]);
    }
    c.near("detailed phase invariance", detailed_probability(a, boxes), detailed_probability(b, boxes));
    c.near("global phase invariance", global_probability(a, boxes), global_probability(b, boxes));
    for (const ProjectorSpec& spec : specs) {
      const Operator p = build_projector(spec);
      const Complex wa = weak_value(a, p);
      c.near("weak value phase invariance " + describe(spec), wa, weak_value(b, p),
             kTol * std::max(1.0, std::abs(wa)) / std::max(1e-3, std::abs(a.overlap())));
    }
  }
}

}  // namespace

int main() {
  struct Entry {
    const char* title;
    std::function<void(Checker&)> run;
  };
  const Inputs box{LabelConvention::kBox};
  std::vector<Entry> entries;
  const char* titles[] = {"pigeonhole vanishing",     "joint-correlation non-vanishing",
                          "resolution of identity",   "illegitimate question",
                          "weak-value relations",     "transition experiment",
                          "detailed vs global",       "degenerate eigenspace"};
  for (std::size_t k = 0; k < kBoxCriteria.size(); ++k) {
    entries.push_back({titles[k], [k, box](Checker& c) {
                         Values ignored;
                         kBoxCriteria[k](c, box, ignored);
                       }});
  }
  entries.push_back({"spin relabelling", criterion9});
  entries.push_back({"property suite", criterion10});

  int failed = 0;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    Checker c;
    try {
      entries[k].run(c);
    } catch (const std::exception& e) {
      c.fail(std::string("exception: ") + e.what());
    }
    if (c.ok()) {
      std::printf("PASS %2zu %s\n", k + 1, entries[k].title);
    } else {
      ++failed;
      std::printf("FAIL %2zu %s (%d failed checks; first: %s)\n", k + 1, entries[k].title, c.failures(),
                  c.first_failure().c_str());
    }
  }
  std::printf("%zu/%zu criteria passed at tolerance %g\n", entries.size() - failed, entries.size(), kTol);
  return failed == 0 ? 0 : 1;
}
