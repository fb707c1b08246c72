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

#include "tsvf/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "tsvf/error.hpp"

namespace tsvf::io {

namespace {

/// A JSON value together with its location, for error messages.
struct Node {
  const Json& value;
  std::string path;

  Node child(std::string_view key) const {
    const std::string where = path + "/" + std::string(key);
    if (!value.is_object() || !value.contains(std::string(key))) {
      throw SchemaError(where, "required field is missing");
    }
    return Node{value.at(std::string(key)), where};
  }
  Node at(std::size_t i) const {
    return Node{value.at(i), path + "/" + std::to_string(i)};
  }
  bool has(std::string_view key) const { return value.is_object() && value.contains(std::string(key)); }

  [[noreturn]] void fail(const std::string& message) const { throw SchemaError(path, message); }

  const Json& array() const {
    if (!value.is_array()) fail("expected an array");
    return value;
  }
  void object() const {
    if (!value.is_object()) fail("expected an object");
  }
  std::string string() const {
    if (!value.is_string()) fail("expected a string");
    return value.get<std::string>();
  }
  bool boolean() const {
    if (!value.is_boolean()) fail("expected a boolean");
    return value.get<bool>();
  }
  double number() const {
    if (!value.is_number()) fail("expected a number");
    const double d = value.get<double>();
    if (!std::isfinite(d)) fail("expected a finite number");
    return d;
  }
  int integer() const {
    if (!value.is_number_integer()) fail("expected an integer");
    return value.get<int>();
  }
  /// [re, im] or a plain real number.
  Complex complex() const {
    if (value.is_number()) return Complex{number(), 0.0};
    if (!value.is_array() || value.size() != 2) fail("expected a complex number [re, im]");
    return Complex{at(0).number(), at(1).number()};
  }
};

Node root(const Json& doc) { return Node{doc, ""}; }

int particle_index(const Node& node, int n_particles) {
  const int p = node.integer();
  if (p < 1 || p > n_particles) {
    node.fail("particle index " + std::to_string(p) + " outside 1.." +
              std::to_string(n_particles));
  }
  return p;
}

Box parse_box(const Node& node) {
  const std::string s = node.string();
  if (s == "L") return Box::kL;
  if (s == "R") return Box::kR;
  node.fail("box must be \"L\" or \"R\"");
}

std::string box_name(Box box) { return box == Box::kL ? "L" : "R"; }

LabelConvention parse_convention(const Node& node) {
  const std::string s = node.string();
  if (s == "box") return LabelConvention::kBox;
  if (s == "spin") return LabelConvention::kSpin;
  node.fail("convention must be \"box\" or \"spin\"");
}

std::string convention_name(LabelConvention c) {
  return c == LabelConvention::kBox ? "box" : "spin";
}

template <typename Fn>
auto translate(const Node& node, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    node.fail(e.what());
  }
}

// ---------------------------------------------------------------------------
// Projectors and operators

ProjectorSpec parse_projector(const Node& node, int n) {
  node.object();
  const Node kind_node = node.child("kind");
  const ProjectorKind kind = translate(kind_node, [&] {
    return parse_projector_kind(kind_node.string());
  });

  ProjectorSpec spec;
  spec.kind = kind;
  spec.n_particles = n;
  auto pair = [&](const Node& p) {
    const Json& arr = p.array();
    if (arr.size() != 2) p.fail("expected two particle indices");
    return std::vector<int>{particle_index(p.at(0), n), particle_index(p.at(1), n)};
  };

  switch (kind) {
    case ProjectorKind::kIdentity:
      break;
    case ProjectorKind::kBox:
      if (node.has("pattern")) {
        const Node pattern = node.child("pattern");
        for (std::size_t i = 0; i < pattern.array().size(); ++i) {
          const Node entry = pattern.at(i);
          if (entry.array().size() != 2) entry.fail("expected [particle, box]");
          spec.boxes.push_back({particle_index(entry.at(0), n), parse_box(entry.at(1))});
        }
      } else {
        spec.boxes.push_back(
            {particle_index(node.child("particle"), n), parse_box(node.child("box"))});
      }
      break;
    case ProjectorKind::kPairSame:
    case ProjectorKind::kPairDiff:
      spec.particles = pair(node.child("pair"));
      break;
    case ProjectorKind::kAllSame:
      if (node.has("particles")) {
        const Node list = node.child("particles");
        for (std::size_t i = 0; i < list.array().size(); ++i) {
          spec.particles.push_back(particle_index(list.at(i), n));
        }
      }
      break;
    case ProjectorKind::kSameDiff:
      spec.particles = pair(node.child("pair"));
      spec.particles.push_back(particle_index(node.child("third"), n));
      break;
  }
  translate(node, [&] { spec.validate(); });
  return spec;
}

Json projector_to_json(const ProjectorSpec& spec) {
  Json j;
  j["kind"] = projector_kind_name(spec.kind);
  switch (spec.kind) {
    case ProjectorKind::kIdentity:
      break;
    case ProjectorKind::kBox:
      if (spec.boxes.size() == 1) {
        j["particle"] = spec.boxes[0].particle;
        j["box"] = box_name(spec.boxes[0].box);
      } else {
        Json pattern = Json::array();
        for (const BoxAssignment& a : spec.boxes) pattern.push_back({a.particle, box_name(a.box)});
        j["pattern"] = pattern;
      }
      break;
    case ProjectorKind::kPairSame:
    case ProjectorKind::kPairDiff:
      j["pair"] = spec.particles;
      break;
    case ProjectorKind::kAllSame:
      if (!spec.particles.empty()) j["particles"] = spec.particles;
      break;
    case ProjectorKind::kSameDiff:
      j["pair"] = {spec.particles[0], spec.particles[1]};
      j["third"] = spec.particles[2];
      break;
  }
  return j;
}

/// A projector object, or an array of {"coeff", "projector"} terms.
HamiltonianSpec parse_operator(const Node& node, int n) {
  if (node.value.is_object()) return HamiltonianSpec::single(parse_projector(node, n));
  HamiltonianSpec spec;
  spec.n_particles = n;
  const Json& terms = node.array();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const Node term = node.at(i);
    term.object();
    const Complex coeff = term.has("coeff") ? term.child("coeff").complex() : Complex{1.0, 0.0};
    spec.terms.push_back({coeff, parse_projector(term.child("projector"), n)});
  }
  return spec;
}

bool is_plain_projector(const HamiltonianSpec& spec) {
  return spec.terms.size() == 1 && spec.terms[0].coefficient == Complex{1.0, 0.0};
}

Json operator_to_json(const HamiltonianSpec& spec) {
  if (is_plain_projector(spec)) return projector_to_json(spec.terms[0].projector);
  Json terms = Json::array();
  for (const HamiltonianTerm& t : spec.terms) {
    Json term;
    term["coeff"] = complex_to_json(t.coefficient);
    term["projector"] = projector_to_json(t.projector);
    terms.push_back(term);
  }
  return terms;
}

// ---------------------------------------------------------------------------
// States

SingleParticleSpec parse_single_state(const Node& node) {
  if (node.value.is_string()) {
    return translate(node, [&] { return SingleParticleSpec{parse_preset(node.string())}; });
  }
  node.object();
  const ExplicitAmplitudes amps{node.child("cL").complex(), node.child("cR").complex()};
  if (std::norm(amps.left) + std::norm(amps.right) <= 0.0) {
    node.fail(error_kind_message(ErrorKind::kUnnormalizableState));
  }
  return amps;
}

Json single_state_to_json(const SingleParticleSpec& spec) {
  if (const auto* preset = std::get_if<SingleParticlePreset>(&spec)) {
    return preset_name(*preset);
  }
  const auto& amps = std::get<ExplicitAmplitudes>(spec);
  Json j;
  j["cL"] = complex_to_json(amps.left);
  j["cR"] = complex_to_json(amps.right);
  return j;
}

std::vector<SingleParticleSpec> parse_state_list(const Node& node, int n) {
  const Json& arr = node.array();
  if (static_cast<int>(arr.size()) != n) {
    node.fail("expected " + std::to_string(n) + " single-particle states, got " +
              std::to_string(arr.size()));
  }
  std::vector<SingleParticleSpec> out;
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(parse_single_state(node.at(i)));
  return out;
}

Json state_list_to_json(const std::vector<SingleParticleSpec>& specs) {
  Json arr = Json::array();
  for (const SingleParticleSpec& s : specs) arr.push_back(single_state_to_json(s));
  return arr;
}

StateSpec parse_state_spec(const Node& node, int n) {
  node.object();
  StateSpec spec;
  if (node.has("product") == node.has("amplitudes")) {
    node.fail("state needs exactly one of \"product\" or \"amplitudes\"");
  }
  if (node.has("product")) {
    spec.product = parse_state_list(node.child("product"), n);
    return spec;
  }
  const Node amps = node.child("amplitudes");
  amps.object();
  for (const auto& [key, value] : amps.value.items()) {
    const Node entry{value, amps.path + "/" + key};
    const BasisLabel label = translate(entry, [&] { return BasisLabel(key); });
    if (label.n_particles() != n) entry.fail("basis label length differs from particle count");
    spec.superposition[key] = entry.complex();
  }
  if (spec.superposition.empty()) amps.fail("superposition is empty");
  return spec;
}

Json state_spec_to_json(const StateSpec& spec) {
  Json j;
  if (!spec.product.empty()) {
    j["product"] = state_list_to_json(spec.product);
  } else {
    Json amps = Json::object();
    for (const auto& [label, value] : spec.superposition) amps[label] = complex_to_json(value);
    j["amplitudes"] = amps;
  }
  return j;
}

// ---------------------------------------------------------------------------
// Queries

const char* single_operator_key(QueryType type) {
  return type == QueryType::kTransitionElement ? "hamiltonian" : "operator";
}

Query parse_query(const Node& node, int n) {
  node.object();
  Query q;
  const Node type_node = node.child("type");
  q.type = translate(type_node, [&] { return parse_query_type(type_node.string()); });
  if (node.has("claim")) q.claim = node.child("claim").string();

  if (q.type == QueryType::kPredicate) {
    const Node check = node.child("check");
    q.check = translate(check, [&] { return parse_predicate_check(check.string()); });
  }

  const bool single = is_single_operator(q.type) ||
                      (q.type == QueryType::kPredicate && !node.has("operators"));
  if (single) {
    int found = 0;
    for (const char* key : {"projector", "operator", "hamiltonian"}) {
      if (node.has(key)) {
        ++found;
        q.operators.push_back(parse_operator(node.child(key), n));
      }
    }
    if (found != 1) {
      node.fail("expected exactly one of \"projector\", \"operator\" or \"hamiltonian\"");
    }
  } else {
    const char* key = q.type == QueryType::kPredicate ? "operators" : "set";
    const Node list = node.child(key);
    for (std::size_t i = 0; i < list.array().size(); ++i) {
      q.operators.push_back(parse_operator(list.at(i), n));
    }
  }

  if (q.type == QueryType::kPredicate && q.check == PredicateCheck::kEigenstate) {
    q.state = parse_state_spec(node.child("state"), n);
    if (node.has("eigenvalue")) q.eigenvalue = node.child("eigenvalue").complex();
  }
  return q;
}

Json query_to_json(const Query& q) {
  Json j;
  j["type"] = query_type_name(q.type);
  if (q.type == QueryType::kPredicate) j["check"] = predicate_check_name(q.check);
  const bool single = is_single_operator(q.type) ||
                      (q.type == QueryType::kPredicate && q.operators.size() == 1);
  if (single) {
    const HamiltonianSpec& op = q.operators.front();
    const char* key = is_plain_projector(op) ? "projector" : single_operator_key(q.type);
    j[key] = operator_to_json(op);
  } else {
    Json list = Json::array();
    for (const HamiltonianSpec& op : q.operators) list.push_back(operator_to_json(op));
    j[q.type == QueryType::kPredicate ? "operators" : "set"] = list;
  }
  if (q.state) {
    j["state"] = state_spec_to_json(*q.state);
    j["eigenvalue"] = complex_to_json(q.eigenvalue);
  }
  if (!q.claim.empty()) j["claim"] = q.claim;
  return j;
}

Json amplitude_to_json(const ComplexResult& r) {
  Json j;
  j["name"] = r.name;
  j["value"] = complex_to_json(r.value);
  j["magnitude"] = std::abs(r.value);
  j["magnitude_squared"] = std::norm(r.value);
  j["vanishing"] = r.vanishing;
  return j;
}

}  // namespace

SchemaError::SchemaError(std::string path, const std::string& message)
    : std::runtime_error((path.empty() ? std::string("/") : path) + ": " + message),
      path_(std::move(path)) {}

Json complex_to_json(Complex value) { return Json::array({value.real(), value.imag()}); }

// ---------------------------------------------------------------------------
// Scenario documents

Scenario scenario_from_json(const Json& doc) {
  const Node node = root(doc);
  node.object();
  Scenario s;
  s.name = node.child("name").string();
  if (s.name.empty()) node.child("name").fail("name must not be empty");
  const Node particles = node.child("particles");
  s.n_particles = particles.integer();
  if (s.n_particles < 1 || s.n_particles > kMaxParticles) {
    particles.fail("particle count must be within 1.." + std::to_string(kMaxParticles));
  }
  if (node.has("summary")) s.summary = node.child("summary").string();
  if (node.has("convention")) s.convention = parse_convention(node.child("convention"));
  if (node.has("notes")) {
    const Node notes = node.child("notes");
    for (std::size_t i = 0; i < notes.array().size(); ++i) s.notes.push_back(notes.at(i).string());
  }
  s.pre = parse_state_list(node.child("pre"), s.n_particles);
  s.post = parse_state_list(node.child("post"), s.n_particles);
  const Node queries = node.child("queries");
  for (std::size_t i = 0; i < queries.array().size(); ++i) {
    s.queries.push_back(parse_query(queries.at(i), s.n_particles));
  }
  translate(node, [&] { s.validate(); });
  return s;
}

Json scenario_to_json(const Scenario& s) {
  Json j;
  j["name"] = s.name;
  if (!s.summary.empty()) j["summary"] = s.summary;
  j["particles"] = s.n_particles;
  j["convention"] = convention_name(s.convention);
  j["pre"] = state_list_to_json(s.pre);
  j["post"] = state_list_to_json(s.post);
  Json queries = Json::array();
  for (const Query& q : s.queries) queries.push_back(query_to_json(q));
  j["queries"] = queries;
  if (!s.notes.empty()) j["notes"] = s.notes;
  return j;
}

Scenario load_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("", "cannot read scenario file '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  Json doc;
  try {
    doc = Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
  return scenario_from_json(doc);
}

// ---------------------------------------------------------------------------
// Report documents

Json report_to_json(const ScenarioReport& report) {
  Json j;
  j["scenario"] = report.scenario;
  j["summary"] = report.summary;
  j["particles"] = report.n_particles;
  j["convention"] = convention_name(report.convention);
  j["tolerance"] = report.tolerance;
  j["notes"] = report.notes;
  Json records = Json::array();
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const QueryRecord& r = report.records[i];
    Json rec;
    rec["index"] = i;
    rec["type"] = query_type_name(r.query.type);
    rec["label"] = r.label;
    rec["kind"] = quantity_kind_name(r.kind);
    rec["query"] = query_to_json(r.query);
    Json amps = Json::array();
    for (const ComplexResult& a : r.amplitudes) amps.push_back(amplitude_to_json(a));
    rec["amplitudes"] = amps;
    Json reals = Json::array();
    for (const RealResult& x : r.reals) reals.push_back(Json{{"name", x.name}, {"value", x.value}});
    rec["reals"] = reals;
    Json verdicts = Json::array();
    for (const VerdictResult& v : r.verdicts) {
      verdicts.push_back(Json{{"name", v.name}, {"value", v.value}});
    }
    rec["verdicts"] = verdicts;
    rec["error"] = r.error ? Json(*r.error) : Json(nullptr);
    records.push_back(rec);
  }
  j["records"] = records;
  return j;
}

ScenarioReport report_from_json(const Json& doc) {
  const Node node = root(doc);
  node.object();
  ScenarioReport report;
  report.scenario = node.child("scenario").string();
  report.summary = node.child("summary").string();
  report.convention = parse_convention(node.child("convention"));
  const Node particles = node.child("particles");
  report.n_particles = particles.integer();
  if (report.n_particles < 1 || report.n_particles > kMaxParticles) {
    particles.fail("particle count out of range");
  }
  report.tolerance = node.child("tolerance").number();
  const Node notes = node.child("notes");
  for (std::size_t i = 0; i < notes.array().size(); ++i) {
    report.notes.push_back(notes.at(i).string());
  }

  const Node records = node.child("records");
  for (std::size_t i = 0; i < records.array().size(); ++i) {
    const Node rec = records.at(i);
    QueryRecord r;
    r.label = rec.child("label").string();
    const Node kind = rec.child("kind");
    r.kind = translate(kind, [&] { return parse_quantity_kind(kind.string()); });
    r.query = parse_query(rec.child("query"), report.n_particles);
    const Node amps = rec.child("amplitudes");
    for (std::size_t k = 0; k < amps.array().size(); ++k) {
      const Node a = amps.at(k);
      r.amplitudes.push_back(
          {a.child("name").string(), a.child("value").complex(), a.child("vanishing").boolean()});
    }
    const Node reals = rec.child("reals");
    for (std::size_t k = 0; k < reals.array().size(); ++k) {
      const Node x = reals.at(k);
      r.reals.push_back({x.child("name").string(), x.child("value").number()});
    }
    const Node verdicts = rec.child("verdicts");
    for (std::size_t k = 0; k < verdicts.array().size(); ++k) {
      const Node v = verdicts.at(k);
      r.verdicts.push_back({v.child("name").string(), v.child("value").boolean()});
    }
    const Node error = rec.child("error");
    if (!error.value.is_null()) r.error = error.string();
    report.records.push_back(std::move(r));
  }
  return report;
}

}  // namespace tsvf::io
