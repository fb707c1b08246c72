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

#include "tsvf/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tsvf/error.hpp"

namespace tsvf {

namespace {

void check_particles(int n_particles) {
  if (n_particles < 1 || n_particles > kMaxParticles) {
    throw Error(ErrorKind::kInvalidState,
                "particle count " + std::to_string(n_particles) +
                    " outside 1.." + std::to_string(kMaxParticles));
  }
}

void check_length(int n_particles, std::size_t length) {
  if (length != dimension_for(n_particles)) {
    throw Error(ErrorKind::kDimensionMismatch,
                "expected " + std::to_string(dimension_for(n_particles)) +
                    " amplitudes, got " + std::to_string(length));
  }
}

void check_finite(std::span<const Complex> values) {
  for (const Complex& c : values) {
    if (!is_finite(c)) throw Error(ErrorKind::kInvalidState, "non-finite amplitude");
  }
}

double squared_norm(std::span<const Complex> values) {
  double sum = 0.0;
  for (const Complex& c : values) sum += std::norm(c);
  return sum;
}

void check_compatible(std::size_t dim_a, LabelConvention conv_a, std::size_t dim_b,
                      LabelConvention conv_b) {
  if (dim_a != dim_b) {
    throw Error(ErrorKind::kDimensionMismatch,
                std::to_string(dim_a) + " vs " + std::to_string(dim_b));
  }
  if (conv_a != conv_b) throw Error(ErrorKind::kConventionMismatch);
}

Complex dot(std::span<const Complex> bra, std::span<const Complex> ket) {
  Complex sum{0.0, 0.0};
  for (std::size_t i = 0; i < bra.size(); ++i) sum += std::conj(bra[i]) * ket[i];
  return sum;
}

std::vector<Complex> multiply(const Operator& op, std::span<const Complex> vec) {
  const std::size_t dim = op.dimension();
  std::vector<Complex> out(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    Complex sum{0.0, 0.0};
    for (std::size_t c = 0; c < dim; ++c) sum += op(r, c) * vec[c];
    out[r] = sum;
  }
  return out;
}

}  // namespace

std::size_t dimension_for(int n_particles) {
  return std::size_t{1} << n_particles;
}

bool is_finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

bool is_vanishing(Complex c, double tol) { return std::abs(c) <= tol; }

// ---------------------------------------------------------------------------
// BasisLabel

BasisLabel::BasisLabel(std::string boxes) : boxes_(std::move(boxes)) {
  if (boxes_.empty() || static_cast<int>(boxes_.size()) > kMaxParticles) {
    throw Error(ErrorKind::kInvalidState, "basis label length out of range");
  }
  for (char ch : boxes_) {
    if (ch != 'L' && ch != 'R') {
      throw Error(ErrorKind::kInvalidState,
                  "basis label '" + boxes_ + "' must use only L and R");
    }
  }
}

BasisLabel BasisLabel::from_index(std::size_t index, int n_particles) {
  check_particles(n_particles);
  if (index >= dimension_for(n_particles)) {
    throw Error(ErrorKind::kDimensionMismatch, "basis index out of range");
  }
  std::string boxes(static_cast<std::size_t>(n_particles), 'L');
  for (int p = 0; p < n_particles; ++p) {
    const int shift = n_particles - 1 - p;
    if ((index >> shift) & 1U) boxes[static_cast<std::size_t>(p)] = 'R';
  }
  return BasisLabel(std::move(boxes));
}

Box BasisLabel::box(int particle) const {
  return boxes_.at(static_cast<std::size_t>(particle - 1)) == 'L' ? Box::kL : Box::kR;
}

std::size_t BasisLabel::index() const {
  std::size_t index = 0;
  for (char ch : boxes_) index = (index << 1) | (ch == 'R' ? 1U : 0U);
  return index;
}

std::string BasisLabel::render(LabelConvention convention) const {
  if (convention == LabelConvention::kBox) return boxes_;
  std::string out;
  for (char ch : boxes_) out += (ch == 'L') ? "↑" : "⇓";
  return out;
}

// ---------------------------------------------------------------------------
// RawVector

RawVector::RawVector(int n_particles, std::vector<Complex> amplitudes,
                     LabelConvention convention)
    : n_particles_(n_particles), amplitudes_(std::move(amplitudes)), convention_(convention) {
  check_particles(n_particles_);
  check_length(n_particles_, amplitudes_.size());
  check_finite(amplitudes_);
}

double RawVector::norm() const { return std::sqrt(squared_norm(amplitudes_)); }

// ---------------------------------------------------------------------------
// Ket

Ket::Ket(int n_particles, std::vector<Complex> amplitudes, LabelConvention convention)
    : n_particles_(n_particles), amplitudes_(std::move(amplitudes)), convention_(convention) {
  check_particles(n_particles_);
  check_length(n_particles_, amplitudes_.size());
  check_finite(amplitudes_);
  const double sq = squared_norm(amplitudes_);
  if (std::abs(sq - 1.0) > kZeroTolerance) {
    throw Error(ErrorKind::kNotNormalized, "squared norm " + std::to_string(sq));
  }
}

Ket Ket::normalize(int n_particles, std::vector<Complex> amplitudes,
                   LabelConvention convention) {
  check_finite(amplitudes);
  const double norm = std::sqrt(squared_norm(amplitudes));
  if (!(norm > 0.0)) throw Error(ErrorKind::kUnnormalizableState);
  for (Complex& c : amplitudes) c /= norm;
  return Ket(n_particles, std::move(amplitudes), convention);
}

Ket Ket::basis(const BasisLabel& label, LabelConvention convention) {
  std::vector<Complex> amps(dimension_for(label.n_particles()));
  amps[label.index()] = 1.0;
  return Ket(label.n_particles(), std::move(amps), convention);
}

Complex Ket::amplitude(const BasisLabel& label) const {
  if (label.n_particles() != n_particles_) throw Error(ErrorKind::kDimensionMismatch);
  return amplitudes_[label.index()];
}

RawVector Ket::raw() const { return RawVector(n_particles_, amplitudes_, convention_); }

Ket Ket::with_convention(LabelConvention convention) const {
  Ket copy = *this;
  copy.convention_ = convention;
  return copy;
}

Ket Ket::rephased(Complex phase) const {
  if (std::abs(std::abs(phase) - 1.0) > kZeroTolerance) {
    throw Error(ErrorKind::kInvalidState, "phase factor must have unit modulus");
  }
  std::vector<Complex> amps = amplitudes_;
  for (Complex& c : amps) c *= phase;
  return Ket(n_particles_, std::move(amps), convention_);
}

// ---------------------------------------------------------------------------
// Operator

Operator::Operator(int n_particles, std::vector<Complex> entries, LabelConvention convention)
    : n_particles_(n_particles),
      dim_(0),
      entries_(std::move(entries)),
      convention_(convention) {
  check_particles(n_particles_);
  dim_ = dimension_for(n_particles_);
  if (entries_.size() != dim_ * dim_) {
    throw Error(ErrorKind::kDimensionMismatch,
                "operator needs " + std::to_string(dim_ * dim_) + " entries");
  }
  check_finite(entries_);
}

Operator Operator::zero(int n_particles, LabelConvention convention) {
  check_particles(n_particles);
  const std::size_t dim = dimension_for(n_particles);
  return Operator(n_particles, std::vector<Complex>(dim * dim), convention);
}

Operator Operator::identity(int n_particles, LabelConvention convention) {
  check_particles(n_particles);
  const std::size_t dim = dimension_for(n_particles);
  std::vector<Complex> entries(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) entries[i * dim + i] = 1.0;
  return Operator(n_particles, std::move(entries), convention);
}

Operator Operator::diagonal(int n_particles, std::span<const Complex> diag,
                            LabelConvention convention) {
  check_particles(n_particles);
  const std::size_t dim = dimension_for(n_particles);
  check_length(n_particles, diag.size());
  std::vector<Complex> entries(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) entries[i * dim + i] = diag[i];
  return Operator(n_particles, std::move(entries), convention);
}

Operator Operator::adjoint() const {
  std::vector<Complex> entries(entries_.size());
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) entries[c * dim_ + r] = std::conj((*this)(r, c));
  }
  return Operator(n_particles_, std::move(entries), convention_);
}

double Operator::max_abs_entry() const {
  double m = 0.0;
  for (const Complex& c : entries_) m = std::max(m, std::abs(c));
  return m;
}

bool Operator::is_diagonal(double tol) const {
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      if (r != c && std::abs((*this)(r, c)) > tol) return false;
    }
  }
  return true;
}

Operator Operator::with_convention(LabelConvention convention) const {
  Operator copy = *this;
  copy.convention_ = convention;
  return copy;
}

Operator& Operator::operator+=(const Operator& other) {
  check_compatible(dim_, convention_, other.dim_, other.convention_);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

Operator& Operator::operator-=(const Operator& other) {
  check_compatible(dim_, convention_, other.dim_, other.convention_);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

Operator& Operator::operator*=(Complex scalar) {
  for (Complex& c : entries_) c *= scalar;
  return *this;
}

Operator operator+(Operator a, const Operator& b) { return a += b; }
Operator operator-(Operator a, const Operator& b) { return a -= b; }
Operator operator*(Complex scalar, Operator op) { return op *= scalar; }

Operator operator*(const Operator& a, const Operator& b) {
  check_compatible(a.dimension(), a.convention(), b.dimension(), b.convention());
  const std::size_t dim = a.dimension();
  std::vector<Complex> entries(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t k = 0; k < dim; ++k) {
      const Complex lhs = a(r, k);
      if (lhs == Complex{}) continue;
      for (std::size_t c = 0; c < dim; ++c) entries[r * dim + c] += lhs * b(k, c);
    }
  }
  return Operator(a.n_particles(), std::move(entries), a.convention());
}

// ---------------------------------------------------------------------------
// Single-particle states

SingleParticlePreset parse_preset(std::string_view name) {
  if (name == "L") return SingleParticlePreset::kL;
  if (name == "R") return SingleParticlePreset::kR;
  if (name == "+" || name == "plus") return SingleParticlePreset::kPlus;
  if (name == "-" || name == "minus") return SingleParticlePreset::kMinus;
  if (name == "+i" || name == "plus_i") return SingleParticlePreset::kPlusI;
  if (name == "-i" || name == "minus_i") return SingleParticlePreset::kMinusI;
  throw Error(ErrorKind::kInvalidState, "unknown state name '" + std::string(name) + "'");
}

std::string preset_name(SingleParticlePreset preset) {
  switch (preset) {
    case SingleParticlePreset::kL:
      return "L";
    case SingleParticlePreset::kR:
      return "R";
    case SingleParticlePreset::kPlus:
      return "+";
    case SingleParticlePreset::kMinus:
      return "-";
    case SingleParticlePreset::kPlusI:
      return "+i";
    case SingleParticlePreset::kMinusI:
      return "-i";
  }
  return "?";
}

std::string preset_display(SingleParticlePreset preset, LabelConvention convention) {
  if (convention == LabelConvention::kBox) return "|" + preset_name(preset) + "⟩";
  switch (preset) {
    case SingleParticlePreset::kL:
      return "|↑⟩";
    case SingleParticlePreset::kR:
      return "|⇓⟩";
    case SingleParticlePreset::kPlus:
      return "|x,+⟩";
    case SingleParticlePreset::kMinus:
      return "|x,-⟩";
    case SingleParticlePreset::kPlusI:
      return "|y,+⟩";
    case SingleParticlePreset::kMinusI:
      return "|y,-⟩";
  }
  return "?";
}

Ket make_single_particle_state(SingleParticlePreset preset) {
  const double h = std::numbers::sqrt2 / 2.0;
  const Complex i{0.0, 1.0};
  switch (preset) {
    case SingleParticlePreset::kL:
      return Ket(1, {1.0, 0.0});
    case SingleParticlePreset::kR:
      return Ket(1, {0.0, 1.0});
    case SingleParticlePreset::kPlus:
      return Ket(1, {h, h});
    case SingleParticlePreset::kMinus:
      return Ket(1, {h, -h});
    case SingleParticlePreset::kPlusI:
      return Ket(1, {h, h * i});
    case SingleParticlePreset::kMinusI:
      return Ket(1, {h, -h * i});
  }
  throw Error(ErrorKind::kInvalidState);
}

Ket make_single_particle_state(Complex c_left, Complex c_right) {
  return Ket::normalize(1, {c_left, c_right});
}

// ---------------------------------------------------------------------------
// Products and contractions

Ket tensor(std::span<const Ket> states) {
  if (states.empty()) throw Error(ErrorKind::kInvalidState, "empty tensor product");
  int n_total = 0;
  for (const Ket& s : states) {
    n_total += s.n_particles();
    if (s.convention() != states.front().convention()) {
      throw Error(ErrorKind::kConventionMismatch);
    }
  }
  if (n_total > kMaxParticles) {
    throw Error(ErrorKind::kInvalidState, "tensor product exceeds particle cap");
  }
  std::vector<Complex> amps{Complex{1.0, 0.0}};
  for (const Ket& s : states) {
    std::vector<Complex> next;
    next.reserve(amps.size() * s.dimension());
    for (const Complex& a : amps) {
      for (const Complex& b : s.amplitudes()) next.push_back(a * b);
    }
    amps = std::move(next);
  }
  return Ket(n_total, std::move(amps), states.front().convention());
}

Ket tensor(std::initializer_list<Ket> states) {
  return tensor(std::span<const Ket>(states.begin(), states.size()));
}

Complex inner(const Ket& bra, const Ket& ket) {
  check_compatible(bra.dimension(), bra.convention(), ket.dimension(), ket.convention());
  return dot(bra.amplitudes(), ket.amplitudes());
}

Complex inner(const Ket& bra, const RawVector& ket) {
  check_compatible(bra.dimension(), bra.convention(), ket.dimension(), ket.convention());
  return dot(bra.amplitudes(), ket.amplitudes());
}

RawVector apply(const Operator& op, const Ket& ket) {
  check_compatible(op.dimension(), op.convention(), ket.dimension(), ket.convention());
  return RawVector(ket.n_particles(), multiply(op, ket.amplitudes()), ket.convention());
}

RawVector apply(const Operator& op, const RawVector& vec) {
  check_compatible(op.dimension(), op.convention(), vec.dimension(), vec.convention());
  return RawVector(vec.n_particles(), multiply(op, vec.amplitudes()), vec.convention());
}

Complex matrix_element(const Ket& bra, const Operator& op, const Ket& ket) {
  return inner(bra, apply(op, ket));
}

bool is_eigenstate(const Operator& op, const Ket& ket, Complex eigenvalue, double tol) {
  const RawVector image = apply(op, ket);
  double sq = 0.0;
  for (std::size_t i = 0; i < ket.dimension(); ++i) {
    sq += std::norm(image[i] - eigenvalue * ket[i]);
  }
  return std::sqrt(sq) <= tol;
}

}  // namespace tsvf
