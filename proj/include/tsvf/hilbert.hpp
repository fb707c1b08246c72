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

// Dense complex linear algebra on the 2^n-dimensional space of n particles,
// each of which sits in one of two boxes.
//
// Basis convention: a label b1...bn maps to the index whose binary digits are
// b1...bn with L = 0 and R = 1, particle 1 being the most significant digit.

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tsvf {

using Complex = std::complex<double>;

/// Global zero threshold. 1e-12 separates exact zeros from the smallest
/// nonzero magnitude that arises for the small systems handled here.
inline constexpr double kZeroTolerance = 1e-12;

/// Upper bound on particle count for dense constructions (dimension 4096).
inline constexpr int kMaxParticles = 12;

enum class Box { kL = 0, kR = 1 };

/// Naming of the two single-particle basis states. kSpin identifies L with
/// spin-up and R with spin-down along z; the numbers are the same.
enum class LabelConvention { kBox, kSpin };

std::size_t dimension_for(int n_particles);

bool is_finite(Complex c);
bool is_vanishing(Complex c, double tol = kZeroTolerance);

/// String over {L, R}, one letter per particle.
class BasisLabel {
 public:
  explicit BasisLabel(std::string boxes);
  static BasisLabel from_index(std::size_t index, int n_particles);

  int n_particles() const { return static_cast<int>(boxes_.size()); }
  /// 1-based particle index.
  Box box(int particle) const;
  std::size_t index() const;
  const std::string& str() const { return boxes_; }
  /// Rendering in the given convention, e.g. "LLR" or "↑↑⇓".
  std::string render(LabelConvention convention) const;

  bool operator==(const BasisLabel&) const = default;

 private:
  std::string boxes_;
};

/// Unnormalized vector on the n-particle space; the result kind of apply().
class RawVector {
 public:
  RawVector(int n_particles, std::vector<Complex> amplitudes,
            LabelConvention convention = LabelConvention::kBox);

  int n_particles() const { return n_particles_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  LabelConvention convention() const { return convention_; }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_[i]; }
  double norm() const;

  bool operator==(const RawVector&) const = default;

 private:
  int n_particles_;
  std::vector<Complex> amplitudes_;
  LabelConvention convention_;
};

/// Normalized state vector.
class Ket {
 public:
  /// Requires squared norm within kZeroTolerance of 1.
  Ket(int n_particles, std::vector<Complex> amplitudes,
      LabelConvention convention = LabelConvention::kBox);

  /// Rescales to unit norm; throws kUnnormalizableState on a zero vector.
  static Ket normalize(int n_particles, std::vector<Complex> amplitudes,
                       LabelConvention convention = LabelConvention::kBox);
  static Ket basis(const BasisLabel& label,
                   LabelConvention convention = LabelConvention::kBox);

  int n_particles() const { return n_particles_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  LabelConvention convention() const { return convention_; }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_[i]; }
  Complex amplitude(const BasisLabel& label) const;

  RawVector raw() const;
  Ket with_convention(LabelConvention convention) const;
  /// Multiplies every amplitude by a unit-modulus phase.
  Ket rephased(Complex phase) const;

  bool operator==(const Ket&) const = default;

 private:
  int n_particles_;
  std::vector<Complex> amplitudes_;
  LabelConvention convention_;
};

/// Dense square complex matrix, row-major.
class Operator {
 public:
  Operator(int n_particles, std::vector<Complex> entries,
           LabelConvention convention = LabelConvention::kBox);

  static Operator zero(int n_particles,
                       LabelConvention convention = LabelConvention::kBox);
  static Operator identity(int n_particles,
                           LabelConvention convention = LabelConvention::kBox);
  static Operator diagonal(int n_particles, std::span<const Complex> diag,
                           LabelConvention convention = LabelConvention::kBox);

  int n_particles() const { return n_particles_; }
  std::size_t dimension() const { return dim_; }
  LabelConvention convention() const { return convention_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  std::span<const Complex> entries() const { return entries_; }

  Operator adjoint() const;
  double max_abs_entry() const;
  bool is_diagonal(double tol = kZeroTolerance) const;
  Operator with_convention(LabelConvention convention) const;

  Operator& operator+=(const Operator& other);
  Operator& operator-=(const Operator& other);
  Operator& operator*=(Complex scalar);

  bool operator==(const Operator&) const = default;

 private:
  int n_particles_;
  std::size_t dim_;
  std::vector<Complex> entries_;
  LabelConvention convention_;
};

Operator operator+(Operator a, const Operator& b);
Operator operator-(Operator a, const Operator& b);
Operator operator*(Complex scalar, Operator op);
/// Matrix product.
Operator operator*(const Operator& a, const Operator& b);

enum class SingleParticlePreset { kL, kR, kPlus, kMinus, kPlusI, kMinusI };

/// Accepts "L", "R", "+", "-", "+i", "-i" and the spelled-out forms "plus",
/// "minus", "plus_i", "minus_i".
SingleParticlePreset parse_preset(std::string_view name);
/// Short name used in scenario files ("L", "+i", ...).
std::string preset_name(SingleParticlePreset preset);
/// Display name, e.g. "|+i⟩" or, for kSpin, "|y,+⟩".
std::string preset_display(SingleParticlePreset preset,
                           LabelConvention convention);

Ket make_single_particle_state(SingleParticlePreset preset);
/// Normalizes cL|L⟩ + cR|R⟩.
Ket make_single_particle_state(Complex c_left, Complex c_right);

/// Particle 1 is the leftmost tensor factor.
Ket tensor(std::span<const Ket> states);
Ket tensor(std::initializer_list<Ket> states);

/// ⟨bra|ket⟩, conjugate-linear in the first argument.
Complex inner(const Ket& bra, const Ket& ket);
Complex inner(const Ket& bra, const RawVector& ket);

RawVector apply(const Operator& op, const Ket& ket);
RawVector apply(const Operator& op, const RawVector& vec);

/// ⟨bra|op|ket⟩.
Complex matrix_element(const Ket& bra, const Operator& op, const Ket& ket);

/// ‖op|ket⟩ − eigenvalue|ket⟩‖ ≤ tol.
bool is_eigenstate(const Operator& op, const Ket& ket, Complex eigenvalue,
                   double tol = kZeroTolerance);

}  // namespace tsvf
