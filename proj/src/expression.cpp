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

#include "tsvf/expression.hpp"

#include <cctype>
#include <cstdlib>

#include "tsvf/error.hpp"

namespace tsvf {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int n_particles, std::size_t line)
      : text_(text), n_(n_particles), line_(line) {}

  HamiltonianSpec parse() {
    HamiltonianSpec spec;
    spec.n_particles = n_;
    skip_space();
    if (at_end()) fail("empty expression");
    double sign = 1.0;
    if (peek() == '-') {
      ++pos_;
      sign = -1.0;
    } else if (peek() == '+') {
      ++pos_;
    }
    spec.terms.push_back(term(sign));
    for (;;) {
      skip_space();
      if (at_end()) break;
      if (peek() == '+') {
        sign = 1.0;
      } else if (peek() == '-') {
        sign = -1.0;
      } else {
        fail(std::string("expected '+' or '-', found '") + peek() + "'");
      }
      ++pos_;
      spec.terms.push_back(term(sign));
    }
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
    throw ParseError(line_, pos + 1, message);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool starts_number() const {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
  }

  /// True when an identifier at the cursor is exactly "i" (the imaginary unit).
  bool at_imaginary_unit() const {
    if (peek() != 'i') return false;
    const std::size_t next = pos_ + 1;
    return next >= text_.size() ||
           !(std::isalnum(static_cast<unsigned char>(text_[next])) || text_[next] == '_');
  }

  double number() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.' ||
                         peek() == 'e' || peek() == 'E' ||
                         ((peek() == '+' || peek() == '-') && pos_ > start &&
                          (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E')))) {
      ++pos_;
    }
    const std::string literal(text_.substr(start, pos_ - start));
    char* end = nullptr;
    const double value = std::strtod(literal.c_str(), &end);
    if (end != literal.c_str() + literal.size()) fail_at(start, "malformed number '" + literal + "'");
    return value;
  }

  HamiltonianTerm term(double sign) {
    skip_space();
    Complex coeff{sign, 0.0};
    bool has_scalar = false;
    if (starts_number()) {
      double magnitude = number();
      has_scalar = true;
      if (at_imaginary_unit()) {
        ++pos_;
        coeff *= Complex{0.0, magnitude};
      } else {
        coeff *= magnitude;
      }
    } else if (at_imaginary_unit()) {
      ++pos_;
      has_scalar = true;
      coeff *= Complex{0.0, 1.0};
    }
    if (has_scalar) {
      skip_space();
      const bool star = accept('*');
      skip_space();
      if (!star && (at_end() || peek() == '+' || peek() == '-')) {
        return {coeff, ProjectorSpec::identity(n_)};
      }
    }
    return {coeff, product()};
  }

  ProjectorSpec product() {
    const std::size_t start = pos_;
    ProjectorSpec spec = atom();
    while (accept('*')) {
      const std::size_t factor_pos = pos_;
      ProjectorSpec next = atom();
      if (spec.kind != ProjectorKind::kBox || next.kind != ProjectorKind::kBox) {
        fail_at(factor_pos, "only box(...) factors can be multiplied");
      }
      for (const BoxAssignment& a : next.boxes) spec.boxes.push_back(a);
      validated(spec, start);
    }
    return spec;
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    if (start == pos_) fail("expected a projector name");
    return std::string(text_.substr(start, pos_ - start));
  }

  int index() {
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a particle index");
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::atoi(std::string(text_.substr(start, pos_ - start)).c_str());
  }

  Box box_letter() {
    skip_space();
    const char c = peek();
    if (c != 'L' && c != 'R') fail("expected box L or R");
    ++pos_;
    return c == 'L' ? Box::kL : Box::kR;
  }

  ProjectorSpec validated(ProjectorSpec spec, std::size_t pos) {
    try {
      spec.validate();
    } catch (const Error& e) {
      fail_at(pos, e.what());
    }
    return spec;
  }

  ProjectorSpec atom() {
    skip_space();
    const std::size_t start = pos_;
    const std::string name = identifier();
    ProjectorSpec spec;
    spec.n_particles = n_;

    if (name == "identity" || name == "I") {
      spec.kind = ProjectorKind::kIdentity;
    } else if (name == "box") {
      spec.kind = ProjectorKind::kBox;
      expect('(');
      const int p = index();
      expect(',');
      spec.boxes.push_back({p, box_letter()});
      expect(')');
    } else if (name == "pair_same" || name == "pair_diff") {
      spec.kind = name == "pair_same" ? ProjectorKind::kPairSame : ProjectorKind::kPairDiff;
      expect('(');
      spec.particles.push_back(index());
      expect(',');
      spec.particles.push_back(index());
      expect(')');
    } else if (name == "all_same") {
      spec.kind = ProjectorKind::kAllSame;
      if (accept('(')) {
        spec.particles.push_back(index());
        while (accept(',')) spec.particles.push_back(index());
        expect(')');
      }
    } else if (name == "sd") {
      spec.kind = ProjectorKind::kSameDiff;
      expect('(');
      spec.particles.push_back(index());
      expect(',');
      spec.particles.push_back(index());
      if (!accept(';')) expect(',');
      spec.particles.push_back(index());
      expect(')');
    } else {
      fail_at(start, "unknown projector '" + name + "'");
    }
    return validated(std::move(spec), start);
  }

  std::string_view text_;
  int n_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

HamiltonianSpec parse_operator_expression(std::string_view text, int n_particles,
                                          std::size_t line) {
  if (n_particles < 1 || n_particles > kMaxParticles) {
    throw ParseError(line, 1, "particle count out of range");
  }
  return Parser(text, n_particles, line).parse();
}

std::vector<HamiltonianSpec> parse_operator_list(std::string_view text, int n_particles) {
  std::vector<HamiltonianSpec> out;
  std::size_t line = 0;
  while (!text.empty()) {
    ++line;
    const std::size_t eol = text.find('\n');
    std::string_view row = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const std::size_t hash = row.find('#'); hash != std::string_view::npos) {
      row = row.substr(0, hash);
    }
    if (row.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    out.push_back(parse_operator_expression(row, n_particles, line));
  }
  if (out.empty()) throw ParseError(line == 0 ? 1 : line, 1, "no operator expressions found");
  return out;
}

}  // namespace tsvf
