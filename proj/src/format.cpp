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

#include "tsvf/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>

namespace tsvf::format {

namespace {

std::optional<long> as_integer(double x, double tol) {
  const double r = std::round(x);
  if (std::abs(x - r) > tol || std::abs(r) > 1e15) return std::nullopt;
  return static_cast<long>(r);
}

/// Renders p + q i without denominators: "1+i", "-3-3i", "i", "-2i".
std::string gaussian_integer(long p, long q) {
  auto imag = [](long v, bool leading) {
    std::string s;
    if (v < 0) s = "-";
    else if (!leading) s = "+";
    if (std::abs(v) != 1) s += std::to_string(std::abs(v));
    return s + "i";
  };
  if (q == 0) return std::to_string(p);
  if (p == 0) return imag(q, true);
  return std::to_string(p) + imag(q, false);
}

}  // namespace

std::string real_text(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

std::string complex_text(Complex value) {
  const double im = value.imag() == 0.0 ? 0.0 : value.imag();
  const std::string re_text = real_text(value.real());
  const std::string im_text = real_text(std::abs(im));
  return re_text + (std::signbit(im) ? " - " : " + ") + im_text + "i";
}

std::optional<std::string> fraction_annotation(double value, double tol) {
  for (int q = 1; q <= kMaxDenominator; ++q) {
    if (auto p = as_integer(value * q, tol * q)) {
      if (q == 1) return std::to_string(*p);
      return std::to_string(*p) + "/" + std::to_string(q);
    }
  }
  return std::nullopt;
}

std::optional<std::string> fraction_annotation(Complex value, double tol) {
  for (int r = 1; r <= kMaxDenominator; ++r) {
    const auto p = as_integer(value.real() * r, tol * r);
    const auto q = as_integer(value.imag() * r, tol * r);
    if (!p || !q) continue;
    const std::string numerator = gaussian_integer(*p, *q);
    if (r == 1) return numerator;
    const bool compound = *p != 0 && *q != 0;
    return (compound ? "(" + numerator + ")" : numerator) + "/" + std::to_string(r);
  }
  return std::nullopt;
}

void write_table(std::ostream& out, const ScenarioReport& report) {
  out << "scenario: " << report.scenario << "\n";
  if (!report.summary.empty()) out << "summary:  " << report.summary << "\n";
  out << "labels:   " << (report.convention == LabelConvention::kBox ? "box" : "spin")
      << "   particles: " << report.n_particles << "   tolerance: " << report.tolerance << "\n";
  for (const std::string& note : report.notes) out << "note:     " << note << "\n";

  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const QueryRecord& r = report.records[i];
    out << "\n[" << i << "] " << query_type_name(r.query.type) << " " << r.label << "  ("
        << quantity_kind_name(r.kind) << ")\n";
    if (!r.query.claim.empty()) out << "    claim: " << r.query.claim << "\n";
    const std::string prefix = is_single_operator(r.query.type) ? r.label + "  " : "";
    for (const ComplexResult& a : r.amplitudes) {
      out << "    " << prefix << a.name << "  " << complex_text(a.value);
      if (auto frac = fraction_annotation(a.value, report.tolerance)) out << " (= " << *frac << ")";
      out << "  |.|^2=" << real_text(std::norm(a.value));
      if (a.vanishing) out << "  vanishing";
      out << "\n";
    }
    for (const RealResult& x : r.reals) {
      out << "    " << x.name << "  " << real_text(x.value);
      if (auto frac = fraction_annotation(x.value, report.tolerance)) out << " (= " << *frac << ")";
      out << "\n";
    }
    for (const VerdictResult& v : r.verdicts) {
      out << "    " << v.name << "  " << (v.value ? "true" : "false") << "\n";
    }
    if (r.error) out << "    error: " << *r.error << "\n";
  }
}

}  // namespace tsvf::format
