// Copyright 2026 The qprob Authors
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

#include "qprob/tomography.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "qprob/errors.hpp"

namespace qprob {

Vec3 Direction::axis() const {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
          std::cos(theta)};
}

void validate_direction(const Direction& d) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (!(d.theta >= 0.0 && d.theta <= std::numbers::pi)) {
    throw DomainError(
        fmt::format("direction: theta = {:.17g} outside [0, pi]", d.theta));
  }
  if (!(d.phi >= 0.0 && d.phi < two_pi)) {
    throw DomainError(
        fmt::format("direction: phi = {:.17g} outside [0, 2 pi)", d.phi));
  }
  if (!(d.psi >= 0.0 && d.psi < two_pi)) {
    throw DomainError(
        fmt::format("direction: psi = {:.17g} outside [0, 2 pi)", d.psi));
  }
}

Matrix2 euler_unitary(const Direction& d) {
  validate_direction(d);
  const double c = std::cos(0.5 * d.theta);
  const double s = std::sin(0.5 * d.theta);
  const double sum = 0.5 * (d.phi + d.psi);
  const double diff = 0.5 * (d.psi - d.phi);
  const Complex e_sum = std::polar(1.0, sum);
  const Complex e_diff = std::polar(1.0, diff);
  return {c * e_sum, s * e_diff, -s * std::conj(e_diff), c * std::conj(e_sum)};
}

TomogramValue state_tomogram(const ProbTriple& p, const Direction& d,
                             double tol) {
  validate_direction(d);
  if (!is_physical(p, tol)) {
    throw DomainError("state_tomogram: probability triple is unphysical");
  }
  const double w = dot(p.vec() - center_vec(), d.axis()) + 0.5;
  return {w, 1.0 - w};
}

ProbTriple apply_affine(const AffineMap3& m, const ProbTriple& p) {
  return ProbTriple::from_vec(m.l * p.vec() + m.c);
}

AffineMap3 compose(const AffineMap3& second, const AffineMap3& first) {
  return {second.l * first.l, second.l * first.c + second.c};
}

bool RotationDerivation::all_match() const {
  for (const auto& c : checks) {
    if (!c.matches) return false;
  }
  return true;
}

AffineMap3 closed_form_rotation(const Matrix2& u) {
  const Complex u11 = u.m11, u12 = u.m12, u21 = u.m21, u22 = u.m22;
  const Complex i(0, 1);
  const Complex g = kGamma;
  const Complex gc = std::conj(kGamma);
  auto cj = [](Complex z) { return std::conj(z); };

  AffineMap3 m;
  m.l[2][0] = (u12 * cj(u11) + u11 * cj(u12)).real();
  m.l[2][1] = (i * (u12 * cj(u11) - u11 * cj(u12))).real();
  m.l[2][2] = std::norm(u11) - std::norm(u12);
  m.l[0][2] = (u11 * cj(u21)).real() - (u12 * cj(u22)).real();
  m.l[0][1] = (i * u12 * cj(u21)).real() - (i * u11 * cj(u22)).real();
  m.l[0][0] = (u12 * cj(u21)).real() + (u11 * cj(u22)).real();
  m.l[1][2] = (u12 * cj(u22)).imag() - (u11 * cj(u21)).imag();
  m.l[1][1] = (i * u11 * cj(u22)).imag() - (i * u12 * cj(u21)).imag();
  m.l[1][0] = -(u12 * cj(u21)).imag() - (u11 * cj(u22)).imag();
  // The trailing "gamma*" term is read as conj(gamma).
  m.c[0] = (-g * u12 * cj(u21) - gc * u11 * cj(u22) + u12 * cj(u22) + gc)
               .real();
  m.c[1] = (g * u12 * cj(u21) + gc * u11 * cj(u22) - u12 * cj(u22) - gc)
               .imag();
  m.c[2] = (-g * u12 * cj(u11) - gc * u11 * cj(u12) + std::norm(u12)).real();
  return m;
}

std::vector<FormulaCheck> compare_rotation_formulas(const Matrix2& u,
                                                    const AffineMap3& oracle,
                                                    double tol) {
  const AffineMap3 closed = closed_form_rotation(u);
  std::vector<FormulaCheck> out;
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      const double pv = closed.l[j][k];
      const double ov = oracle.l[j][k];
      out.push_back({fmt::format("L{}{}", j + 1, k + 1), pv, ov,
                     std::fabs(pv - ov) <= tol});
    }
  }
  for (int j = 0; j < 3; ++j) {
    out.push_back({fmt::format("C{}", j + 1), closed.c[j], oracle.c[j],
                   std::fabs(closed.c[j] - oracle.c[j]) <= tol});
  }
  return out;
}

RotationDerivation rotation_from_unitary_checked(const Matrix2& u) {
  if (!is_unitary(u)) {
    throw DomainError("rotation_from_unitary: u is not unitary to 1e-12");
  }
  auto image = [&](const Vec3& p) {
    const Matrix2 rho = density_from_probs(ProbTriple::from_vec(p));
    return probs_from_density_unchecked(conjugate_by_unitary(rho, u)).vec();
  };
  const Vec3 p0 = center_vec();
  const Vec3 f0 = image(p0);
  AffineMap3 m;
  for (int k = 0; k < 3; ++k) {
    Vec3 probe = p0;
    probe[k] += 0.5;
    const Vec3 column = 2.0 * (image(probe) - f0);
    for (int j = 0; j < 3; ++j) m.l[j][k] = column[j];
  }
  m.c = f0 - m.l * p0;
  return {m, compare_rotation_formulas(u, m)};
}

void validate_channel(const ChannelSpec& spec) {
  if (spec.terms.empty()) {
    throw DomainError("channel: no terms");
  }
  double total = 0;
  for (const auto& [w, u] : spec.terms) {
    if (!(w >= 0.0 && w <= 1.0)) {
      throw DomainError(
          fmt::format("channel: weight {:.17g} outside [0, 1]", w));
    }
    if (!is_unitary(u)) {
      throw DomainError("channel: term is not unitary to 1e-12");
    }
    total += w;
  }
  if (std::fabs(total - 1.0) > 1e-12) {
    throw DomainError(
        fmt::format("channel: weights sum to {:.17g}, expected 1", total));
  }
}

AffineMap3 channel_map(const ChannelSpec& spec) {
  validate_channel(spec);
  AffineMap3 out{zero3(), {}};
  for (const auto& [w, u] : spec.terms) {
    const AffineMap3 r = rotation_from_unitary(u);
    out.l = out.l + w * r.l;
    out.c = out.c + w * r.c;
  }
  return out;
}

Matrix2 apply_channel_to_density(const ChannelSpec& spec, const Matrix2& rho) {
  validate_channel(spec);
  Matrix2 out = Matrix2::zero();
  for (const auto& [w, u] : spec.terms) {
    out += w * conjugate_by_unitary(rho, u);
  }
  return out;
}

}  // namespace qprob
