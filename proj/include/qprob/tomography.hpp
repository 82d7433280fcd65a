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

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qprob/matrix2.hpp"
#include "qprob/observable.hpp"
#include "qprob/qubit.hpp"
#include "qprob/vec3.hpp"

namespace qprob {

/// Euler angles of the measurement frame. theta in [0, pi], phi and psi in
/// [0, 2 pi). Only theta and phi enter the measurement axis.
struct Direction {
  double theta = 0;
  double phi = 0;
  double psi = 0;

  /// (sin theta cos phi, sin theta sin phi, cos theta).
  Vec3 axis() const;
};

/// Throws DomainError for angles out of range. No wrapping.
void validate_direction(const Direction& d);

/// SU(2) frame rotation
///   [[ cos(t/2) e^{i(phi+psi)/2},   sin(t/2) e^{i(psi-phi)/2} ],
///    [-sin(t/2) e^{-i(psi-phi)/2},  cos(t/2) e^{-i(phi+psi)/2} ]]
/// whose m = +1/2 row measures along axis().
Matrix2 euler_unitary(const Direction& d);

/// Tomogram of a physical state along d.axis().
TomogramValue state_tomogram(const ProbTriple& p, const Direction& d,
                             double tol = kPhysicalTol);

/// Affine action p' = L p + C on probability triples.
struct AffineMap3 {
  Mat3 l = identity3();
  Vec3 c{};

  static AffineMap3 identity() { return {}; }
};

ProbTriple apply_affine(const AffineMap3& m, const ProbTriple& p);

/// Map equal to applying `first` and then `second`.
AffineMap3 compose(const AffineMap3& second, const AffineMap3& first);

/// Outcome of comparing one closed-form component with the value the
/// oracle produced.
struct FormulaCheck {
  std::string component;  // e.g. "L31", "C2"
  double closed_form = 0;
  double oracle = 0;
  bool matches = true;
};

inline constexpr double kRotationCheckTol = 1e-9;

struct RotationDerivation {
  AffineMap3 map;
  std::vector<FormulaCheck> checks;

  bool all_match() const;
};

/// Component formulas for L_jk and C_j written directly in terms of the
/// entries of u.
AffineMap3 closed_form_rotation(const Matrix2& u);

/// Compares every component of `closed_form_rotation(u)` with `oracle`.
std::vector<FormulaCheck> compare_rotation_formulas(
    const Matrix2& u, const AffineMap3& oracle,
    double tol = kRotationCheckTol);

/// Affine map induced on probability triples by rho -> u rho u^dagger.
///
/// Built from the oracle image of the four probe triples p0 and
/// p0 + e_k / 2; the closed-form component formulas are checked against it
/// and any disagreement is reported in `checks`.
RotationDerivation rotation_from_unitary_checked(const Matrix2& u);

inline AffineMap3 rotation_from_unitary(const Matrix2& u) {
  return rotation_from_unitary_checked(u).map;
}

/// Convex mixture of unitary conjugations, rho -> sum_s w_s u_s rho u_s^dagger.
struct ChannelSpec {
  std::vector<std::pair<double, Matrix2>> terms;  // (weight, unitary)
};

/// Throws DomainError on negative weights, weights not summing to 1 (1e-12)
/// or a non-unitary term.
void validate_channel(const ChannelSpec& spec);

/// Weighted sum of the per-unitary rotation maps.
AffineMap3 channel_map(const ChannelSpec& spec);

/// sum_s w_s u_s rho u_s^dagger, computed on matrices.
Matrix2 apply_channel_to_density(const ChannelSpec& spec, const Matrix2& rho);

}  // namespace qprob
