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

#include <vector>

#include "qprob/matrix2.hpp"
#include "qprob/qubit.hpp"
#include "qprob/tomography.hpp"
#include "qprob/vec3.hpp"

namespace qprob {

/// dp/dt = L p + C for the probability triple of rho(x, t) under
/// dA/dt = i[H, A].
struct KineticSystem {
  Mat3 l = zero3();  // antisymmetric
  Vec3 c{};
  Matrix2 h;
  double x = 0;
  /// Closed-form L and C components against the finite-difference fit.
  std::vector<FormulaCheck> checks;
  /// True when a closed-form component disagreed and the fitted generator
  /// replaced it.
  bool oracle_override = false;
};

/// Generator from the closed-form entries
///   L12 = H11 - H22, L13 = -2 Im H21, L23 = 2 Re H21 (L antisymmetric),
///   C = (Im H21 + (H22 - H11)/2, -Re H21 + (H11 - H22)/2, 2 Im(gamma H12)).
KineticSystem closed_form_kinetic(const Matrix2& h, double x);

/// Fits (L, C) by central differences of the exact Heisenberg flow at the
/// probe triples p0, p0 + e_k / 2. Step dt = 1e-6 / max(1, |H|).
KineticSystem fitted_kinetic(const Matrix2& h, double x);

/// Componentwise L11..L33, C1..C3 comparison of two generators; a component
/// matches when the two agree to `tol`.
std::vector<FormulaCheck> compare_kinetic_formulas(const KineticSystem& closed,
                                                   const KineticSystem& fitted,
                                                   double tol);

/// Closed-form generator, validated against the fitted one and five
/// pseudo-random physical triples. Mismatches beyond 1e-4 * max(1, |H|) are
/// flagged in `checks` and the fitted generator is used instead.
KineticSystem build_kinetic(const Matrix2& h, double x);

/// exp of the augmented generator [[L, C], [0, 0]] applied to (p0, 1).
ProbTriple evolve(const KineticSystem& sys, const ProbTriple& p0, double t);

/// A(t) through the rho(x) map: (Tr A0 + 2x) rho(x, t) - x I.
Matrix2 evolve_observable(const Matrix2& a0, const Matrix2& h, double x,
                          double t);

struct Trajectory {
  std::vector<double> times;
  std::vector<ProbTriple> probs;
  double x = 0;
};

/// steps + 1 points on the uniform grid t_k = t_end * k / steps, each from the
/// closed-form propagator. Requires steps >= 1 and t_end > 0.
Trajectory sample_trajectory(const KineticSystem& sys, const ProbTriple& p0,
                             double t_end, int steps);

}  // namespace qprob
