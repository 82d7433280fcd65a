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

#include "qprob/matrix2.hpp"
#include "qprob/vec3.hpp"

namespace qprob {

/// Absolute tolerance on the ball residual and on lambda_min for a triple or
/// density matrix to count as physical.
inline constexpr double kPhysicalTol = 1e-10;

/// gamma = (1 + i) / 2, the offset between p1 + i p2 and rho21.
inline constexpr Complex kGamma{0.5, 0.5};

/// Probabilities of spin projection +1/2 along x, y and z.
///
/// Any real triple is representable; physicality (the ball of radius 1/2
/// around (1/2, 1/2, 1/2)) is checked by the operations that need it.
struct ProbTriple {
  double p1 = 0.5;
  double p2 = 0.5;
  double p3 = 0.5;

  static ProbTriple center() { return {0.5, 0.5, 0.5}; }
  static ProbTriple from_vec(const Vec3& v) { return {v[0], v[1], v[2]}; }
  Vec3 vec() const { return {p1, p2, p3}; }

  friend bool operator==(const ProbTriple&, const ProbTriple&) = default;
};

/// (1/2, 1/2, 1/2) as a vector.
inline Vec3 center_vec() { return {0.5, 0.5, 0.5}; }

/// 1/4 - sum (p_k - 1/2)^2. Nonnegative iff physical, zero on pure states.
double check_ball(const ProbTriple& p);

/// True when every p_k is in [0,1] and check_ball(p) >= -tol.
bool is_physical(const ProbTriple& p, double tol = kPhysicalTol);

/// rho = [[p3, conj(p) - conj(gamma)], [p - gamma, 1 - p3]], p = p1 + i p2.
/// Throws DomainError naming the violated inequality for unphysical p.
Matrix2 density_from_probs(const ProbTriple& p, double tol = kPhysicalTol);

/// Inverse of density_from_probs. Requires a Hermitian, unit-trace,
/// positive semidefinite rho (each to tol).
ProbTriple probs_from_density(const Matrix2& rho, double tol = kPhysicalTol);

/// Same read-out without the density-matrix checks. Used on products that
/// are density matrices by construction.
ProbTriple probs_from_density_unchecked(const Matrix2& rho);

}  // namespace qprob
