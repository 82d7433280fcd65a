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

#include "qprob/qubit.hpp"

#include <cmath>
#include <string>

#include <fmt/format.h>

#include "qprob/errors.hpp"

namespace qprob {

double check_ball(const ProbTriple& p) {
  const double d1 = p.p1 - 0.5;
  const double d2 = p.p2 - 0.5;
  const double d3 = p.p3 - 0.5;
  return 0.25 - (d1 * d1 + d2 * d2 + d3 * d3);
}

bool is_physical(const ProbTriple& p, double tol) {
  for (double v : {p.p1, p.p2, p.p3}) {
    if (!(v >= -tol && v <= 1.0 + tol)) return false;
  }
  return check_ball(p) >= -tol;
}

Matrix2 density_from_probs(const ProbTriple& p, double tol) {
  for (double v : {p.p1, p.p2, p.p3}) {
    if (!std::isfinite(v)) {
      throw DomainError("density_from_probs: non-finite probability");
    }
  }
  const double residual = check_ball(p);
  if (residual < -tol) {
    throw DomainError(fmt::format(
        "density_from_probs: ball inequality (p1-1/2)^2+(p2-1/2)^2+(p3-1/2)^2 "
        "<= 1/4 violated by {:.3e}",
        -residual));
  }
  const Complex off = Complex(p.p1, p.p2) - kGamma;
  return {p.p3, std::conj(off), off, 1.0 - p.p3};
}

ProbTriple probs_from_density_unchecked(const Matrix2& rho) {
  return {rho.m21.real() + 0.5, rho.m21.imag() + 0.5, rho.m11.real()};
}

ProbTriple probs_from_density(const Matrix2& rho, double tol) {
  if (!is_hermitian(rho, tol)) {
    throw DomainError("probs_from_density: matrix is not Hermitian");
  }
  const double tr = rho.trace().real();
  if (std::fabs(tr - 1.0) > tol) {
    throw DomainError(
        fmt::format("probs_from_density: trace is {:.17g}, expected 1", tr));
  }
  const Eigenvalues ev = eigenvalues_hermitian(hermitian_part(rho));
  if (ev.min < -tol) {
    throw DomainError(fmt::format(
        "probs_from_density: matrix is indefinite (lambda_min = {:.3e})",
        ev.min));
  }
  return probs_from_density_unchecked(rho);
}

}  // namespace qprob
