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

#include "qprob/observable.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "qprob/errors.hpp"
#include "qprob/tomography.hpp"

namespace qprob {
namespace {

constexpr double kDenominatorGuard = 1e-12;
constexpr double kConsistencyTol = 1e-8;

void require_hermitian(const Matrix2& h, const char* where) {
  if (!is_hermitian(h)) {
    throw DomainError(fmt::format("{}: observable is not Hermitian", where));
  }
}

void require_admissible(const Matrix2& h, double x, const char* where) {
  if (!is_admissible_shift(h, x)) {
    throw DomainError(fmt::format(
        "{}: shift x = {:.17g} is inadmissible; need Tr H + 2x > 0 and "
        "lambda_min + x >= 0 (x >= {:.17g})",
        where, x, admissible_lower_bound(h)));
  }
}

// rho12(x) = p1 - i p2 - conj(gamma)
Complex rho12_of(const ProbTriple& p) {
  return Complex(p.p1, -p.p2) - std::conj(kGamma);
}

}  // namespace

bool is_admissible_shift(const Matrix2& h, double x) {
  if (!std::isfinite(x)) return false;
  const Eigenvalues ev = eigenvalues_hermitian(h);
  const double denom = h.trace().real() + 2.0 * x;
  return denom > kDenominatorGuard && ev.min + x >= 0.0;
}

double admissible_lower_bound(const Matrix2& h) {
  const Eigenvalues ev = eigenvalues_hermitian(h);
  return std::max(-ev.min, -0.5 * h.trace().real());
}

double conservative_shift_bound(const Matrix2& h) {
  return std::fabs(eigenvalues_hermitian(h).min);
}

ShiftPair default_shifts(const Matrix2& h) {
  const double base = conservative_shift_bound(h);
  return {base + 1.0, base + 2.0};
}

Matrix2 rho_of_x(const Matrix2& h, double x) {
  require_hermitian(h, "rho_of_x");
  require_admissible(h, x, "rho_of_x");
  const double denom = h.m11.real() + h.m22.real() + 2.0 * x;
  return {(h.m11.real() + x) / denom, h.m12 / denom, h.m21 / denom,
          (h.m22.real() + x) / denom};
}

ObservableProbRep encode_observable(const Matrix2& h, double a, double b) {
  require_hermitian(h, "encode_observable");
  if (a == b) {
    throw DegenerateEncodingError(
        "encode_observable: a == b gives a single density matrix; the "
        "observable cannot be recovered");
  }
  require_admissible(h, a, "encode_observable");
  require_admissible(h, b, "encode_observable");
  // rho(x) is PSD by admissibility, so the triples are read out directly.
  return {a, b, probs_from_density_unchecked(rho_of_x(h, a)),
          probs_from_density_unchecked(rho_of_x(h, b))};
}

DecodeResult decode_observable_checked(const ObservableProbRep& rep) {
  const double a = rep.a;
  const double b = rep.b;
  if (a == b) {
    throw DegenerateEncodingError("decode_observable: a == b");
  }
  for (const ProbTriple* p : {&rep.p_a, &rep.p_b}) {
    if (!is_physical(*p)) {
      throw DomainError(
          "decode_observable: triple violates the ball inequality "
          "(p1-1/2)^2+(p2-1/2)^2+(p3-1/2)^2 <= 1/4");
    }
  }

  const double p3a = rep.p_a.p3;
  const double p3b = rep.p_b.p3;
  const Complex r12a = rho12_of(rep.p_a);
  const Complex r12b = rho12_of(rep.p_b);
  const double diag_den = p3a - p3b;
  const Complex off_den = r12a - r12b;

  DecodeResult out;
  if (std::fabs(diag_den) <= kDenominatorGuard &&
      std::abs(off_den) <= kDenominatorGuard) {
    if (std::abs(r12a) > kDenominatorGuard ||
        std::fabs(p3a - 0.5) > kDenominatorGuard) {
      throw InconsistentRepresentationError(
          "decode_observable: p(a) == p(b) but the state is not maximally "
          "mixed; no observable has this encoding");
    }
    out.route = DecodeRoute::kNonInvertible;
    out.h = Matrix2::zero();
    out.warnings.emplace_back(
        "non-invertible encoding: both triples are maximally mixed, so H is "
        "a multiple of the identity with unrecoverable trace; returning 0*I");
    return out;
  }

  double trace = 0;
  double h11 = 0;
  if (std::fabs(diag_den) >= std::abs(off_den)) {
    out.route = DecodeRoute::kDiagonal;
    h11 = (a * p3b * (1.0 - 2.0 * p3a) - b * p3a * (1.0 - 2.0 * p3b)) /
          diag_den;
    trace = (a - b + 2.0 * (b * p3b - a * p3a)) / diag_den;
  } else {
    out.route = DecodeRoute::kOffDiagonal;
    const Complex t = 2.0 * (b * r12b - a * r12a) / off_den;
    if (std::fabs(t.imag()) > kConsistencyTol * std::max(1.0, std::abs(t))) {
      throw InconsistentRepresentationError(
          "decode_observable: off-diagonal relation yields a complex trace");
    }
    trace = t.real();
    h11 = p3a * (trace + 2.0 * a) - a;
    if (std::fabs(diag_den) <= kDenominatorGuard) {
      out.warnings.emplace_back(
          "p3(a) == p3(b): H11 == H22, trace recovered from the off-diagonal "
          "relation");
    }
  }

  if (trace + 2.0 * a <= kDenominatorGuard ||
      trace + 2.0 * b <= kDenominatorGuard) {
    throw InconsistentRepresentationError(
        "decode_observable: reconstructed Tr H + 2x is not positive");
  }
  const Complex h12a = (trace + 2.0 * a) * r12a;
  const Complex h12b = (trace + 2.0 * b) * r12b;
  if (std::abs(h12a - h12b) >
      kConsistencyTol * std::max(1.0, std::abs(h12a))) {
    throw InconsistentRepresentationError(fmt::format(
        "decode_observable: H12 from a and from b differ by {:.3e}",
        std::abs(h12a - h12b)));
  }
  // Diagonal p3 relation has to hold as well on the off-diagonal route.
  const double h11b = p3b * (trace + 2.0 * b) - b;
  if (std::fabs(h11 - h11b) > kConsistencyTol * std::max(1.0, std::fabs(h11))) {
    throw InconsistentRepresentationError(fmt::format(
        "decode_observable: H11 from a and from b differ by {:.3e}",
        std::fabs(h11 - h11b)));
  }
  out.h = {h11, h12a, std::conj(h12a), trace - h11};
  return out;
}

TomogramValue observable_tomogram(const Matrix2& h, const Direction& d,
                                  double x) {
  validate_direction(d);
  const ProbTriple p = probs_from_density_unchecked(rho_of_x(h, x));
  const double w = dot(p.vec() - center_vec(), d.axis()) + 0.5;
  return {w, 1.0 - w};
}

}  // namespace qprob
