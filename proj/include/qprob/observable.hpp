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
#include <vector>

#include "qprob/matrix2.hpp"
#include "qprob/qubit.hpp"
#include "qprob/vec3.hpp"

namespace qprob {

struct Direction;

/// A Hermitian observable H encoded as the probability triples of the two
/// density matrices rho(a) = (H + a I) / (Tr H + 2a) and rho(b).
struct ObservableProbRep {
  double a = 0;
  double b = 0;
  ProbTriple p_a;
  ProbTriple p_b;
};

/// rho(x) is a density matrix iff Tr H + 2x > 0 and lambda_min(H) + x >= 0.
bool is_admissible_shift(const Matrix2& h, double x);

/// Smallest x for which rho(x) is a density matrix: max(-lambda_min, -Tr H/2).
/// The bound itself is admissible unless it equals -Tr H / 2.
double admissible_lower_bound(const Matrix2& h);

/// |lambda_min(H)|: the simpler, sufficient bound x >= |x0|.
double conservative_shift_bound(const Matrix2& h);

struct ShiftPair {
  double a;
  double b;
};

/// a = |lambda_min| + 1, b = |lambda_min| + 2.
ShiftPair default_shifts(const Matrix2& h);

/// (H + x I) / (Tr H + 2x). Throws DomainError for inadmissible x.
Matrix2 rho_of_x(const Matrix2& h, double x);

/// Probability triples of rho(a) and rho(b).
ObservableProbRep encode_observable(const Matrix2& h, double a, double b);

enum class DecodeRoute {
  /// Tr H from the p3(a), p3(b) relation.
  kDiagonal,
  /// Tr H from (Tr H + 2a) rho12(a) = (Tr H + 2b) rho12(b); used when the
  /// diagonal relation is singular or worse conditioned (H11 ~ H22).
  kOffDiagonal,
  /// Both triples maximally mixed: H is a multiple of I whose trace is lost.
  kNonInvertible,
};

struct DecodeResult {
  Matrix2 h;
  DecodeRoute route = DecodeRoute::kDiagonal;
  std::vector<std::string> warnings;
};

/// Reconstructs H from its two-triple encoding. Throws
/// DegenerateEncodingError when a == b and InconsistentRepresentationError
/// when the triples do not come from a common H.
DecodeResult decode_observable_checked(const ObservableProbRep& rep);

inline Matrix2 decode_observable(const ObservableProbRep& rep) {
  return decode_observable_checked(rep).h;
}

struct TomogramValue {
  double w_plus;
  double w_minus;
};

/// w(+1/2, n, x) = (P(x) - p0).n + 1/2 with P(x) the triple of rho(x).
TomogramValue observable_tomogram(const Matrix2& h, const Direction& d,
                                  double x);

}  // namespace qprob
