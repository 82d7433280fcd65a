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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "qprob/errors.hpp"
#include "qprob/tomography.hpp"
#include "test_support.hpp"

using namespace qprob;
using qprob::oracle::Rng;

namespace {

const Matrix2 kExampleH{2.0, Complex(1, -1), Complex(1, 1), 0.0};

void expect_triple_near(const ProbTriple& got, const ProbTriple& want, double tol) {
  EXPECT_NEAR(got.p1, want.p1, tol);
  EXPECT_NEAR(got.p2, want.p2, tol);
  EXPECT_NEAR(got.p3, want.p3, tol);
}

// Tr H and H11 by solving the 2x2 linear system
//   p3(a) T - H11 = a - 2a p3(a)
//   p3(b) T - H11 = b - 2b p3(b)
// with Cramer's rule.
std::pair<double, double> trace_and_h11_by_cramer(const ObservableProbRep& rep) {
  const double a11 = rep.p_a.p3, a12 = -1, r1 = rep.a - 2 * rep.a * rep.p_a.p3;
  const double a21 = rep.p_b.p3, a22 = -1, r2 = rep.b - 2 * rep.b * rep.p_b.p3;
  const double det = a11 * a22 - a12 * a21;
  const double t = (r1 * a22 - a12 * r2) / det;
  const double h11 = (a11 * r2 - r1 * a21) / det;
  return {t, h11};
}

}  // namespace

TEST(RhoOfX, SigmaZFamily) {
  const Matrix2 rho = rho_of_x(pauli::sigma_z(), 2.0);
  EXPECT_EQ(rho, Matrix2::diag(0.75, 0.25));
}

TEST(RhoOfX, ProportionalToIdentity) {
  for (double x : {-0.5, 0.0, 3.0}) {
    EXPECT_EQ(rho_of_x(Matrix2::identity(), x), Matrix2::diag(0.5, 0.5));
  }
}

TEST(RhoOfX, GeneralHermitian) {
  const Matrix2 rho = rho_of_x(kExampleH, 1.0);
  const Matrix2 want{0.75, Complex(0.25, -0.25), Complex(0.25, 0.25), 0.25};
  EXPECT_LE(max_abs_diff(rho, want), 1e-16);
  EXPECT_GE(eigenvalues_hermitian(rho).min, -1e-12);
}

TEST(RhoOfX, InadmissibleShiftReportsBound) {
  try {
    rho_of_x(pauli::sigma_z(), 0.5);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("x >= 1"), std::string::npos) << e.what();
  }
}

TEST(Admissibility, ExactCharacterization) {
  // Positive definite H admits negative x down to -lambda_min.
  const Matrix2 h = Matrix2::diag(2.0, 3.0);
  EXPECT_TRUE(is_admissible_shift(h, -2.0));
  EXPECT_TRUE(is_admissible_shift(h, -1.0));
  EXPECT_FALSE(is_admissible_shift(h, -2.0001));
  EXPECT_DOUBLE_EQ(admissible_lower_bound(h), -2.0);
  EXPECT_DOUBLE_EQ(conservative_shift_bound(h), 2.0);
  // -I: lambda_min + x >= 0 at x = 1 but Tr H + 2x = 0.
  EXPECT_FALSE(is_admissible_shift(-1.0 * Matrix2::identity(), 1.0));
  EXPECT_TRUE(is_admissible_shift(-1.0 * Matrix2::identity(), 1.5));
}

TEST(Admissibility, DefaultShiftsAreAdmissibleAndNonnegative) {
  Rng rng(31);
  for (int n = 0; n < 500; ++n) {
    const Matrix2 h = oracle::random_hermitian(rng);
    const ShiftPair ab = default_shifts(h);
    EXPECT_GE(ab.a, 0);
    EXPECT_TRUE(is_admissible_shift(h, ab.a));
    EXPECT_TRUE(is_admissible_shift(h, ab.b));
    const double lmin = std::fabs(eigenvalues_hermitian(h).min);
    EXPECT_EQ(ab.a, lmin + 1);
    EXPECT_EQ(ab.b, lmin + 2);
  }
}

TEST(Encode, SigmaZ) {
  const ObservableProbRep rep = encode_observable(pauli::sigma_z(), 2, 3);
  expect_triple_near(rep.p_a, {0.5, 0.5, 0.75}, 0);
  expect_triple_near(rep.p_b, {0.5, 0.5, 2.0 / 3.0}, 1e-16);
}

TEST(Encode, Identity) {
  const ObservableProbRep rep = encode_observable(Matrix2::identity(), 1, 2);
  EXPECT_EQ(rep.p_a, ProbTriple::center());
  EXPECT_EQ(rep.p_b, ProbTriple::center());
}

TEST(Encode, GeneralHermitian) {
  const ObservableProbRep rep = encode_observable(kExampleH, 1, 2);
  // P1 - i P2 - conj(gamma) = H12 / (Tr H + 2x), conj(gamma) = (1 - i)/2.
  expect_triple_near(rep.p_a, {0.75, 0.75, 0.75}, 1e-16);
  expect_triple_near(rep.p_b, {2.0 / 3, 2.0 / 3, 2.0 / 3}, 1e-15);
  expect_triple_near(rep.p_a, probs_from_density(rho_of_x(kExampleH, 1)), 0);
  expect_triple_near(rep.p_b, probs_from_density(rho_of_x(kExampleH, 2)), 0);
}

TEST(Encode, Errors) {
  EXPECT_THROW(encode_observable(pauli::sigma_z(), 2, 2), DegenerateEncodingError);
  EXPECT_THROW(encode_observable(pauli::sigma_z(), 0.5, 2), DomainError);
  EXPECT_THROW(encode_observable(Matrix2{1.0, 1.0, 0.0, 1.0}, 2, 3), DomainError);
}

TEST(Encode, ShiftCovariance) {
  // rho(x) depends on H + x I only.
  Rng rng(32);
  for (int n = 0; n < 200; ++n) {
    const Matrix2 h = oracle::random_hermitian(rng);
    const ShiftPair ab = default_shifts(h);
    const double c = oracle::uniform(rng, -2, 2);
    const ObservableProbRep r1 = encode_observable(h, ab.a, ab.b);
    const ObservableProbRep r2 =
        encode_observable(h + c * Matrix2::identity(), ab.a - c, ab.b - c);
    expect_triple_near(r1.p_a, r2.p_a, 1e-12);
    expect_triple_near(r1.p_b, r2.p_b, 1e-12);
  }
}

TEST(Decode, SigmaZ) {
  const DecodeResult res = decode_observable_checked(encode_observable(pauli::sigma_z(), 2, 3));
  EXPECT_EQ(res.route, DecodeRoute::kDiagonal);
  EXPECT_LE(max_abs_diff(res.h, pauli::sigma_z()), 1e-14);
}

TEST(Decode, IdentityIsNonInvertible) {
  const DecodeResult res = decode_observable_checked({1, 2, ProbTriple::center(), ProbTriple::center()});
  EXPECT_EQ(res.route, DecodeRoute::kNonInvertible);
  EXPECT_EQ(res.h, Matrix2::zero());
  ASSERT_EQ(res.warnings.size(), 1u);
}

TEST(Decode, GeneralHermitianMatchesLinearSolve) {
  const ObservableProbRep rep = encode_observable(kExampleH, 1, 2);
  const auto [t, h11] = trace_and_h11_by_cramer(rep);
  EXPECT_NEAR(t, 2.0, 1e-14);
  EXPECT_NEAR(h11, 2.0, 1e-14);
  EXPECT_LE(max_abs_diff(decode_observable(rep), kExampleH), 1e-14);
}

TEST(Decode, EqualDiagonalUsesOffDiagonalRelation) {
  const Matrix2 h{0.7, Complex(1.2, -0.4), Complex(1.2, 0.4), 0.7};
  const ShiftPair ab = default_shifts(h);
  const ObservableProbRep rep = encode_observable(h, ab.a, ab.b);
  EXPECT_EQ(rep.p_a.p3, 0.5);
  EXPECT_EQ(rep.p_b.p3, 0.5);
  const DecodeResult res = decode_observable_checked(rep);
  EXPECT_EQ(res.route, DecodeRoute::kOffDiagonal);
  EXPECT_FALSE(res.warnings.empty());
  EXPECT_LE(max_abs_diff(res.h, h), 1e-12);
}

TEST(Decode, Errors) {
  const ObservableProbRep rep = encode_observable(pauli::sigma_z(), 2, 3);
  ObservableProbRep same = rep;
  same.b = same.a;
  EXPECT_THROW(decode_observable(same), DegenerateEncodingError);

  // Off-diagonals inconsistent with the diagonal pair.
  ObservableProbRep bad = rep;
  bad.p_a.p1 = 0.6;
  EXPECT_THROW(decode_observable(bad), InconsistentRepresentationError);

  // Identical non-central triples: rho(a) == rho(b) forces H ~ I.
  EXPECT_THROW(decode_observable({1, 2, {0.6, 0.5, 0.5}, {0.6, 0.5, 0.5}}),
               InconsistentRepresentationError);

  EXPECT_THROW(decode_observable({1, 2, {1, 1, 1}, {0.5, 0.5, 0.5}}), DomainError);
}

TEST(Decode, RoundTripRandomObservables) {
  Rng rng(33);
  for (int n = 0; n < 2000; ++n) {
    const Matrix2 h = oracle::random_hermitian(rng);
    double a = oracle::uniform(rng, 0, 10) + admissible_lower_bound(h) + 1e-3;
    double b = a + oracle::uniform(rng, 0.1, 10);
    const ObservableProbRep rep = encode_observable(h, a, b);
    EXPECT_LE(max_abs_diff(decode_observable(rep), h), 1e-9);

    // (Tr H + 2a) rho12(a) == (Tr H + 2b) rho12(b)
    const double tr = h.trace().real();
    const Complex r12a = Complex(rep.p_a.p1, -rep.p_a.p2) - std::conj(kGamma);
    const Complex r12b = Complex(rep.p_b.p1, -rep.p_b.p2) - std::conj(kGamma);
    EXPECT_LE(std::abs((tr + 2 * a) * r12a - (tr + 2 * b) * r12b), 1e-10);
  }
}

TEST(ObservableTomogram, Examples) {
  const TomogramValue z = observable_tomogram(pauli::sigma_z(), {0, 0, 0}, 2);
  EXPECT_EQ(z.w_plus, 0.75);
  EXPECT_EQ(z.w_minus, 0.25);

  const TomogramValue x =
      observable_tomogram(pauli::sigma_z(), {std::numbers::pi / 2, 0, 0}, 2);
  EXPECT_NEAR(x.w_plus, 0.5, 1e-16);
  EXPECT_NEAR(x.w_minus, 0.5, 1e-16);
  const Matrix2 rotated =
      conjugate_by_unitary(rho_of_x(pauli::sigma_z(), 2),
                           euler_unitary({std::numbers::pi / 2, 0, 0}));
  EXPECT_NEAR(rotated.m11.real(), x.w_plus, 1e-15);

  Rng rng(34);
  for (int n = 0; n < 20; ++n) {
    const TomogramValue id = observable_tomogram(
        Matrix2::identity(), oracle::random_direction(rng), oracle::uniform(rng, -0.9, 5));
    EXPECT_NEAR(id.w_plus, 0.5, 1e-15);
    EXPECT_NEAR(id.w_minus, 0.5, 1e-15);
  }
}

TEST(ObservableTomogram, NormalizedAndNonnegative) {
  Rng rng(35);
  for (int n = 0; n < 50; ++n) {
    const Matrix2 h = oracle::random_hermitian(rng);
    const double x = admissible_lower_bound(h) + oracle::uniform(rng, 0, 5);
    if (!is_admissible_shift(h, x)) continue;
    for (int k = 0; k < 100; ++k) {
      const TomogramValue w = observable_tomogram(h, oracle::random_direction(rng), x);
      EXPECT_EQ(w.w_plus + w.w_minus, 1.0);
      EXPECT_GE(w.w_plus, -1e-12);
      EXPECT_GE(w.w_minus, -1e-12);
    }
  }
}

TEST(ObservableTomogram, InadmissibleShift) {
  EXPECT_THROW(observable_tomogram(pauli::sigma_z(), {}, 0.0), DomainError);
}
