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

#include <array>
#include <complex>

namespace qprob {

using Complex = std::complex<double>;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kUnitaryTol = 1e-12;

/// Dense 2x2 complex matrix. Entries are named by (row, column), 1-based.
struct Matrix2 {
  Complex m11{}, m12{}, m21{}, m22{};

  static Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Matrix2 zero() { return {}; }
  static Matrix2 diag(Complex a, Complex d) { return {a, 0.0, 0.0, d}; }

  Complex trace() const { return m11 + m22; }
  Complex det() const { return m11 * m22 - m12 * m21; }
  Matrix2 adjoint() const {
    return {std::conj(m11), std::conj(m21), std::conj(m12), std::conj(m22)};
  }

  Matrix2& operator+=(const Matrix2& o);
  Matrix2& operator-=(const Matrix2& o);
  Matrix2& operator*=(Complex s);

  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

Matrix2 operator+(Matrix2 a, const Matrix2& b);
Matrix2 operator-(Matrix2 a, const Matrix2& b);
Matrix2 operator*(const Matrix2& a, const Matrix2& b);
Matrix2 operator*(Complex s, Matrix2 a);
Matrix2 operator*(Matrix2 a, Complex s);

namespace pauli {
Matrix2 sigma_x();
Matrix2 sigma_y();
Matrix2 sigma_z();
}  // namespace pauli

/// Largest entrywise modulus of a - b.
double max_abs_diff(const Matrix2& a, const Matrix2& b);

bool is_hermitian(const Matrix2& m, double tol = kHermitianTol);
bool is_unitary(const Matrix2& m, double tol = kUnitaryTol);

/// (M + M^dagger) / 2. Strips roundoff asymmetry from products.
Matrix2 hermitian_part(const Matrix2& m);

Matrix2 commutator(const Matrix2& a, const Matrix2& b);

struct Eigenvalues {
  double min;
  double max;
};

/// Closed-form spectrum of a Hermitian 2x2 matrix. Throws DomainError if the
/// input is not Hermitian to kHermitianTol.
Eigenvalues eigenvalues_hermitian(const Matrix2& m);

/// u * rho * u^dagger. Throws DomainError if u is not unitary.
Matrix2 conjugate_by_unitary(const Matrix2& rho, const Matrix2& u);

/// Pauli coordinates (h0, hx, hy, hz) of a Hermitian matrix,
/// H = h0 I + hx sx + hy sy + hz sz.
std::array<double, 4> pauli_coordinates(const Matrix2& h);

/// exp(i H t) in closed form via the Pauli decomposition of H.
Matrix2 expm_hermitian_generator(const Matrix2& h, double t);

/// Exact solution A(t) = exp(iHt) A0 exp(-iHt) of dA/dt = i[H, A].
Matrix2 heisenberg_exact(const Matrix2& a0, const Matrix2& h, double t);

}  // namespace qprob
