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

#include "qprob/matrix2.hpp"

#include <algorithm>
#include <cmath>

#include "qprob/errors.hpp"

namespace qprob {

Matrix2& Matrix2::operator+=(const Matrix2& o) {
  m11 += o.m11;
  m12 += o.m12;
  m21 += o.m21;
  m22 += o.m22;
  return *this;
}

Matrix2& Matrix2::operator-=(const Matrix2& o) {
  m11 -= o.m11;
  m12 -= o.m12;
  m21 -= o.m21;
  m22 -= o.m22;
  return *this;
}

Matrix2& Matrix2::operator*=(Complex s) {
  m11 *= s;
  m12 *= s;
  m21 *= s;
  m22 *= s;
  return *this;
}

Matrix2 operator+(Matrix2 a, const Matrix2& b) { return a += b; }
Matrix2 operator-(Matrix2 a, const Matrix2& b) { return a -= b; }
Matrix2 operator*(Complex s, Matrix2 a) { return a *= s; }
Matrix2 operator*(Matrix2 a, Complex s) { return a *= s; }

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
  return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
          a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

namespace pauli {
Matrix2 sigma_x() { return {0.0, 1.0, 1.0, 0.0}; }
Matrix2 sigma_y() { return {0.0, Complex(0, -1), Complex(0, 1), 0.0}; }
Matrix2 sigma_z() { return {1.0, 0.0, 0.0, -1.0}; }
}  // namespace pauli

double max_abs_diff(const Matrix2& a, const Matrix2& b) {
  return std::max({std::abs(a.m11 - b.m11), std::abs(a.m12 - b.m12),
                   std::abs(a.m21 - b.m21), std::abs(a.m22 - b.m22)});
}

bool is_hermitian(const Matrix2& m, double tol) {
  return max_abs_diff(m, m.adjoint()) <= tol;
}

bool is_unitary(const Matrix2& m, double tol) {
  return max_abs_diff(m * m.adjoint(), Matrix2::identity()) <= tol;
}

Matrix2 hermitian_part(const Matrix2& m) { return 0.5 * (m + m.adjoint()); }

Matrix2 commutator(const Matrix2& a, const Matrix2& b) {
  return a * b - b * a;
}

Eigenvalues eigenvalues_hermitian(const Matrix2& m) {
  if (!is_hermitian(m)) {
    throw DomainError("eigenvalues_hermitian: matrix is not Hermitian");
  }
  const double a = m.m11.real();
  const double d = m.m22.real();
  const double mean = 0.5 * (a + d);
  // Half-gap from hypot: never negative, no tr^2 - 4 det cancellation.
  const double radius = std::hypot(0.5 * (a - d), std::abs(m.m12));
  // Larger-magnitude root first; the other follows from the determinant.
  const double big = mean + std::copysign(radius, mean);
  const double det = a * d - std::norm(m.m12);
  const double small = (big != 0.0) ? det / big : mean - radius;
  return {std::min(big, small), std::max(big, small)};
}

Matrix2 conjugate_by_unitary(const Matrix2& rho, const Matrix2& u) {
  if (!is_unitary(u)) {
    throw DomainError("conjugate_by_unitary: u is not unitary to 1e-12");
  }
  return u * rho * u.adjoint();
}

std::array<double, 4> pauli_coordinates(const Matrix2& h) {
  // H = h0 I + hx sx + hy sy + hz sz  =>  H21 = hx + i hy.
  const Complex off = 0.5 * (h.m21 + std::conj(h.m12));
  return {0.5 * (h.m11.real() + h.m22.real()), off.real(), off.imag(),
          0.5 * (h.m11.real() - h.m22.real())};
}

Matrix2 expm_hermitian_generator(const Matrix2& h, double t) {
  if (!is_hermitian(h)) {
    throw DomainError("expm_hermitian_generator: generator is not Hermitian");
  }
  const auto [h0, hx, hy, hz] = pauli_coordinates(h);
  const double r = std::sqrt(hx * hx + hy * hy + hz * hz);
  const double c = std::cos(r * t);
  // sin(r t) / r, continuous at r = 0.
  const double sinc = (r * std::fabs(t) < 1e-8)
                          ? t * (1.0 - (r * t) * (r * t) / 6.0)
                          : std::sin(r * t) / r;
  const Complex i(0, 1);
  // cos(rt) I + i sin(rt) (h.sigma)/r
  Matrix2 core{c + i * sinc * hz, i * sinc * Complex(hx, -hy),
               i * sinc * Complex(hx, hy), c - i * sinc * hz};
  return std::exp(i * (h0 * t)) * core;
}

Matrix2 heisenberg_exact(const Matrix2& a0, const Matrix2& h, double t) {
  if (!is_hermitian(a0)) {
    throw DomainError("heisenberg_exact: observable is not Hermitian");
  }
  const Matrix2 u = expm_hermitian_generator(h, t);
  return hermitian_part(u * a0 * u.adjoint());
}

}  // namespace qprob
