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

#include "qprob/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

#include <fmt/format.h>

#include "qprob/errors.hpp"
#include "qprob/observable.hpp"

namespace qprob {
namespace {

constexpr double kKineticCheckTol = 1e-4;
constexpr double kTrajectoryPhysicalTol = 1e-8;

double generator_scale(const Matrix2& h) {
  const auto [h0, hx, hy, hz] = pauli_coordinates(h);
  return std::max(1.0, std::sqrt(hx * hx + hy * hy + hz * hz));
}

// Derivative of the triple at p under the exact Heisenberg flow.
Vec3 flow_derivative(const Matrix2& h, const Vec3& p, double dt) {
  const Matrix2 rho = density_from_probs(ProbTriple::from_vec(p));
  const Vec3 fwd = probs_from_density_unchecked(heisenberg_exact(rho, h, dt)).vec();
  const Vec3 bwd = probs_from_density_unchecked(heisenberg_exact(rho, h, -dt)).vec();
  return (0.5 / dt) * (fwd - bwd);
}

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Point of the ball drawn from a fixed-seed stream.
Vec3 probe_point(std::mt19937_64& rng) {
  const double z = 2.0 * unit_uniform(rng) - 1.0;
  const double az = 2.0 * 3.141592653589793 * unit_uniform(rng);
  const double r = 0.5 * std::cbrt(unit_uniform(rng));
  const double s = std::sqrt(1.0 - z * z);
  return center_vec() + r * Vec3{s * std::cos(az), s * std::sin(az), z};
}

// sin(s)/s, (1 - cos s)/s^2, (s - sin s)/s^3 stable near s = 0.
struct PropagatorCoefficients {
  double f1, f2, f3;
};

PropagatorCoefficients coefficients(double omega, double t) {
  const double s = omega * t;
  const double half = 0.5 * s;
  const double sinc_half = (std::fabs(half) < 1e-8) ? 1.0 : std::sin(half) / half;
  const double sinc = (std::fabs(s) < 1e-8) ? 1.0 - s * s / 6.0 : std::sin(s) / s;
  double g3;
  if (std::fabs(s) < 1e-2) {
    const double s2 = s * s;
    g3 = 1.0 / 6.0 - s2 / 120.0 + s2 * s2 / 5040.0;
  } else {
    g3 = (s - std::sin(s)) / (s * s * s);
  }
  return {t * sinc, 0.5 * t * t * sinc_half * sinc_half, t * t * t * g3};
}

}  // namespace

KineticSystem closed_form_kinetic(const Matrix2& h, double x) {
  KineticSystem sys;
  sys.h = h;
  sys.x = x;
  const double h11 = h.m11.real();
  const double h22 = h.m22.real();
  const Complex h21 = h.m21;
  sys.l = {{{0.0, h11 - h22, -2.0 * h21.imag()},
            {h22 - h11, 0.0, 2.0 * h21.real()},
            {2.0 * h21.imag(), -2.0 * h21.real(), 0.0}}};
  sys.c = {h21.imag() + 0.5 * (h22 - h11), -h21.real() + 0.5 * (h11 - h22),
           2.0 * (kGamma * h.m12).imag()};
  return sys;
}

KineticSystem fitted_kinetic(const Matrix2& h, double x) {
  if (!is_hermitian(h)) {
    throw DomainError("build_kinetic: Hamiltonian is not Hermitian");
  }
  const double dt = 1e-6 / generator_scale(h);
  KineticSystem sys;
  sys.h = h;
  sys.x = x;
  const Vec3 p0 = center_vec();
  const Vec3 d0 = flow_derivative(h, p0, dt);
  for (int k = 0; k < 3; ++k) {
    Vec3 probe = p0;
    probe[k] += 0.5;
    const Vec3 col = 2.0 * (flow_derivative(h, probe, dt) - d0);
    for (int j = 0; j < 3; ++j) sys.l[j][k] = col[j];
  }
  // Antisymmetrize: the exact generator is a rotation.
  for (int j = 0; j < 3; ++j) {
    sys.l[j][j] = 0.0;
    for (int k = j + 1; k < 3; ++k) {
      const double v = 0.5 * (sys.l[j][k] - sys.l[k][j]);
      sys.l[j][k] = v;
      sys.l[k][j] = -v;
    }
  }
  sys.c = d0 - sys.l * p0;
  return sys;
}

std::vector<FormulaCheck> compare_kinetic_formulas(const KineticSystem& closed,
                                                   const KineticSystem& fitted,
                                                   double tol) {
  std::vector<FormulaCheck> checks;
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      const double a = closed.l[j][k];
      const double b = fitted.l[j][k];
      checks.push_back({fmt::format("L{}{}", j + 1, k + 1), a, b,
                        std::fabs(a - b) <= tol});
    }
  }
  for (int j = 0; j < 3; ++j) {
    const double a = closed.c[j];
    const double b = fitted.c[j];
    checks.push_back(
        {fmt::format("C{}", j + 1), a, b, std::fabs(a - b) <= tol});
  }
  return checks;
}

KineticSystem build_kinetic(const Matrix2& h, double x) {
  if (!is_hermitian(h)) {
    throw DomainError("build_kinetic: Hamiltonian is not Hermitian");
  }
  KineticSystem sys = closed_form_kinetic(h, x);
  const KineticSystem fit = fitted_kinetic(h, x);
  const double tol = kKineticCheckTol * generator_scale(h);

  sys.checks = compare_kinetic_formulas(sys, fit, tol);

  std::mt19937_64 rng(0x5eed'1234'abcdULL);
  const double dt = 1e-6 / generator_scale(h);
  for (int n = 0; n < 5; ++n) {
    const Vec3 p = probe_point(rng);
    const Vec3 predicted = sys.l * p + sys.c;
    const Vec3 observed = flow_derivative(h, p, dt);
    const double gap = max_abs_diff(predicted, observed);
    sys.checks.push_back({fmt::format("dp/dt@probe{}", n + 1), gap, 0.0,
                          gap <= tol});
  }

  const bool ok = std::all_of(sys.checks.begin(), sys.checks.end(),
                              [](const FormulaCheck& c) { return c.matches; });
  if (!ok) {
    sys.l = fit.l;
    sys.c = fit.c;
    sys.oracle_override = true;
  }
  return sys;
}

ProbTriple evolve(const KineticSystem& sys, const ProbTriple& p0, double t) {
  if (!is_physical(p0)) {
    throw DomainError("evolve: initial triple is unphysical");
  }
  if (!std::isfinite(t)) {
    throw DomainError("evolve: non-finite time");
  }
  const Mat3& l = sys.l;
  const double omega =
      std::sqrt(l[0][1] * l[0][1] + l[0][2] * l[0][2] + l[1][2] * l[1][2]);
  const auto [f1, f2, f3] = coefficients(omega, t);
  const Mat3 l2 = l * l;
  // exp(Lt) = I + f1 L + f2 L^2,  int_0^t exp(Ls) ds = t I + f2 L + f3 L^2
  const Vec3 p = p0.vec();
  const Vec3 rotated = p + f1 * (l * p) + f2 * (l2 * p);
  const Vec3 drift = t * sys.c + f2 * (l * sys.c) + f3 * (l2 * sys.c);
  return ProbTriple::from_vec(rotated + drift);
}

Matrix2 evolve_observable(const Matrix2& a0, const Matrix2& h, double x,
                          double t) {
  const Matrix2 rho0 = rho_of_x(a0, x);
  const KineticSystem sys = build_kinetic(h, x);
  const ProbTriple pt = evolve(sys, probs_from_density_unchecked(rho0), t);
  const Matrix2 rho_t = density_from_probs(pt);
  const double scale = a0.trace().real() + 2.0 * x;
  return scale * rho_t - x * Matrix2::identity();
}

Trajectory sample_trajectory(const KineticSystem& sys, const ProbTriple& p0,
                             double t_end, int steps) {
  if (steps < 1) {
    throw DomainError("sample_trajectory: steps must be >= 1");
  }
  if (!(std::isfinite(t_end) && t_end > 0.0)) {
    throw DomainError("sample_trajectory: t_end must be finite and positive");
  }
  Trajectory traj;
  traj.x = sys.x;
  traj.times.reserve(steps + 1);
  traj.probs.reserve(steps + 1);
  for (int k = 0; k <= steps; ++k) {
    const double t = t_end * static_cast<double>(k) / steps;
    const ProbTriple p = evolve(sys, p0, t);
    if (!is_physical(p, kTrajectoryPhysicalTol)) {
      throw DomainError(fmt::format(
          "sample_trajectory: point at t = {:.17g} left the ball", t));
    }
    traj.times.push_back(t);
    traj.probs.push_back(p);
  }
  return traj;
}

}  // namespace qprob
