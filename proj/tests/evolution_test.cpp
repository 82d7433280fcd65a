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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "qprob/errors.hpp"
#include "qprob/observable.hpp"
#include "test_support.hpp"

using namespace qprob;
using qprob::oracle::Rng;

namespace {

constexpr double kPi = std::numbers::pi;

// RK4 on dp/dt = L p + C; independent of the closed-form propagator.
ProbTriple rk4_kinetic(const KineticSystem& sys, ProbTriple p0, double t, double step) {
  auto f = [&](const Vec3& p) { return sys.l * p + sys.c; };
  const int n = static_cast<int>(std::ceil(std::fabs(t) / step));
  const double dt = n ? t / n : 0.0;
  Vec3 p = p0.vec();
  for (int k = 0; k < n; ++k) {
    const Vec3 k1 = f(p);
    const Vec3 k2 = f(p + (0.5 * dt) * k1);
    const Vec3 k3 = f(p + (0.5 * dt) * k2);
    const Vec3 k4 = f(p + dt * k3);
    p = p + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return ProbTriple::from_vec(p);
}

bool all_match(const KineticSystem& sys) {
  for (const auto& c : sys.checks)
    if (!c.matches) return false;
  return true;
}

}  // namespace

TEST(BuildKinetic, Identity) {
  const KineticSystem sys = build_kinetic(Matrix2::identity(), 0);
  EXPECT_LE(max_abs_diff(sys.l, zero3()), 0);
  EXPECT_LE(max_abs_diff(sys.c, Vec3{}), 0);
  EXPECT_TRUE(all_match(sys));
  EXPECT_FALSE(sys.oracle_override);
}

TEST(BuildKinetic, SigmaZ) {
  const KineticSystem sys = build_kinetic(pauli::sigma_z(), 2);
  const Mat3 want{{{0, 2, 0}, {-2, 0, 0}, {0, 0, 0}}};
  EXPECT_LE(max_abs_diff(sys.l, want), 0);
  EXPECT_LE(max_abs_diff(sys.c, Vec3{-1, 1, 0}), 0);
  EXPECT_TRUE(all_match(sys));
  const KineticSystem fit = fitted_kinetic(pauli::sigma_z(), 2);
  EXPECT_LE(max_abs_diff(fit.c, Vec3{-1, 1, 0}), 1e-8);
}

TEST(BuildKinetic, SigmaX) {
  const KineticSystem sys = build_kinetic(pauli::sigma_x(), 2);
  const Mat3 want{{{0, 0, 0}, {0, 0, 2}, {0, -2, 0}}};
  EXPECT_LE(max_abs_diff(sys.l, want), 0);
  // C = -L p0
  EXPECT_LE(max_abs_diff(sys.c, Vec3{0, -1, 1}), 0);
  EXPECT_TRUE(all_match(sys));
}

TEST(BuildKinetic, RejectsNonHermitian) {
  EXPECT_THROW(build_kinetic(Matrix2{0.0, 1.0, 0.0, 0.0}, 0), DomainError);
}

TEST(BuildKinetic, ClosedFormMatchesFitOnRandomHamiltonians) {
  Rng rng(71);
  for (int n = 0; n < 100; ++n) {
    const Matrix2 h = oracle::random_hermitian(rng);
    const KineticSystem sys = build_kinetic(h, 1.0);
    EXPECT_TRUE(all_match(sys));
    EXPECT_FALSE(sys.oracle_override);
    EXPECT_LE(max_abs_diff(sys.l, transpose(-1.0 * sys.l)), 0);
    // Centre is a fixed point.
    EXPECT_LE(max_abs_diff(sys.l * center_vec() + sys.c, Vec3{}), 1e-15);
  }
}

TEST(BuildKinetic, OverrideWhenClosedFormDisagrees) {
  // A fitted system with a tampered drift must not match the flow.
  const Matrix2 h = pauli::sigma_x();
  KineticSystem wrong = closed_form_kinetic(h, 0);
  wrong.c[2] += 0.1;
  const KineticSystem fit = fitted_kinetic(h, 0);
  EXPECT_GT(std::fabs(wrong.c[2] - fit.c[2]), 1e-4);
  EXPECT_LE(max_abs_diff(fit.c, closed_form_kinetic(h, 0).c), 1e-8);
  EXPECT_LE(max_abs_diff(fit.l, closed_form_kinetic(h, 0).l), 1e-8);
}

TEST(Evolve, ZeroTime) {
  Rng rng(72);
  const KineticSystem sys = build_kinetic(oracle::random_hermitian(rng), 0);
  const ProbTriple p0 = oracle::random_ball_point(rng);
  EXPECT_LE(max_abs_diff(evolve(sys, p0, 0).vec(), p0.vec()), 1e-16);
}

TEST(Evolve, SigmaZPreservesZPopulation) {
  const KineticSystem sys = build_kinetic(pauli::sigma_z(), 0);
  Rng rng(73);
  for (int n = 0; n < 50; ++n) {
    const ProbTriple p0 = oracle::random_ball_point(rng);
    const double t = oracle::uniform(rng, -10, 10);
    EXPECT_NEAR(evolve(sys, p0, t).p3, p0.p3, 1e-14);
  }
}

TEST(Evolve, SigmaZRotatesXEigenstate) {
  const KineticSystem sys = build_kinetic(pauli::sigma_z(), 0);
  const ProbTriple p0{1.0, 0.5, 0.5};
  const double t = kPi / 2;
  const ProbTriple got = evolve(sys, p0, t);
  const ProbTriple want = probs_from_density(
      heisenberg_exact(density_from_probs(p0), pauli::sigma_z(), t));
  EXPECT_LE(max_abs_diff(got.vec(), want.vec()), 1e-14);
  // Half a revolution of the p1-p2 rotation at frequency 2.
  EXPECT_NEAR(got.p1, 0.0, 1e-14);
  EXPECT_NEAR(got.p2, 0.5, 1e-14);
}

TEST(Evolve, MatchesRk4) {
  Rng rng(74);
  for (int n = 0; n < 20; ++n) {
    const KineticSystem sys = build_kinetic(oracle::random_hermitian(rng, -2, 2), 0);
    const ProbTriple p0 = oracle::random_ball_point(rng);
    const double t = oracle::uniform(rng, -2, 2);
    EXPECT_LE(max_abs_diff(evolve(sys, p0, t).vec(), rk4_kinetic(sys, p0, t, 1e-4).vec()),
              1e-10);
  }
}

TEST(Evolve, SmallGeneratorLimit) {
  const Matrix2 h{0.0, Complex(1e-12, 0), Complex(1e-12, 0), 0.0};
  const KineticSystem sys = build_kinetic(h, 0);
  const ProbTriple p0{0.8, 0.4, 0.6};
  const ProbTriple want = probs_from_density(heisenberg_exact(density_from_probs(p0), h, 3.0));
  EXPECT_LE(max_abs_diff(evolve(sys, p0, 3.0).vec(), want.vec()), 1e-15);
}

TEST(Evolve, RejectsUnphysical) {
  const KineticSystem sys = build_kinetic(pauli::sigma_z(), 0);
  EXPECT_THROW(evolve(sys, {1, 1, 1}, 1.0), DomainError);
}

TEST(Evolve, CommutesWithHeisenbergThroughRhoMap) {
  Rng rng(75);
  for (int n = 0; n < 300; ++n) {
    const Matrix2 a0 = oracle::random_hermitian(rng);
    const Matrix2 h = oracle::random_hermitian(rng);
    const double x = admissible_lower_bound(a0) + oracle::uniform(rng, 0.01, 5);
    const double t = oracle::uniform(rng, -5, 5);
    const ProbTriple lhs = probs_from_density(rho_of_x(heisenberg_exact(a0, h, t), x));
    const ProbTriple rhs =
        evolve(build_kinetic(h, x), probs_from_density(rho_of_x(a0, x)), t);
    EXPECT_LE(max_abs_diff(lhs.vec(), rhs.vec()), 1e-9);
  }
}

TEST(EvolveObservable, Examples) {
  Rng rng(76);
  const Matrix2 a0 = oracle::random_hermitian(rng);
  const double x = default_shifts(a0).a;
  EXPECT_LE(max_abs_diff(evolve_observable(a0, pauli::sigma_z(), x, 0), a0), 1e-14);

  for (double t : {0.0, 0.3, kPi / 4, 2.0, -7.0}) {
    const Matrix2 at = evolve_observable(pauli::sigma_x(), pauli::sigma_z(), 2, t);
    EXPECT_NEAR(at.trace().real(), 0.0, 1e-15);
  }
  const Matrix2 quarter = evolve_observable(pauli::sigma_x(), pauli::sigma_z(), 2, kPi / 4);
  const Eigenvalues ev = eigenvalues_hermitian(quarter);
  EXPECT_NEAR(ev.min, -1, 1e-14);
  EXPECT_NEAR(ev.max, 1, 1e-14);
  // exp(i sz pi/4) sx exp(-i sz pi/4) = -sy
  EXPECT_LE(max_abs_diff(quarter, -1.0 * pauli::sigma_y()), 1e-14);
}

TEST(EvolveObservable, MatchesExactAndConservesSpectrum) {
  Rng rng(77);
  for (int n = 0; n < 300; ++n) {
    const Matrix2 a0 = oracle::random_hermitian(rng);
    const Matrix2 h = oracle::random_hermitian(rng);
    const double x = admissible_lower_bound(a0) + oracle::uniform(rng, 0.01, 5);
    const double t = oracle::uniform(rng, -5, 5);
    const Matrix2 at = evolve_observable(a0, h, x, t);
    EXPECT_LE(max_abs_diff(at, heisenberg_exact(a0, h, t)), 1e-9);
    const Eigenvalues e0 = eigenvalues_hermitian(a0);
    const Eigenvalues et = eigenvalues_hermitian(at);
    EXPECT_NEAR(et.min, e0.min, 1e-9);
    EXPECT_NEAR(et.max, e0.max, 1e-9);
    EXPECT_NEAR(at.trace().real(), a0.trace().real(), 1e-12);
  }
}

TEST(EvolveObservable, InadmissibleShift) {
  EXPECT_THROW(evolve_observable(pauli::sigma_x(), pauli::sigma_z(), 0.5, 1.0), DomainError);
}

TEST(Trajectory, ConstantForTrivialGenerator) {
  const KineticSystem sys = build_kinetic(Matrix2::identity(), 0);
  const ProbTriple p0{0.7, 0.4, 0.55};
  const Trajectory traj = sample_trajectory(sys, p0, 3.0, 30);
  ASSERT_EQ(traj.times.size(), 31u);
  for (const auto& p : traj.probs) EXPECT_EQ(p, p0);
}

TEST(Trajectory, SigmaZPeriodIsPi) {
  const KineticSystem sys = build_kinetic(pauli::sigma_z(), 0);
  const ProbTriple p0{0.9, 0.3, 0.6};
  ASSERT_TRUE(is_physical(p0));
  const Trajectory traj = sample_trajectory(sys, p0, kPi, 8);
  EXPECT_LE(max_abs_diff(traj.probs.back().vec(), traj.probs.front().vec()), 1e-14);
  EXPECT_GT(max_abs_diff(traj.probs[4].vec(), p0.vec()), 0.1);
}

TEST(Trajectory, StepCountIndependent) {
  Rng rng(78);
  const KineticSystem sys = build_kinetic(oracle::random_hermitian(rng), 0);
  const ProbTriple p0 = oracle::random_ball_point(rng);
  const Trajectory fine = sample_trajectory(sys, p0, 2.0, 1000);
  const Trajectory coarse = sample_trajectory(sys, p0, 2.0, 10);
  for (int k = 0; k <= 10; ++k) {
    EXPECT_NEAR(fine.times[100 * k], coarse.times[k], 1e-15);
    EXPECT_LE(max_abs_diff(fine.probs[100 * k].vec(), coarse.probs[k].vec()), 1e-12);
  }
}

TEST(Trajectory, StaysInBallAndTimesIncrease) {
  Rng rng(79);
  for (int n = 0; n < 20; ++n) {
    const KineticSystem sys = build_kinetic(oracle::random_hermitian(rng), 0);
    const Trajectory traj = sample_trajectory(sys, oracle::random_pure_point(rng), 10.0, 200);
    for (std::size_t k = 0; k < traj.probs.size(); ++k) {
      EXPECT_GE(check_ball(traj.probs[k]), -1e-10);
      if (k) EXPECT_GT(traj.times[k], traj.times[k - 1]);
    }
  }
}

TEST(Trajectory, Errors) {
  const KineticSystem sys = build_kinetic(pauli::sigma_z(), 0);
  EXPECT_THROW(sample_trajectory(sys, ProbTriple::center(), 1.0, 0), DomainError);
  EXPECT_THROW(sample_trajectory(sys, ProbTriple::center(), -1.0, 10), DomainError);
  EXPECT_THROW(sample_trajectory(sys, ProbTriple::center(), INFINITY, 10), DomainError);
}
