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

#include "qprob/observable.hpp"
#include "qprob/qubit.hpp"

namespace qprob {

struct Point2 {
  double x = 0;
  double y = 0;
};

/// Side length of the reference equilateral triangle.
inline constexpr double kReferenceSide = 1.4142135623730951;  // sqrt(2)

/// Reference vertices B1 = (0, 0), B2 = (sqrt2, 0), B3 = (sqrt2/2, sqrt6/2).
std::array<Point2, 3> reference_triangle();

/// Vertices A_k = B_k + p_k (B_{k+1} - B_k) on the reference triangle, the
/// chords l_k = |A_k A_{k+1}| and the squares built on them.
struct TrianglePicture {
  std::array<Point2, 3> vertices;
  std::array<double, 3> side_lengths;
  std::array<double, 3> square_areas;
  double total_area = 0;
};

/// Requires every p_k in [0, 1]; physicality is not required.
TrianglePicture triangle_picture(const ProbTriple& p);

/// Closed form 2[3(1 - p1 - p2 - p3) + 2(p1^2 + p2^2 + p3^2)
///             + p1 p2 + p2 p3 + p3 p1].
double area_sum(const ProbTriple& p);

std::array<double, 3> side_chord_lengths(const ProbTriple& p);

struct AreaPair {
  double s_a;
  double s_b;
};

AreaPair observable_areas(const ObservableProbRep& rep);

}  // namespace qprob
