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

#include "qprob/suprematism.hpp"

#include <cmath>

#include <fmt/format.h>

#include "qprob/errors.hpp"

namespace qprob {
namespace {

void require_unit_cube(const ProbTriple& p, const char* where) {
  for (double v : {p.p1, p.p2, p.p3}) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw DomainError(
          fmt::format("{}: probability {:.17g} outside [0, 1]", where, v));
    }
  }
}

}  // namespace

std::array<Point2, 3> reference_triangle() {
  return {Point2{0.0, 0.0}, Point2{kReferenceSide, 0.0},
          Point2{0.5 * kReferenceSide, 0.5 * std::sqrt(6.0)}};
}

TrianglePicture triangle_picture(const ProbTriple& p) {
  require_unit_cube(p, "triangle_picture");
  const auto ref = reference_triangle();
  const std::array<double, 3> t{p.p1, p.p2, p.p3};
  TrianglePicture pic;
  for (int k = 0; k < 3; ++k) {
    const Point2& from = ref[k];
    const Point2& to = ref[(k + 1) % 3];
    pic.vertices[k] = {from.x + t[k] * (to.x - from.x),
                       from.y + t[k] * (to.y - from.y)};
  }
  pic.total_area = 0;
  for (int k = 0; k < 3; ++k) {
    const Point2& a = pic.vertices[k];
    const Point2& b = pic.vertices[(k + 1) % 3];
    const double sq = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
    pic.square_areas[k] = sq;
    pic.side_lengths[k] = std::sqrt(sq);
    pic.total_area += sq;
  }
  return pic;
}

double area_sum(const ProbTriple& p) {
  require_unit_cube(p, "area_sum");
  const double p1 = p.p1, p2 = p.p2, p3 = p.p3;
  return 2.0 * (3.0 * (1.0 - p1 - p2 - p3) + 2.0 * p1 * p1 + 2.0 * p2 * p2 +
                2.0 * p3 * p3 + p1 * p2 + p2 * p3 + p3 * p1);
}

std::array<double, 3> side_chord_lengths(const ProbTriple& p) {
  return triangle_picture(p).side_lengths;
}

AreaPair observable_areas(const ObservableProbRep& rep) {
  return {area_sum(rep.p_a), area_sum(rep.p_b)};
}

}  // namespace qprob
