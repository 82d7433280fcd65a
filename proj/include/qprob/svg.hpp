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
#include <string_view>

#include "qprob/qubit.hpp"

namespace qprob::svg {

/// Reference triangle with the inscribed triangle A1 A2 A3 of `p`.
std::string triangle_figure(const ProbTriple& p, std::string_view tag,
                            std::string_view caption);

/// The three squares erected outward on the chords of the inscribed triangle.
std::string malevich_squares_figure(const ProbTriple& p, std::string_view tag,
                                    std::string_view caption);

/// Two inscribed triangles side by side.
std::string triangle_pair_figure(const ProbTriple& left, std::string_view left_tag,
                                 const ProbTriple& right,
                                 std::string_view right_tag,
                                 std::string_view caption);

}  // namespace qprob::svg
