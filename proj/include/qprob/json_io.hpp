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

#include <stdexcept>

#include <json.hpp>

#include "qprob/matrix2.hpp"
#include "qprob/observable.hpp"
#include "qprob/qubit.hpp"

namespace qprob::io {

/// Malformed or incomplete input document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"m11": [re, im], "m12": [re, im], "m21": [re, im], "m22": [re, im]}
nlohmann::json to_json(const Matrix2& m);
Matrix2 matrix_from_json(const nlohmann::json& j);

/// {"p1": .., "p2": .., "p3": ..}; optional "x" and "label" are ignored here.
nlohmann::json to_json(const ProbTriple& p);
ProbTriple triple_from_json(const nlohmann::json& j);

/// {"a": .., "b": .., "P_a": {...}, "P_b": {...}}
nlohmann::json to_json(const ObservableProbRep& rep);
ObservableProbRep rep_from_json(const nlohmann::json& j);

bool looks_like_matrix(const nlohmann::json& j);
bool looks_like_triple(const nlohmann::json& j);
bool looks_like_rep(const nlohmann::json& j);

nlohmann::json parse_document(std::string_view text);

}  // namespace qprob::io
