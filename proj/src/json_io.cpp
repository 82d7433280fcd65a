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

#include "qprob/json_io.hpp"

#include <string>

namespace qprob::io {
namespace {

using nlohmann::json;

double number_at(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  const json& v = j.at(key);
  if (!v.is_number()) {
    throw ParseError(std::string("field \"") + key + "\" is not a number");
  }
  return v.get<double>();
}

Complex complex_at(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  const json& v = j.at(key);
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() ||
      !v[1].is_number()) {
    throw ParseError(std::string("field \"") + key +
                     "\" must be [re, im] or a number");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

// + 0.0 folds negative zeros.
json pair(Complex z) { return json::array({z.real() + 0.0, z.imag() + 0.0}); }

}  // namespace

json to_json(const Matrix2& m) {
  return {{"m11", pair(m.m11)},
          {"m12", pair(m.m12)},
          {"m21", pair(m.m21)},
          {"m22", pair(m.m22)}};
}

Matrix2 matrix_from_json(const json& j) {
  return {complex_at(j, "m11"), complex_at(j, "m12"), complex_at(j, "m21"),
          complex_at(j, "m22")};
}

json to_json(const ProbTriple& p) {
  return {{"p1", p.p1}, {"p2", p.p2}, {"p3", p.p3}};
}

ProbTriple triple_from_json(const json& j) {
  return {number_at(j, "p1"), number_at(j, "p2"), number_at(j, "p3")};
}

json to_json(const ObservableProbRep& rep) {
  return {{"a", rep.a},
          {"b", rep.b},
          {"P_a", to_json(rep.p_a)},
          {"P_b", to_json(rep.p_b)}};
}

ObservableProbRep rep_from_json(const json& j) {
  if (!j.is_object() || !j.contains("P_a") || !j.contains("P_b")) {
    throw ParseError("observable representation needs \"P_a\" and \"P_b\"");
  }
  return {number_at(j, "a"), number_at(j, "b"), triple_from_json(j.at("P_a")),
          triple_from_json(j.at("P_b"))};
}

bool looks_like_matrix(const json& j) {
  return j.is_object() && j.contains("m11");
}
bool looks_like_triple(const json& j) {
  return j.is_object() && j.contains("p1");
}
bool looks_like_rep(const json& j) {
  return j.is_object() && j.contains("P_a");
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace qprob::io
