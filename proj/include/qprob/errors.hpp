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
#include <string>

namespace qprob {

/// Violated mathematical precondition: non-Hermitian input, unphysical
/// triple, inadmissible shift parameter and so on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// a == b in an observable encoding.
class DegenerateEncodingError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Two probability triples that cannot come from a single observable.
class InconsistentRepresentationError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace qprob
