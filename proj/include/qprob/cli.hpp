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

#include <iosfwd>
#include <string>
#include <vector>

namespace qprob::cli {

enum ExitCode : int {
  kOk = 0,
  kParse = 2,
  kDomain = 3,
  kIo = 4,
};

/// Runs `qprob <args...>`. `args` excludes the program name. Input documents
/// given as `--in -` are read from `in`; `--out -` (the default) writes to
/// `out`. Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace qprob::cli
