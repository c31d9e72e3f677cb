// Copyright 2026 The hyperideal Authors
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

#ifndef HYPERIDEAL_CLI_HPP_
#define HYPERIDEAL_CLI_HPP_

#include <ostream>

namespace hyperideal::cli {

// Runs one command line. Reports go to `out` in a single write, diagnostics
// to `err`. Exit codes: 0 success, 1 counterexample or --expect mismatch,
// 2 invalid input or axiom failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperideal::cli

#endif  // HYPERIDEAL_CLI_HPP_
