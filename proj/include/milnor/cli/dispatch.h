// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MILNOR_CLI_DISPATCH_H_
#define MILNOR_CLI_DISPATCH_H_

#include <iosfwd>

namespace milnor {

// Exit codes: 0 success, 2 input error, 1 internal invariant failure.
enum ExitCode { kExitOk = 0, kExitInternal = 1, kExitInput = 2 };

// Runs one command line. The JSON report goes to `out` (or --out), usage and
// error text to `err`.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace milnor

#endif  // MILNOR_CLI_DISPATCH_H_
