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

#include <cstdio>
#include <cstdlib>

#include "milnor/cli/acceptance.h"

int main(int argc, char** argv) {
  std::string dir = MILNOR_FIXTURE_DIR;
  if (const char* env = std::getenv("MILNOR_FIXTURES")) dir = env;
  if (argc > 1) dir = argv[1];
  bool ok = true;
  for (const auto& r : milnor::run_acceptance(dir)) {
    std::printf("criterion %d: %s  %s (%.2f s)\n", r.id, r.pass ? "PASS" : "FAIL", r.title.c_str(),
                r.seconds);
    for (const auto& f : r.failures) std::printf("    %s\n", f.c_str());
    ok = ok && r.pass;
  }
  return ok ? 0 : 1;
}
