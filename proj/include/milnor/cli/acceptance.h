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

#ifndef MILNOR_CLI_ACCEPTANCE_H_
#define MILNOR_CLI_ACCEPTANCE_H_

#include <string>
#include <vector>

#include "json.hpp"

namespace milnor {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  double seconds = 0;
  double limit = 0;  // seconds
  std::vector<std::string> failures;
};

// The seven end-to-end checks, reading fixtures from fixture_dir.
std::vector<CriterionResult> run_acceptance(const std::string& fixture_dir);

nlohmann::json to_json(const CriterionResult& r);

}  // namespace milnor

#endif  // MILNOR_CLI_ACCEPTANCE_H_
