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

#ifndef MILNOR_TESTS_TEST_UTIL_H_
#define MILNOR_TESTS_TEST_UTIL_H_

#include <fstream>
#include <string>

#include "json.hpp"

inline nlohmann::json load_fixture(const std::string& name) {
  std::ifstream in(std::string(MILNOR_FIXTURE_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  return nlohmann::json::parse(in);
}

#endif  // MILNOR_TESTS_TEST_UTIL_H_
