// Copyright 2026 The nashax Authors
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
#include <vector>

#include <json.hpp>

#include "nashax/enumerate.hpp"

namespace nashax {

struct SuiteOptions {
  std::size_t jobs = 1;
  std::size_t budget = kDefaultBudget;
};

struct SuiteRow {
  std::string section;
  std::string item;
  std::string expected;
  std::string observed;
  bool ok = false;
};

struct SuiteReport {
  std::vector<SuiteRow> rows;
  // One verdict record per axiom check, in execution order.
  nlohmann::ordered_json records = nlohmann::ordered_json::array();

  bool all_ok() const;
  std::size_t failures() const;
  // Aligned text table followed by a one-line total. Byte-stable.
  std::string table() const;
};

// Runs every example, the forward theorem on the named classes, both
// constructions and the one-player lemma. Output does not depend on jobs.
SuiteReport run_suite(const SuiteOptions& options = {});

}  // namespace nashax
