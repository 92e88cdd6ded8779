/*
   Copyright 2026 The jackkernel authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#pragma once

#include <string>
#include <vector>

namespace jk {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // counterexample or context when failing
};

struct SuiteReport {
    std::string suite;
    std::string description;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Named verification suites.  max_size = 0 selects each suite's default
// bound (the documented desk-scale size); smaller values shrink the run.
SuiteReport run_suite(const std::string& name, unsigned max_size = 0);

// Suite names in canonical order ("all" is accepted by run_suite as well).
std::vector<std::string> suite_names();

} // namespace jk
