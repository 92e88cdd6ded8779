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

// Acceptance suite: runs every verification suite at its full documented
// size and prints one line per criterion.  All identities are exact, so a
// criterion passes only on literal equality throughout.

#include <chrono>
#include <cstdio>

#include "jackkernel/verify.hpp"

int main() {
    using Clock = std::chrono::steady_clock;
    struct Criterion {
        const char* label;
        const char* suite;
    };
    const Criterion criteria[] = {
        {"criterion 1 (jack construction, |lambda| <= 6)", "jack"},
        {"criterion 2 (alpha = 1 oracle, |lambda| <= 5)", "young"},
        {"criterion 3 (character consistency, sizes <= 4)", "characters"},
        {"criterion 4 (vanishing past the size budget)", "vanishing"},
        {"criterion 5 (positivity + integrality, |mu| <= 5, k <= 2)", "lassalle"},
        {"criterion 6 (shifted symmetry + coordinate invariance)", "symmetry"},
        {"criterion 7 (band-operator eigenvalues, |lambda| <= 5)", "nazarov"},
        {"criterion 8 (ribbon expansions, sum of lengths <= 7)", "ribbon"},
        {"criterion 9 (integrality of character/moment transitions)", "integrality"},
        {"criterion 10 (commutation suites to order 7)", "commutation"},
        {"criterion 11 (two-alphabet kernel to order 4)", "kernel"},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        auto t0 = Clock::now();
        jk::SuiteReport rep = jk::run_suite(c.suite);
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        unsigned passed = 0;
        for (const auto& check : rep.checks) passed += check.pass ? 1 : 0;
        bool ok = rep.all_pass();
        std::printf("%s %s: %u/%zu checks (%.1fs)\n", ok ? "PASS" : "FAIL", c.label, passed,
                    rep.checks.size(), secs);
        if (!ok) {
            ++failures;
            for (const auto& check : rep.checks)
                if (!check.pass)
                    std::printf("       failing: %s %s\n", check.name.c_str(), check.detail.c_str());
        }
        std::fflush(stdout);
    }
    if (failures) std::printf("ACCEPTANCE: %d criterion(s) failed\n", failures);
    else std::printf("ACCEPTANCE: all criteria passed\n");
    return failures == 0 ? 0 : 1;
}
