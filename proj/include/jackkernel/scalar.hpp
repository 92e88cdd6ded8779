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
#include <variant>

#include "jackkernel/multipoly.hpp"
#include "jackkernel/ratfunc.hpp"

namespace jk {

// Runtime-tagged coefficient value used at the API boundary (JSON export,
// CLI).  The heavy algebra is templated over the concrete ring types; this
// variant only unifies them where a dynamic ring is genuinely needed.
using Scalar = std::variant<Rational, RatFunc, MultiPolyLoc>;

enum class ScalarOp { add, sub, mul, div_exact, neg };

Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarOp op);

// Substitutes a named symbol by a rational value.  Understands the
// univariate rings (symbol must match) and the multivariate ring (symbol by
// name).  Poles are reported as Errc::pole, symbol mismatches as
// Errc::ring_mismatch.
Scalar substitute(const Scalar& a, const std::string& symbol, const Rational& value);

bool scalar_is_zero(const Scalar& a);
std::string scalar_to_string(const Scalar& a);

} // namespace jk
