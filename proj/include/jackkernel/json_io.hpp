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

#include "json.hpp"

#include "jackkernel/pspoly.hpp"
#include "jackkernel/scalar.hpp"
#include "jackkernel/verify.hpp"

namespace jk {

using Json = nlohmann::ordered_json;

/*
 * Serialization contract: deterministic, byte-stable output.  Coefficients
 * are rendered as {"num": "<integer-coefficient polynomial string>",
 * "den": "<...>"} with decimal integer strings (no floats anywhere);
 * partition keys appear in the canonical order (weight, then largest part
 * first); multivariate polynomials list exponent vectors over their
 * declared symbol list in graded-lex order.
 */
Json coeff_json(const Rational& q);
Json coeff_json(const RatFunc& f);
Json coeff_json(const UniPoly& p); // polynomial over a single symbol (num/"1")

// Boundary type dispatcher: univariate rings use the num/den pair, the
// multivariate ring uses its exponent-vector schema.
Json scalar_json(const Scalar& v);

Json partition_json(const Partition& lam);

template <class R>
Json pspoly_json(const PSPoly<R>& f) {
    Json terms = Json::array();
    for (const auto& [lam, c] : f.terms()) {
        Json t;
        t["partition"] = partition_json(lam);
        t["coeff"] = coeff_json(c);
        terms.push_back(std::move(t));
    }
    Json out;
    out["basis"] = "powersum";
    out["terms"] = std::move(terms);
    return out;
}

Json multipoly_json(const MultiPolyLoc& p);
Json suite_report_json(const SuiteReport& rep);

// Canonical dump: two-space indentation, trailing newline.
std::string dump_json(const Json& j);

} // namespace jk
