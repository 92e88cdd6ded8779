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
#include "jackkernel/json_io.hpp"

namespace jk {

Json coeff_json(const Rational& q) {
    Json out;
    out["num"] = q.num().get_str();
    out["den"] = q.den().get_str();
    return out;
}

Json coeff_json(const RatFunc& f) {
    UniPoly num, den;
    f.integer_form(num, den);
    Json out;
    out["num"] = num.to_string();
    out["den"] = den.to_string();
    return out;
}

Json coeff_json(const UniPoly& p) {
    // Values of Z[gamma] and friends: always polynomial, denominator one.
    Json out;
    out["num"] = p.to_string();
    out["den"] = "1";
    return out;
}

Json partition_json(const Partition& lam) {
    Json out = Json::array();
    for (unsigned p : lam.parts()) out.push_back(p);
    return out;
}

Json multipoly_json(const MultiPolyLoc& p) {
    Json out;
    Json syms = Json::array();
    if (p.symbols())
        for (const std::string& s : *p.symbols()) syms.push_back(s);
    out["symbols"] = std::move(syms);
    out["denominator_power"] = p.loc_exp(); // denominator is (1+b)^power
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        Json expo = Json::array();
        for (unsigned x : e) expo.push_back(x);
        t["exponents"] = std::move(expo);
        t["coeff"] = coeff_json(c);
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    return out;
}

Json scalar_json(const Scalar& v) {
    if (std::holds_alternative<Rational>(v)) return coeff_json(std::get<Rational>(v));
    if (std::holds_alternative<RatFunc>(v)) return coeff_json(std::get<RatFunc>(v));
    return multipoly_json(std::get<MultiPolyLoc>(v));
}

Json suite_report_json(const SuiteReport& rep) {
    Json out;
    out["suite"] = rep.suite;
    out["description"] = rep.description;
    out["pass"] = rep.all_pass();
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        Json j;
        j["name"] = c.name;
        j["pass"] = c.pass;
        if (!c.detail.empty()) j["detail"] = c.detail;
        checks.push_back(std::move(j));
    }
    out["checks"] = std::move(checks);
    return out;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

} // namespace jk
