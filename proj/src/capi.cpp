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
#include "jackkernel.h"

#include <cstdlib>
#include <cstring>
#include <optional>

#include "jackkernel/json_io.hpp"
#include "jackkernel/kernel.hpp"
#include "jackkernel/ribbon.hpp"

using namespace jk;

namespace {

struct Limits {
    unsigned max_weight = 6;     // |lambda| guard for CLI-facing inputs
    unsigned max_sum_lengths = 7; // sum of site lengths in expansions
    unsigned max_rects = 2;       // rectangle count for character output
};

} // namespace

struct jk_session {
    Limits limits;
    std::string last_error;
    std::optional<JackTable<RatFunc>> alpha_table;
    std::optional<JackTable<RatFunc>> sqrt_table;

    JackTable<RatFunc>& alpha() {
        if (!alpha_table) alpha_table.emplace(alpha_field());
        return *alpha_table;
    }
    JackTable<RatFunc>& sqrt() {
        if (!sqrt_table) sqrt_table.emplace(sqrt_field());
        return *sqrt_table;
    }
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int status_of(const Error& e) {
    switch (e.code()) {
    case Errc::parse: return JK_E_PARSE;
    case Errc::limit: return JK_E_LIMIT;
    case Errc::ring_mismatch:
    case Errc::pole:
    case Errc::inexact_division: return JK_E_RING;
    case Errc::internal_check: return JK_E_INTERNAL;
    }
    return JK_E_INTERNAL;
}

template <class F>
int guarded(jk_session* s, char** out, F&& body) {
    if (!s) return JK_E_USAGE;
    if (!out) {
        s->last_error = "null output pointer";
        return JK_E_USAGE;
    }
    *out = nullptr;
    s->last_error.clear();
    try {
        return body();
    } catch (const Error& e) {
        s->last_error = e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        s->last_error = e.what();
        return JK_E_INTERNAL;
    }
}

void check_weight(const jk_session* s, const Partition& lam) {
    if (lam.size() > s->limits.max_weight)
        fail(Errc::limit, "partition size " + std::to_string(lam.size()) + " exceeds the weight guard " +
                              std::to_string(s->limits.max_weight));
}

std::vector<unsigned> parse_lengths(const std::string& text) {
    std::vector<unsigned> lengths;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty()) fail(Errc::parse, "empty component in length list '" + text + "'");
        for (char ch : tok)
            if (ch < '0' || ch > '9') fail(Errc::parse, "malformed length list '" + text + "'");
        lengths.push_back(static_cast<unsigned>(std::stoul(tok)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (lengths.empty()) fail(Errc::parse, "empty length list");
    return lengths;
}

} // namespace

extern "C" {

JK_API jk_session* jk_open(void) {
    auto* s = new jk_session();
    if (const char* env = std::getenv("JACKKERNEL_MAX_WEIGHT")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) s->limits.max_weight = static_cast<unsigned>(v);
    }
    return s;
}

JK_API void jk_close(jk_session* s) { delete s; }

JK_API const char* jk_version(void) { return "0.1.0"; }

JK_API const char* jk_last_error(const jk_session* s) { return s ? s->last_error.c_str() : ""; }

JK_API void jk_free(char* buffer) { std::free(buffer); }

JK_API int jk_set_max_weight(jk_session* s, int max_weight) {
    if (!s || max_weight <= 0) return JK_E_USAGE;
    s->limits.max_weight = static_cast<unsigned>(max_weight);
    return JK_OK;
}

JK_API int jk_jack_json(jk_session* s, const char* lambda, const char* ring, char** out) {
    return guarded(s, out, [&]() -> int {
        if (!lambda || !ring) {
            s->last_error = "null argument";
            return JK_E_USAGE;
        }
        Partition lam = Partition::parse(lambda);
        check_weight(s, lam);
        std::string mode = ring;
        Json j;
        if (mode == "alpha" || mode.empty()) {
            j = pspoly_json(s->alpha().at(lam));
        } else if (mode == "sqrt") {
            j = pspoly_json(s->sqrt().at(lam));
        } else {
            Rational value = parse_rational(mode);
            JackTable<Rational> table(numeric_field(value));
            j = pspoly_json(table.at(lam));
        }
        *out = dup_string(dump_json(j));
        return JK_OK;
    });
}

JK_API int jk_character_json(jk_session* s, const char* mu, const char* lambda, char** out) {
    return guarded(s, out, [&]() -> int {
        if (!mu || !lambda) {
            s->last_error = "null argument";
            return JK_E_USAGE;
        }
        Partition m = Partition::parse(mu);
        Partition lam = Partition::parse(lambda);
        check_weight(s, lam);
        check_weight(s, m);
        RatFunc theta = jack_character(m, lam, s->alpha());
        RatFunc ch = normalized_character(m, lam, s->sqrt());
        Json j;
        j["mu"] = partition_json(m);
        j["lambda"] = partition_json(lam);
        j["theta"] = coeff_json(theta);
        j["ch"] = coeff_json(ch);
        *out = dup_string(dump_json(j));
        return JK_OK;
    });
}

JK_API int jk_stanley_json(jk_session* s, const char* mu, int rects, int with_audit, char** out) {
    return guarded(s, out, [&]() -> int {
        if (!mu) {
            s->last_error = "null argument";
            return JK_E_USAGE;
        }
        if (rects < 0 || static_cast<unsigned>(rects) > s->limits.max_rects)
            fail(Errc::limit, "rectangle count exceeds the guard " + std::to_string(s->limits.max_rects));
        Partition m = Partition::parse(mu);
        check_weight(s, m);
        unsigned k = static_cast<unsigned>(rects);
        MultiPolyLoc theta = stanley_character(m, k);
        Json j;
        j["mu"] = partition_json(m);
        j["rectangles"] = k;
        j["theta"] = multipoly_json(theta);
        if (with_audit) {
            PositivityReport audit = positivity_audit_of(m, k, theta);
            Json a;
            a["nonnegative"] = audit.nonnegative;
            a["integral"] = audit.integral;
            a["rewritten"] = multipoly_json(audit.rewritten);
            Json off = Json::array();
            for (const std::string& x : audit.offending) off.push_back(x);
            a["offending"] = std::move(off);
            j["audit"] = std::move(a);
        }
        *out = dup_string(dump_json(j));
        return JK_OK;
    });
}

JK_API int jk_moments_json(jk_session* s, const char* lambda, int lmax, const char* kind, char** out) {
    return guarded(s, out, [&]() -> int {
        if (!lambda || !kind) {
            s->last_error = "null argument";
            return JK_E_USAGE;
        }
        if (lmax < 0 || static_cast<unsigned>(lmax) > s->limits.max_sum_lengths + 2)
            fail(Errc::limit, "moment order exceeds the guard " +
                                  std::to_string(s->limits.max_sum_lengths + 2));
        Partition lam = Partition::parse(lambda);
        check_weight(s, lam);
        std::string mode = kind;
        unsigned order = static_cast<unsigned>(lmax);
        std::vector<RatFunc> m = alpha_moments(lam, order);
        std::vector<RatFunc> values;
        unsigned first_index = 0;
        if (mode == "moments") {
            values = m;
        } else if (mode == "boolean") {
            values = boolean_from_moments(m, order);
            first_index = 2;
        } else if (mode == "free") {
            values = free_from_moments(m, order);
            first_index = 2;
        } else {
            s->last_error = "unknown kind '" + mode + "' (moments|boolean|free)";
            return JK_E_USAGE;
        }
        Json j;
        j["lambda"] = partition_json(lam);
        j["kind"] = mode;
        j["first_index"] = first_index;
        Json vals = Json::array();
        for (unsigned l = first_index; l <= order; ++l) vals.push_back(coeff_json(values[l]));
        j["values"] = std::move(vals);
        *out = dup_string(dump_json(j));
        return JK_OK;
    });
}

JK_API int jk_expand_json(jk_session* s, const char* lengths, int moment_mode, char** out) {
    return guarded(s, out, [&]() -> int {
        if (!lengths) {
            s->last_error = "null argument";
            return JK_E_USAGE;
        }
        std::vector<unsigned> lens = parse_lengths(lengths);
        unsigned total = 0;
        for (unsigned l : lens) total += l;
        if (total > s->limits.max_sum_lengths)
            fail(Errc::limit, "sum of lengths " + std::to_string(total) + " exceeds the guard " +
                                  std::to_string(s->limits.max_sum_lengths));
        ExpansionMode mode = moment_mode ? ExpansionMode::moment : ExpansionMode::boolean_cumulant;
        std::map<Partition, UniPoly> expansion = product_expansion(lens, mode);
        Json j;
        Json ls = Json::array();
        for (unsigned l : lens) ls.push_back(l);
        j["lengths"] = std::move(ls);
        j["mode"] = moment_mode ? "moment" : "boolean";
        Json terms = Json::array();
        for (const auto& [mu, coeff] : expansion) {
            Json t;
            t["mu"] = partition_json(mu);
            t["coeff"] = coeff_json(coeff);
            terms.push_back(std::move(t));
        }
        j["terms"] = std::move(terms);
        *out = dup_string(dump_json(j));
        return JK_OK;
    });
}

JK_API int jk_verify_json(jk_session* s, const char* suite, int max_size, char** out) {
    return guarded(s, out, [&]() -> int {
        if (!suite) {
            s->last_error = "null argument";
            return JK_E_USAGE;
        }
        if (max_size < 0) {
            s->last_error = "negative size bound";
            return JK_E_USAGE;
        }
        SuiteReport rep = run_suite(suite, static_cast<unsigned>(max_size));
        *out = dup_string(dump_json(suite_report_json(rep)));
        if (!rep.all_pass()) {
            s->last_error = "suite '" + rep.suite + "' reported failures";
            return JK_E_VERIFY;
        }
        return JK_OK;
    });
}

} // extern "C"
